#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <vector>

#include "qa/matrix.hpp"
#include "qa/quiver.hpp"

namespace qa {

struct RelTerm {
    Rat coeff;
    Path path;
};

/// A linear combination of parallel paths of length >= 2.
using Relation = std::vector<RelTerm>;

class BoundAlgebra;
using AlgebraRef = std::shared_ptr<const BoundAlgebra>;

class NotAdmissibleError : public QaError {
  public:
    explicit NotAdmissibleError(int l_max)
        : QaError("ideal is not admissible within truncation " + std::to_string(l_max)) {}
};

/// Bound quiver algebra A = kQ/I, realized inside the truncated path algebra
/// kQ/J^L_max. The basis is the set of non-pivot path monomials after row
/// reduction of the two-sided ideal closure; normal_form reduces against that
/// row-echelon ideal basis.
class BoundAlgebra {
  public:
    static AlgebraRef from_presentation(const Quiver& q, const std::vector<Relation>& rels,
                                        FieldSpec field, int l_max = 12) {
        auto a = std::shared_ptr<BoundAlgebra>(new BoundAlgebra());
        a->quiver_ = q;
        a->field_ = field;
        a->relations_ = rels;
        a->truncation_ = l_max;
        a->build();
        return a;
    }

    const Quiver& quiver() const { return quiver_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int truncation() const { return truncation_; }
    int loewy_bound() const { return loewy_bound_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    /// Basis path of the i-th basis element.
    const Path& basis_path(int i) const { return ambient_[basis_[i]]; }

    int basis_source(int i) const { return basis_path(i).source; }
    int basis_target(int i) const { return basis_path(i).target(quiver_); }

    /// Basis position of the trivial path at vertex v.
    int trivial_basis_index(int v) const { return trivial_basis_[v]; }

    /// Coefficient vector over the basis of an arbitrary formal sum of paths.
    /// Paths of length >= loewy bound are zero in A.
    std::vector<Rat> normal_form(const std::vector<RelTerm>& element) const {
        FieldOps ops(field_);
        std::vector<Rat> amb(ambient_.size(), Rat(0));
        for (const auto& t : element) {
            validate_path(quiver_, t.path);
            if (t.path.length() >= truncation_) continue;  // in J^loewy ⊆ I
            int idx = ambient_index(t.path);
            amb[idx] = ops.add(amb[idx], ops.reduce(t.coeff));
        }
        reduce_ambient(amb);
        std::vector<Rat> out(basis_.size(), Rat(0));
        for (size_t i = 0; i < basis_.size(); ++i) out[i] = amb[basis_[i]];
        return out;
    }

    /// Structure constants: product of basis elements i and j over the basis.
    const std::vector<std::pair<int, Rat>>& multiply(int i, int j) const {
        return mult_table_[static_cast<size_t>(i) * basis_.size() + j];
    }

    /// Opposite algebra: opposite quiver, relation words reversed.
    AlgebraRef opposite() const {
        Quiver opq = quiver_.opposite();
        std::vector<Relation> oprels;
        oprels.reserve(relations_.size());
        for (const auto& rel : relations_) {
            Relation r;
            for (const auto& t : rel) {
                Path p;
                p.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
                p.source = t.path.target(quiver_);
                r.push_back({t.coeff, p});
            }
            oprels.push_back(std::move(r));
        }
        return from_presentation(opq, oprels, field_, truncation_);
    }

    /// Stable identity of the presentation; guards registry files.
    std::string fingerprint() const {
        uint64_t h = 14695981039346656037ull;
        auto mix = [&h](const std::string& s) {
            for (unsigned char c : s) {
                h ^= c;
                h *= 1099511628211ull;
            }
            h ^= 0xff;
            h *= 1099511628211ull;
        };
        mix(field_.str());
        mix(std::to_string(truncation_));
        for (const auto& v : quiver_.vertices()) mix(v);
        for (const auto& a : quiver_.arrows())
            mix(a.label + ":" + quiver_.vertex(a.src) + ">" + quiver_.vertex(a.dst));
        for (const auto& rel : relations_) {
            std::string s;
            for (const auto& t : rel) s += rat_to_string(t.coeff) + "." + t.path.str(quiver_) + "+";
            mix(s);
        }
        char buf[17];
        snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return std::string(buf);
    }

    int ambient_dim() const { return static_cast<int>(ambient_.size()); }

  private:
    BoundAlgebra() = default;

    int ambient_index(const Path& p) const {
        auto it = ambient_idx_.find(p);
        if (it == ambient_idx_.end()) throw QaError("path not in ambient basis");
        return it->second;
    }

    /// Reduce an ambient coefficient vector against the ideal RREF rows.
    void reduce_ambient(std::vector<Rat>& v) const {
        FieldOps ops(field_);
        for (size_t r = 0; r < ideal_pivots_.size(); ++r) {
            int pc = ideal_pivots_[r];
            if (v[pc] == 0) continue;
            Rat f = v[pc];
            for (int c = pc; c < static_cast<int>(ambient_.size()); ++c) {
                const Rat& rc = ideal_rref_.at(static_cast<int>(r), c);
                if (rc == 0) continue;
                v[c] = ops.sub(v[c], ops.mul(f, rc));
            }
        }
    }

    std::vector<Rat> path_times_arrow(const std::vector<Rat>& v, int arrow, bool on_right) const {
        FieldOps ops(field_);
        std::vector<Rat> out(ambient_.size(), Rat(0));
        const Arrow& a = quiver_.arrow(arrow);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            const Path& p = ambient_[i];
            if (p.length() + 1 >= truncation_) continue;
            Path np;
            if (on_right) {
                if (p.target(quiver_) != a.src) continue;
                np = p;
                if (np.trivial()) np.source = p.source;
                np.arrows.push_back(arrow);
            } else {
                if (a.dst != p.source) continue;
                np.source = a.src;
                np.arrows.push_back(arrow);
                np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
            }
            int idx = ambient_index(np);
            out[idx] = ops.add(out[idx], v[i]);
        }
        return out;
    }

    void build() {
        FieldOps ops(field_);
        if (truncation_ < 2) throw QaError("truncation must be >= 2");
        ambient_ = paths_up_to(quiver_, truncation_);
        for (size_t i = 0; i < ambient_.size(); ++i) ambient_idx_[ambient_[i]] = static_cast<int>(i);

        // Validate relations and seed the closure.
        std::vector<std::vector<Rat>> gens;
        for (const auto& rel : relations_) {
            if (rel.empty()) throw QaError("empty relation");
            int src = -1, dst = -1;
            bool any_nonzero = false;
            std::vector<Rat> v(ambient_.size(), Rat(0));
            for (const auto& t : rel) {
                validate_path(quiver_, t.path);
                if (t.path.length() < 2)
                    throw QaError("relation path " + t.path.str(quiver_) + " not in J^2");
                if (t.path.length() >= truncation_)
                    throw QaError("relation path " + t.path.str(quiver_) +
                                  " has length >= truncation " + std::to_string(truncation_));
                if (src < 0) {
                    src = t.path.source;
                    dst = t.path.target(quiver_);
                } else if (t.path.source != src || t.path.target(quiver_) != dst) {
                    throw QaError("relation paths do not share source/target");
                }
                Rat c = ops.reduce(t.coeff);
                if (c != 0) any_nonzero = true;
                int idx = ambient_index(t.path);
                v[idx] = ops.add(v[idx], c);
            }
            if (!any_nonzero) throw QaError("relation has all-zero coefficients");
            gens.push_back(std::move(v));
        }

        // Two-sided ideal closure inside kQ/J^truncation: multiply the current
        // spanning rows by arrows on both sides until the span stabilizes.
        std::vector<std::vector<Rat>> rows;  // maintained in echelon form
        std::vector<int> pivots;
        auto insert_row = [&](std::vector<Rat> v) -> bool {
            // reduce against current rows
            for (size_t r = 0; r < pivots.size(); ++r) {
                if (v[pivots[r]] == 0) continue;
                Rat f = v[pivots[r]];
                for (size_t c = 0; c < v.size(); ++c)
                    if (rows[r][c] != 0) v[c] = ops.sub(v[c], ops.mul(f, rows[r][c]));
            }
            int pc = -1;
            for (size_t c = 0; c < v.size(); ++c)
                if (v[c] != 0) {
                    pc = static_cast<int>(c);
                    break;
                }
            if (pc < 0) return false;
            Rat inv = ops.inv(v[pc]);
            for (size_t c = pc; c < v.size(); ++c)
                if (v[c] != 0) v[c] = ops.mul(v[c], inv);
            // back-substitute into existing rows
            for (size_t r = 0; r < rows.size(); ++r) {
                if (rows[r][pc] == 0) continue;
                Rat f = rows[r][pc];
                for (size_t c = 0; c < v.size(); ++c)
                    if (v[c] != 0) rows[r][c] = ops.sub(rows[r][c], ops.mul(f, v[c]));
            }
            rows.push_back(std::move(v));
            pivots.push_back(pc);
            return true;
        };

        std::vector<std::vector<Rat>> work = gens;
        while (!work.empty()) {
            std::vector<std::vector<Rat>> next;
            for (auto& g : work) {
                if (!insert_row(g)) continue;
                const std::vector<Rat>& added = rows.back();
                for (int a = 0; a < quiver_.num_arrows(); ++a) {
                    next.push_back(path_times_arrow(added, a, true));
                    next.push_back(path_times_arrow(added, a, false));
                }
            }
            work = std::move(next);
        }

        // Sort rows by pivot column so reduce_ambient sweeps left to right.
        std::vector<size_t> order(rows.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
        ideal_rref_ = Matrix(static_cast<int>(rows.size()), static_cast<int>(ambient_.size()), field_);
        ideal_pivots_.clear();
        for (size_t k = 0; k < order.size(); ++k) {
            for (size_t c = 0; c < ambient_.size(); ++c)
                ideal_rref_.at(static_cast<int>(k), static_cast<int>(c)) = rows[order[k]][c];
            ideal_pivots_.push_back(pivots[order[k]]);
        }

        std::vector<bool> is_pivot(ambient_.size(), false);
        for (int p : ideal_pivots_) is_pivot[p] = true;

        // Admissibility: minimal L < truncation with every length-L path in I.
        loewy_bound_ = -1;
        for (int L = 2; L < truncation_; ++L) {
            bool ok = true;
            for (size_t i = 0; i < ambient_.size() && ok; ++i) {
                if (ambient_[i].length() != L) continue;
                std::vector<Rat> v(ambient_.size(), Rat(0));
                v[i] = 1;
                reduce_ambient(v);
                for (const auto& x : v)
                    if (x != 0) {
                        ok = false;
                        break;
                    }
            }
            if (ok) {
                loewy_bound_ = L;
                break;
            }
        }
        if (loewy_bound_ < 0) {
            // J^truncation = 0 already in kQ when no path reaches that length,
            // so the ideal is admissible with L = truncation.
            bool any_full_length = false;
            for (size_t i = 0; i < ambient_.size() && !any_full_length; ++i) {
                if (ambient_[i].length() != truncation_ - 1) continue;
                // a path already in I only produces extensions inside I
                std::vector<Rat> v(ambient_.size(), Rat(0));
                v[i] = 1;
                reduce_ambient(v);
                bool in_ideal = true;
                for (const auto& x : v)
                    if (x != 0) {
                        in_ideal = false;
                        break;
                    }
                if (in_ideal) continue;
                int t = ambient_[i].target(quiver_);
                for (const auto& arr : quiver_.arrows())
                    if (arr.src == t) {
                        any_full_length = true;
                        break;
                    }
            }
            if (!any_full_length) loewy_bound_ = truncation_;
        }
        if (loewy_bound_ < 0) throw NotAdmissibleError(truncation_);

        basis_.clear();
        for (size_t i = 0; i < ambient_.size(); ++i)
            if (!is_pivot[i] && ambient_[i].length() < loewy_bound_) basis_.push_back(static_cast<int>(i));
        basis_pos_.assign(ambient_.size(), -1);
        for (size_t i = 0; i < basis_.size(); ++i) basis_pos_[basis_[i]] = static_cast<int>(i);

        trivial_basis_.assign(quiver_.num_vertices(), -1);
        for (size_t i = 0; i < basis_.size(); ++i)
            if (ambient_[basis_[i]].trivial()) trivial_basis_[ambient_[basis_[i]].source] = static_cast<int>(i);

        build_mult_table();
    }

    void build_mult_table() {
        size_t n = basis_.size();
        mult_table_.assign(n * n, {});
        for (size_t i = 0; i < n; ++i) {
            const Path& p = ambient_[basis_[i]];
            for (size_t j = 0; j < n; ++j) {
                const Path& q = ambient_[basis_[j]];
                if (p.target(quiver_) != q.source) continue;
                Path prod = compose(quiver_, p, q);
                if (prod.length() >= loewy_bound_) continue;  // in J^loewy ⊆ I
                std::vector<Rat> nf = normal_form({{Rat(1), prod}});
                std::vector<std::pair<int, Rat>> entry;
                for (size_t k = 0; k < nf.size(); ++k)
                    if (nf[k] != 0) entry.emplace_back(static_cast<int>(k), nf[k]);
                mult_table_[i * n + j] = std::move(entry);
            }
        }
    }

    Quiver quiver_;
    FieldSpec field_;
    std::vector<Relation> relations_;
    int truncation_ = 0;
    int loewy_bound_ = 0;
    std::vector<Path> ambient_;
    std::map<Path, int> ambient_idx_;
    Matrix ideal_rref_;
    std::vector<int> ideal_pivots_;
    std::vector<int> basis_;
    std::vector<int> basis_pos_;
    std::vector<int> trivial_basis_;
    std::vector<std::vector<std::pair<int, Rat>>> mult_table_;
};

inline bool same_algebra(const AlgebraRef& a, const AlgebraRef& b) {
    return a == b || a->fingerprint() == b->fingerprint();
}

}  // namespace qa
