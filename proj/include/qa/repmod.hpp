#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qa/algebra.hpp"

namespace qa {

class NotBoundError : public QaError {
  public:
    explicit NotBoundError(const std::string& rel)
        : QaError("representation is not bound: T_rho != 0 for relation " + rel) {}
};

/// A finite-dimensional representation bound by the algebra's ideal:
/// vector spaces at vertices, a matrix per arrow. T_a is (dim target) x
/// (dim source) acting on column vectors of the source space; paths act by
/// composing in path order (first arrow applied first).
class Representation {
  public:
    Representation() = default;

    /// Validates shapes and the bound condition T_rho = 0.
    static Representation make(AlgebraRef alg, std::vector<int> dims, std::vector<Matrix> maps) {
        Representation r = make_unchecked(std::move(alg), std::move(dims), std::move(maps));
        r.check_bound();
        return r;
    }

    /// For internal constructions whose boundness is structural.
    static Representation make_unchecked(AlgebraRef alg, std::vector<int> dims,
                                         std::vector<Matrix> maps) {
        Representation r;
        const Quiver& q = alg->quiver();
        if (static_cast<int>(dims.size()) != q.num_vertices())
            throw QaError("representation: dims size mismatch");
        if (static_cast<int>(maps.size()) != q.num_arrows())
            throw QaError("representation: maps size mismatch");
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            if (maps[a].rows() != dims[ar.dst] || maps[a].cols() != dims[ar.src])
                throw QaError("representation: map shape mismatch at arrow " + ar.label);
            if (maps[a].field() != alg->field())
                throw QaError("representation: field mismatch at arrow " + ar.label);
        }
        r.alg_ = std::move(alg);
        r.dims_ = std::move(dims);
        r.maps_ = std::move(maps);
        return r;
    }

    static Representation zero(AlgebraRef alg) {
        const Quiver& q = alg->quiver();
        std::vector<int> dims(q.num_vertices(), 0);
        std::vector<Matrix> maps;
        for (int a = 0; a < q.num_arrows(); ++a)
            maps.push_back(Matrix::zero(0, 0, alg->field()));
        return make_unchecked(alg, std::move(dims), std::move(maps));
    }

    const AlgebraRef& algebra() const { return alg_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    const Matrix& map(int a) const { return maps_[a]; }
    const std::vector<Matrix>& maps() const { return maps_; }

    int total_dim() const {
        int t = 0;
        for (int d : dims_) t += d;
        return t;
    }

    bool is_zero() const { return total_dim() == 0; }

    /// T_w for a path w (identity for trivial paths).
    Matrix path_action(const Path& p) const {
        Matrix m = Matrix::identity(dims_[p.source], alg_->field());
        for (int a : p.arrows) m = maps_[a] * m;
        return m;
    }

    /// First violated generating relation, if any.
    std::optional<std::string> violated_relation() const {
        FieldOps ops(alg_->field());
        for (const auto& rel : alg_->relations()) {
            int src = rel.front().path.source;
            int dst = rel.front().path.target(alg_->quiver());
            Matrix acc = Matrix::zero(dims_[dst], dims_[src], alg_->field());
            for (const auto& t : rel) acc = acc + path_action(t.path).scaled(ops.reduce(t.coeff));
            if (!acc.is_zero()) {
                std::string s;
                for (size_t i = 0; i < rel.size(); ++i) {
                    if (i) s += " + ";
                    s += rat_to_string(rel[i].coeff) + "*" + rel[i].path.str(alg_->quiver());
                }
                return s;
            }
        }
        return std::nullopt;
    }

    void check_bound() const {
        auto v = violated_relation();
        if (v) throw NotBoundError(*v);
    }

    bool structurally_equal(const Representation& o) const {
        return dims_ == o.dims_ && maps_ == o.maps_;
    }

  private:
    AlgebraRef alg_;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

/// A subrepresentation given by per-vertex embedding matrices into a parent.
struct SubRep {
    Representation rep;
    std::vector<Matrix> embed;  // parent_dim(v) x sub_dim(v), independent columns
};

struct QuotientRep {
    Representation rep;
    std::vector<Matrix> proj;  // quot_dim(v) x parent_dim(v)
};

/// A morphism between representations: one matrix per vertex.
using Hom = std::vector<Matrix>;

inline void require_same_algebra(const Representation& m, const Representation& n) {
    if (!same_algebra(m.algebra(), n.algebra())) throw QaError("algebra mismatch");
}

inline Representation direct_sum(const Representation& m, const Representation& n) {
    require_same_algebra(m, n);
    const Quiver& q = m.algebra()->quiver();
    std::vector<int> dims(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) dims[v] = m.dim(v) + n.dim(v);
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a)
        maps.push_back(Matrix::block_diag(m.map(a), n.map(a)));
    return Representation::make_unchecked(m.algebra(), std::move(dims), std::move(maps));
}

inline Representation direct_sum(AlgebraRef alg, const std::vector<Representation>& parts) {
    Representation acc = Representation::zero(alg);
    for (const auto& p : parts) acc = direct_sum(acc, p);
    return acc;
}

/// Induced representation on a family of subspaces stable under all arrows.
inline SubRep sub_from_embeddings(const Representation& m, std::vector<Matrix> embed) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<int> dims(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) dims[v] = embed[v].cols();
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        auto x = embed[ar.dst].solve_matrix(m.map(a) * embed[ar.src]);
        if (!x) throw QaError("sub_from_embeddings: subspace not stable under " + ar.label);
        maps.push_back(std::move(*x));
    }
    return {Representation::make_unchecked(m.algebra(), std::move(dims), std::move(maps)),
            std::move(embed)};
}

/// Quotient by a stable family of subspaces. Coordinates on the quotient are
/// the non-pivot standard coordinates relative to the embedding columns.
inline QuotientRep quotient(const Representation& m, const std::vector<Matrix>& embed) {
    const Quiver& q = m.algebra()->quiver();
    FieldSpec f = m.algebra()->field();
    std::vector<Matrix> comp(q.num_vertices());  // complement columns (standard basis vectors)
    std::vector<Matrix> proj(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) {
        int d = m.dim(v);
        Matrix big = embed[v].hstack(Matrix::identity(d, f));
        auto ech = big.rref();
        std::vector<int> comp_cols;
        for (int p : ech.pivots)
            if (p >= embed[v].cols()) comp_cols.push_back(p - embed[v].cols());
        Matrix c(d, static_cast<int>(comp_cols.size()), f);
        for (size_t k = 0; k < comp_cols.size(); ++k) c.at(comp_cols[k], static_cast<int>(k)) = 1;
        comp[v] = c;
        // [E C] is square invertible; the bottom rows of its inverse give
        // quotient coordinates.
        Matrix full = embed[v].hstack(c);
        auto inv = full.inverse();
        if (!inv) throw QaError("quotient: embedding columns not independent");
        proj[v] = inv->submatrix(embed[v].cols(), 0, c.cols(), d);
    }
    std::vector<int> dims(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) dims[v] = comp[v].cols();
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        maps.push_back(proj[ar.dst] * (m.map(a) * comp[ar.src]));
    }
    return {Representation::make_unchecked(m.algebra(), std::move(dims), std::move(maps)),
            std::move(proj)};
}

/// rad M = M J: spanned at each vertex by the images of all incoming arrows.
inline SubRep radical(const Representation& m) {
    const Quiver& q = m.algebra()->quiver();
    FieldSpec f = m.algebra()->field();
    std::vector<Matrix> embed(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) {
        Matrix acc(m.dim(v), 0, f);
        for (int a = 0; a < q.num_arrows(); ++a)
            if (q.arrow(a).dst == v) acc = acc.hstack(m.map(a));
        embed[v] = acc.column_space_basis();
    }
    return sub_from_embeddings(m, std::move(embed));
}

/// M / rad M: semisimple, all maps zero.
inline Representation top(const Representation& m) {
    SubRep r = radical(m);
    const Quiver& q = m.algebra()->quiver();
    std::vector<int> dims(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) dims[v] = m.dim(v) - r.rep.dim(v);
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        maps.push_back(Matrix::zero(dims[ar.dst], dims[ar.src], m.algebra()->field()));
    }
    return Representation::make_unchecked(m.algebra(), std::move(dims), std::move(maps));
}

/// Least n with M J^n = 0.
inline int loewy_length(const Representation& m) {
    Representation cur = m;
    int n = 0;
    while (!cur.is_zero()) {
        cur = radical(cur).rep;
        ++n;
        if (n > m.total_dim() + 1) throw QaError("loewy_length: radical series does not terminate");
    }
    return n;
}

/// Basis of Hom(M, N): all vertex-indexed matrix families satisfying the
/// commuting-square condition f_{t(a)} T_a = T'_a f_{s(a)}.
inline std::vector<Hom> hom_space(const Representation& m, const Representation& n) {
    require_same_algebra(m, n);
    const Quiver& q = m.algebra()->quiver();
    FieldSpec f = m.algebra()->field();
    FieldOps ops(f);

    std::vector<int> offset(q.num_vertices() + 1, 0);
    for (int v = 0; v < q.num_vertices(); ++v)
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    int unknowns = offset[q.num_vertices()];

    int eqs = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        eqs += n.dim(ar.dst) * m.dim(ar.src);
    }

    Matrix sys(eqs, unknowns, f);
    int row = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        int s = ar.src, t = ar.dst;
        // (f_t T_a)_{ij} - (T'_a f_s)_{ij} = 0
        for (int i = 0; i < n.dim(t); ++i)
            for (int j = 0; j < m.dim(s); ++j) {
                for (int k = 0; k < m.dim(t); ++k) {
                    const Rat& c = m.map(a).at(k, j);
                    if (c == 0) continue;
                    int col = offset[t] + i * m.dim(t) + k;
                    sys.at(row, col) = ops.add(sys.at(row, col), c);
                }
                for (int k = 0; k < n.dim(s); ++k) {
                    const Rat& c = n.map(a).at(i, k);
                    if (c == 0) continue;
                    int col = offset[s] + k * m.dim(s) + j;
                    sys.at(row, col) = ops.sub(sys.at(row, col), c);
                }
                ++row;
            }
    }

    Matrix ker = sys.kernel_basis();
    std::vector<Hom> basis;
    for (int b = 0; b < ker.cols(); ++b) {
        Hom h;
        for (int v = 0; v < q.num_vertices(); ++v) {
            Matrix fv(n.dim(v), m.dim(v), f);
            for (int i = 0; i < n.dim(v); ++i)
                for (int j = 0; j < m.dim(v); ++j)
                    fv.at(i, j) = ker.at(offset[v] + i * m.dim(v) + j, b);
            h.push_back(std::move(fv));
        }
        basis.push_back(std::move(h));
    }
    return basis;
}

inline bool hom_is_invertible(const Hom& h) {
    for (const auto& fv : h)
        if (!fv.is_invertible()) return false;
    return true;
}

inline Hom hom_add(const Hom& a, const Hom& b) {
    Hom r;
    for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

inline Hom hom_sub(const Hom& a, const Hom& b) {
    Hom r;
    for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
    return r;
}

inline Hom hom_compose(const Hom& second, const Hom& first) {
    Hom r;
    for (size_t i = 0; i < second.size(); ++i) r.push_back(second[i] * first[i]);
    return r;
}

// ---- distinguished modules -------------------------------------------------

/// Simple module at a vertex: one-dimensional there, zero elsewhere.
inline Representation simple(AlgebraRef alg, int v) {
    const Quiver& q = alg->quiver();
    if (v < 0 || v >= q.num_vertices()) throw QaError("simple: unknown vertex");
    std::vector<int> dims(q.num_vertices(), 0);
    dims[v] = 1;
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        maps.push_back(Matrix::zero(dims[ar.dst], dims[ar.src], alg->field()));
    }
    return Representation::make_unchecked(alg, std::move(dims), std::move(maps));
}

inline Representation simple(AlgebraRef alg, const std::string& vertex) {
    return simple(alg, alg->quiver().vertex_index(vertex));
}

/// Indecomposable projective P_v together with the algebra basis path that
/// each local basis vector represents (needed for cover lifts).
struct ProjectiveData {
    Representation rep;
    std::vector<std::vector<int>> basis_elements;  // per vertex: algebra basis indices
};

inline ProjectiveData indecomposable_projective_data(AlgebraRef alg, int v) {
    const Quiver& q = alg->quiver();
    if (v < 0 || v >= q.num_vertices()) throw QaError("projective: unknown vertex");
    FieldOps ops(alg->field());

    // Local basis at vertex w: algebra basis path-classes starting at v,
    // ending at w.
    std::vector<std::vector<int>> local(q.num_vertices());
    std::vector<int> pos(alg->dim(), -1);
    for (int b = 0; b < alg->dim(); ++b) {
        if (alg->basis_source(b) != v) continue;
        int w = alg->basis_target(b);
        pos[b] = static_cast<int>(local[w].size());
        local[w].push_back(b);
    }

    std::vector<int> dims(q.num_vertices());
    for (int w = 0; w < q.num_vertices(); ++w) dims[w] = static_cast<int>(local[w].size());

    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix t(dims[ar.dst], dims[ar.src], alg->field());
        int arrow_basis = -1;
        // the arrow as an algebra basis element (arrows survive: I ⊆ J^2)
        for (int b = 0; b < alg->dim(); ++b) {
            const Path& p = alg->basis_path(b);
            if (p.length() == 1 && p.arrows[0] == a) {
                arrow_basis = b;
                break;
            }
        }
        if (arrow_basis < 0) throw QaError("projective: arrow missing from basis");
        for (int j = 0; j < dims[ar.src]; ++j) {
            int pb = local[ar.src][j];
            for (const auto& [k, c] : alg->multiply(pb, arrow_basis)) {
                if (pos[k] < 0) throw QaError("projective: product escaped source block");
                t.at(pos[k], j) = ops.reduce(c);
            }
        }
        maps.push_back(std::move(t));
    }
    return {Representation::make_unchecked(alg, std::move(dims), std::move(maps)),
            std::move(local)};
}

inline Representation indecomposable_projective(AlgebraRef alg, int v) {
    return indecomposable_projective_data(alg, v).rep;
}

inline Representation indecomposable_projective(AlgebraRef alg, const std::string& vertex) {
    return indecomposable_projective(alg, alg->quiver().vertex_index(vertex));
}

/// Standard duality D: same dimension vector over the opposite algebra,
/// every arrow matrix transposed.
inline Representation dual_module(const Representation& m, AlgebraRef opposite) {
    const Quiver& q = m.algebra()->quiver();
    const Quiver& oq = opposite->quiver();
    std::vector<Matrix> maps(q.num_arrows(), Matrix());
    for (int a = 0; a < q.num_arrows(); ++a) {
        int oa = oq.arrow_index(q.arrow(a).label);
        maps[oa] = m.map(a).transpose();
    }
    return Representation::make(opposite, m.dims(), std::move(maps));
}

inline Representation dual_module(const Representation& m) {
    return dual_module(m, m.algebra()->opposite());
}

}  // namespace qa
