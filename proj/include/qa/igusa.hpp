#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qa/homology.hpp"

namespace qa {

class HorizonExceeded : public QaError {
  public:
    explicit HorizonExceeded(const std::string& msg) : QaError(msg) {}
};

/// Element of the stable Grothendieck group: integer combination of
/// isomorphism classes of non-projective indecomposables. Entries are
/// nonzero by convention.
using K0Element = std::map<ClassId, long>;

/// Shared state for stable-syzygy computations over one algebra: an
/// isomorphism-class registry plus a memoized class-level syzygy operator.
class K0Context {
  public:
    explicit K0Context(AlgebraRef alg) : reg_(std::move(alg)) {}

    IsoRegistry& registry() { return reg_; }
    const AlgebraRef& algebra() const { return reg_.algebra(); }

    /// Non-projective summand classes of m, with multiplicity.
    K0Element k0_class(const Representation& m) {
        K0Element out;
        if (m.is_zero()) return out;
        for (const auto& [id, mult] : reg_.summand_classes(m))
            if (!reg_.is_projective(id)) out[id] = mult;
        return out;
    }

    /// Stable syzygy of a single class.
    const K0Element& omega_bar(ClassId id) {
        auto it = omega_.find(id);
        if (it != omega_.end()) return it->second;
        K0Element v;
        if (!reg_.is_projective(id)) v = k0_class(syzygy(reg_.representative(id)));
        return omega_.emplace(id, std::move(v)).first->second;
    }

    /// Linear extension to arbitrary elements.
    K0Element omega_bar(const K0Element& v) {
        K0Element out;
        for (const auto& [id, c] : v) {
            if (c == 0) continue;
            for (const auto& [jd, m] : omega_bar(id)) {
                out[jd] += c * m;
                if (out[jd] == 0) out.erase(jd);
            }
        }
        return out;
    }

  private:
    IsoRegistry reg_;
    std::map<ClassId, K0Element> omega_;
};

/// Classes reachable from the given ones under repeated stable syzygy.
/// Stops (finite = false) once more than max_classes appear.
struct ClosureResult {
    bool finite = false;
    std::vector<ClassId> classes;  // discovery order, deterministic
};

inline ClosureResult syzygy_class_closure(K0Context& ctx, const std::vector<ClassId>& gens,
                                          int max_classes = 500) {
    ClosureResult r;
    std::set<ClassId> seen;
    std::vector<ClassId> queue = gens;
    for (size_t i = 0; i < queue.size(); ++i) {
        ClassId id = queue[i];
        if (!seen.insert(id).second) continue;
        r.classes.push_back(id);
        if (static_cast<int>(r.classes.size()) > max_classes) return r;
        for (const auto& [jd, m] : ctx.omega_bar(id)) queue.push_back(jd);
    }
    r.finite = true;
    return r;
}

inline ClosureResult syzygy_finite_subgroup(K0Context& ctx, const Representation& m,
                                            int max_classes = 500) {
    std::vector<ClassId> gens;
    for (const auto& [id, c] : ctx.k0_class(m)) gens.push_back(id);
    return syzygy_class_closure(ctx, gens, max_classes);
}

namespace detail {

/// Rank over Q of a list of K0 elements.
inline int k0_rank(const std::vector<K0Element>& vs) {
    std::set<ClassId> support;
    for (const auto& v : vs)
        for (const auto& [id, c] : v)
            if (c != 0) support.insert(id);
    std::map<ClassId, int> row;
    int n = 0;
    for (ClassId id : support) row[id] = n++;
    Matrix m(n, static_cast<int>(vs.size()), FieldSpec::rationals());
    for (size_t j = 0; j < vs.size(); ++j)
        for (const auto& [id, c] : vs[j]) m.at(row[id], static_cast<int>(j)) = Rat(c);
    return m.rank();
}

}  // namespace detail

/// phi of a set of generator classes: the Fitting index of the stable syzygy
/// operator on the subgroup they generate. The classes reachable from the
/// generators form a finite set of size u (or we give up); within the span of
/// those classes the operator is an endomorphism of Q^u, so by Fitting's
/// lemma its rank sequence cannot drop after step u. phi is therefore one
/// past the last rank drop among the first u steps. A bare "first repeated
/// rank" is not enough: rank sequences such as 2,2,1,0 occur, e.g. for
/// S1 + S2 over a linear A4 quiver with radical square zero.
/// Some algebras have syzygy-infinite modules whose orbits never close (for
/// example, a syzygy walk can rescale a Jordan eigenvalue each time around a
/// cycle). The ranks are still non-increasing, so the sequence stabilizes
/// even then; we explore classes breadth-first in lockstep with the level
/// vectors and stop at the first of:
///   - the class set closes: finish the exact Fitting scan (certified);
///   - the rank hits 0: no further drop is possible (certified);
///   - the frontier is still open but the rank has been constant for
///     `window` consecutive steps: report the last drop. This is evidence,
///     not proof, of stabilization; callers needing a certificate must
///     supply an independent argument.
/// Throws HorizonExceeded when more than max_classes distinct classes appear
/// or no stop is reached within max_steps.
inline int phi_of_classes(K0Context& ctx, const std::vector<ClassId>& gens,
                          int max_classes = 500, int max_steps = 40, int window = 8) {
    if (gens.empty()) return 0;
    std::set<ClassId> known(gens.begin(), gens.end());
    std::vector<ClassId> frontier(known.begin(), known.end());

    std::vector<K0Element> level;
    for (ClassId g : gens) level.push_back(K0Element{{g, 1}});
    std::vector<int> ranks;
    ranks.push_back(detail::k0_rank(level));
    int last_drop = 0;
    int plateau = 0;

    for (int m = 1; m <= max_steps; ++m) {
        if (static_cast<int>(known.size()) > max_classes)
            throw HorizonExceeded("syzygy class exploration exceeded " +
                                  std::to_string(max_classes) + " classes");
        std::vector<ClassId> next;
        for (ClassId id : frontier)
            for (const auto& [jd, c] : ctx.omega_bar(id))
                if (known.insert(jd).second) next.push_back(jd);
        frontier = std::move(next);

        for (auto& v : level) v = ctx.omega_bar(v);
        ranks.push_back(detail::k0_rank(level));
        if (ranks[m] < ranks[m - 1]) {
            last_drop = m;
            plateau = 0;
        } else {
            ++plateau;
        }

        if (frontier.empty()) {
            // the reachable classes form a finite set of size u; by Fitting's
            // lemma no drop can occur past step u, so scan exactly that far
            int u = static_cast<int>(known.size());
            for (int t = m + 1; t <= u; ++t) {
                for (auto& v : level) v = ctx.omega_bar(v);
                ranks.push_back(detail::k0_rank(level));
            }
            for (int t = static_cast<int>(ranks.size()) - 2; t >= 0; --t)
                if (ranks[t] > ranks[t + 1]) return t + 1;
            return 0;
        }
        if (ranks[m] == 0) return last_drop;
        if (plateau >= window) return last_drop;
    }
    throw HorizonExceeded("syzygy rank sequence not settled after " +
                          std::to_string(max_steps) + " steps");
}

inline std::vector<ClassId> generator_classes(K0Context& ctx, const Representation& m) {
    std::vector<ClassId> gens;
    for (const auto& [id, c] : ctx.k0_class(m)) gens.push_back(id);
    return gens;
}

inline int phi(K0Context& ctx, const Representation& m, int max_classes = 500) {
    return phi_of_classes(ctx, generator_classes(ctx, m), max_classes);
}

/// phi of a direct sum given as a list, without materializing the sum:
/// the generated subgroup only depends on the set of summand classes.
inline int phi_suite(K0Context& ctx, const std::vector<Representation>& suite,
                     int max_classes = 500) {
    std::set<ClassId> gens;
    for (const auto& m : suite)
        for (const auto& [id, c] : ctx.k0_class(m)) gens.insert(id);
    return phi_of_classes(ctx, std::vector<ClassId>(gens.begin(), gens.end()), max_classes);
}

/// Independent oracle for the Fitting index: scan levels directly and test
/// whether the stable syzygy is injective on the span of the level vectors,
/// via ker(H) ⊆ ker(G) ⟺ rank([H; G]) = rank(H). The result is
/// 1 + (last failing level); callers must pass a horizon at least as large as
/// the class closure for the answer to be certified.
inline int phi_eta_oracle(K0Context& ctx, const std::vector<ClassId>& gens, int horizon) {
    if (gens.empty()) return 0;
    std::vector<K0Element> g;
    for (ClassId id : gens) g.push_back(K0Element{{id, 1}});
    int last_fail = -1;
    for (int m = 0; m <= horizon; ++m) {
        std::vector<K0Element> h;
        for (const auto& v : g) h.push_back(ctx.omega_bar(v));
        // stack G below H: same columns, disjoint row blocks (class ids are
        // registry indices, far below the offset)
        std::vector<K0Element> stacked;
        for (size_t j = 0; j < g.size(); ++j) {
            K0Element s = h[j];
            for (const auto& [id, c] : g[j]) s[id + 1000000] = c;
            stacked.push_back(std::move(s));
        }
        bool injective = detail::k0_rank(stacked) == detail::k0_rank(h);
        if (!injective) last_fail = m;
        g = std::move(h);
    }
    if (last_fail == horizon)
        throw HorizonExceeded("injectivity still failing at the oracle horizon");
    return last_fail + 1;
}

inline int phi_eta_oracle(K0Context& ctx, const Representation& m, int horizon) {
    return phi_eta_oracle(ctx, generator_classes(ctx, m), horizon);
}

/// Search for an explicit witness: an element v of the generated subgroup
/// with Omega-bar^n(v) = 0 and Omega-bar^{n-1}(v) != 0 for n = expected.
/// Coefficients range over [-bound, bound] with at most max_support nonzero.
struct PhiWitness {
    bool found = false;
    std::vector<long> coefficients;  // aligned with gens
    int depth = 0;
};

inline PhiWitness phi_witness_search(K0Context& ctx, const std::vector<ClassId>& gens,
                                     int expected, long bound = 3, int max_support = 3) {
    PhiWitness best;
    int k = static_cast<int>(gens.size());
    std::vector<long> coeff(k, 0);
    std::vector<int> idx;

    auto death_depth = [&](const K0Element& v0) -> int {
        K0Element v = v0;
        for (int n = 0; n <= expected + 1; ++n) {
            if (v.empty()) return n;
            v = ctx.omega_bar(v);
        }
        return -1;  // survives past expected: cannot witness
    };

    // enumerate supports of size 1..max_support, then coefficient tuples
    std::vector<std::vector<int>> supports;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (!cur.empty()) supports.push_back(cur);
        if (left == 0) return;
        for (int i = start; i < k; ++i) {
            cur.push_back(i);
            rec(i + 1, left - 1);
            cur.pop_back();
        }
    };
    rec(0, std::min(max_support, k));

    for (const auto& sup : supports) {
        int s = static_cast<int>(sup.size());
        std::vector<long> c(s, -bound);
        while (true) {
            bool all_zero = true;
            for (long x : c)
                if (x != 0) all_zero = false;
            if (!all_zero) {
                K0Element v;
                for (int i = 0; i < s; ++i)
                    if (c[i] != 0) v[gens[sup[i]]] += c[i];
                int d = death_depth(v);
                if (d > best.depth || (d == expected && !best.found)) {
                    best.depth = std::max(best.depth, d);
                    if (d == expected) {
                        best.found = true;
                        best.coefficients.assign(k, 0);
                        for (int i = 0; i < s; ++i) best.coefficients[sup[i]] = c[i];
                        return best;
                    }
                }
            }
            int pos = 0;
            while (pos < s && c[pos] == bound) {
                c[pos] = -bound;
                ++pos;
            }
            if (pos == s) break;
            ++c[pos];
        }
    }
    return best;
}

/// Exact witness for phi = n: a rational combination v of the generators with
/// Omega-bar^n(v) = 0 and Omega-bar^{n-1}(v) != 0, found by kernel
/// computation instead of search. Returns the coefficients, or nullopt.
inline std::optional<std::vector<Rat>> phi_rational_witness(K0Context& ctx,
                                                            const std::vector<ClassId>& gens,
                                                            int n) {
    if (n <= 0 || gens.empty()) return std::nullopt;
    std::vector<K0Element> prev(gens.size()), last(gens.size());
    for (size_t j = 0; j < gens.size(); ++j) last[j] = K0Element{{gens[j], 1}};
    for (int step = 0; step < n; ++step) {
        prev = last;
        for (auto& v : last) v = ctx.omega_bar(v);
    }
    std::set<ClassId> support;
    for (const auto& col : last)
        for (const auto& [id, c] : col) support.insert(id);
    std::map<ClassId, int> row;
    int nr = 0;
    for (ClassId id : support) row[id] = nr++;
    Matrix mn(nr, static_cast<int>(gens.size()), FieldSpec::rationals());
    for (size_t j = 0; j < gens.size(); ++j)
        for (const auto& [id, c] : last[j]) mn.at(row[id], static_cast<int>(j)) = Rat(c);
    Matrix ker = mn.kernel_basis();
    for (int k = 0; k < ker.cols(); ++k) {
        // check Omega-bar^{n-1} does not kill this kernel vector
        std::map<ClassId, Rat> rimg;
        for (size_t j = 0; j < gens.size(); ++j) {
            Rat c = ker.at(static_cast<int>(j), k);
            if (c == 0) continue;
            for (const auto& [id, m] : prev[j]) rimg[id] += c * Rat(m);
        }
        bool nonzero = false;
        for (const auto& [id, c] : rimg) nonzero = nonzero || c != 0;
        if (!nonzero) continue;
        std::vector<Rat> coeffs(gens.size());
        for (size_t j = 0; j < gens.size(); ++j) coeffs[j] = ker.at(static_cast<int>(j), k);
        return coeffs;
    }
    return std::nullopt;
}

/// phi of the direct sum of a family of modules: a certified lower bound for
/// the phi-dimension of the algebra.
inline int phi_lower_bound(K0Context& ctx, const std::vector<Representation>& suite,
                           int max_classes = 500) {
    return phi_suite(ctx, suite, max_classes);
}

/// Confirms phi(M) = max { n : some bounded integer combination v of the
/// generators has Omega-bar^n(v) = 0 and Omega-bar^{n-1}(v) != 0 }. One-sided:
/// a miss only means no witness exists within the search bound.
inline bool phi_characterization_check(K0Context& ctx, const Representation& m, long bound = 3,
                                       int max_support = 3, int max_classes = 500) {
    std::vector<ClassId> gens = generator_classes(ctx, m);
    int expected = phi_of_classes(ctx, gens, max_classes);
    if (expected == 0) return true;  // max over the empty combination set is 0
    PhiWitness w = phi_witness_search(ctx, gens, expected, bound, max_support);
    return w.found;
}

/// Standard sampling family for phi-dimension lower bounds: all simples, all
/// radicals of indecomposable projectives, and the first few syzygies of the
/// simples.
inline std::vector<Representation> default_phidim_suite(AlgebraRef alg, int syzygy_depth = 4) {
    std::vector<Representation> suite;
    const Quiver& q = alg->quiver();
    for (int v = 0; v < q.num_vertices(); ++v) suite.push_back(simple(alg, v));
    for (int v = 0; v < q.num_vertices(); ++v) {
        Representation r = radical(indecomposable_projective(alg, v)).rep;
        if (!r.is_zero()) suite.push_back(std::move(r));
    }
    for (int v = 0; v < q.num_vertices(); ++v) {
        Representation cur = simple(alg, v);
        for (int k = 1; k <= syzygy_depth; ++k) {
            cur = syzygy(cur);
            if (cur.is_zero()) break;
            suite.push_back(cur);
        }
    }
    return suite;
}

}  // namespace qa
