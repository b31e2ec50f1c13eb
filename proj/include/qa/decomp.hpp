#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qa/repmod.hpp"

namespace qa {

class CertificationFailed : public QaError {
  public:
    explicit CertificationFailed(const std::string& msg)
        : QaError("indecomposability certification failed: " + msg) {}
};

class NotIndecomposable : public QaError {
  public:
    NotIndecomposable() : QaError("module is not indecomposable") {}
};

namespace detail {

/// Dense univariate polynomials over the module's field, low degree first.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_monic(const FieldOps& ops, Poly p) {
    poly_trim(p);
    if (p.empty()) return p;
    Rat inv = ops.inv(p.back());
    for (auto& c : p) c = ops.mul(c, inv);
    return p;
}

inline Poly poly_mul(const FieldOps& ops, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = ops.add(out[i + j], ops.mul(a[i], b[j]));
    return out;
}

/// Remainder of a by b (b nonzero).
inline Poly poly_rem(const FieldOps& ops, Poly a, const Poly& b) {
    poly_trim(a);
    int db = poly_deg(b);
    Rat lead_inv = ops.inv(b.back());
    while (poly_deg(a) >= db) {
        Rat f = ops.mul(a.back(), lead_inv);
        int shift = poly_deg(a) - db;
        for (int i = 0; i <= db; ++i)
            a[shift + i] = ops.sub(a[shift + i], ops.mul(f, b[i]));
        poly_trim(a);
    }
    return a;
}

inline Poly poly_quot(const FieldOps& ops, Poly a, const Poly& b) {
    poly_trim(a);
    int db = poly_deg(b);
    if (poly_deg(a) < db) return {};
    Poly q(poly_deg(a) - db + 1, Rat(0));
    Rat lead_inv = ops.inv(b.back());
    while (poly_deg(a) >= db) {
        Rat f = ops.mul(a.back(), lead_inv);
        int shift = poly_deg(a) - db;
        q[shift] = f;
        for (int i = 0; i <= db; ++i)
            a[shift + i] = ops.sub(a[shift + i], ops.mul(f, b[i]));
        poly_trim(a);
    }
    return q;
}

inline Poly poly_gcd(const FieldOps& ops, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(ops, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(ops, std::move(a));
}

inline Poly poly_deriv(const FieldOps& ops, const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(ops.mul(p[i], ops.from_long(long(i))));
    poly_trim(d);
    return d;
}

inline Rat poly_eval(const FieldOps& ops, const Poly& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = ops.add(ops.mul(acc, x), p[i]);
    return acc;
}

inline Matrix poly_eval_matrix(const Poly& p, const Matrix& a) {
    Matrix acc(a.rows(), a.rows(), a.field());
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * a;
        for (int r = 0; r < acc.rows(); ++r)
            acc.at(r, r) = FieldOps(a.field()).add(acc.at(r, r), p[i]);
    }
    return acc;
}

/// Minimal polynomial of a square matrix, by finding the first linear
/// dependence among its vectorized powers.
inline Poly matrix_min_poly(const Matrix& a) {
    int n = a.rows();
    FieldOps ops(a.field());
    if (n == 0) return {Rat(1)};  // min poly of the empty operator is 1
    // rows of the echelon are vectorized powers; solve for the dependence
    std::vector<std::vector<Rat>> pows;  // vectorized a^0, a^1, ...
    Matrix cur = Matrix::identity(n, a.field());
    for (int k = 0;; ++k) {
        std::vector<Rat> v(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[static_cast<size_t>(i) * n + j] = cur.at(i, j);
        pows.push_back(std::move(v));
        // is the last power in the span of the previous ones?
        Matrix sys(n * n, k, a.field());
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < n * n; ++r) sys.at(r, c) = pows[c][r];
        Matrix rhs(n * n, 1, a.field());
        for (int r = 0; r < n * n; ++r) rhs.at(r, 0) = pows[k][r];
        if (auto sol = sys.solve_matrix(rhs)) {
            Poly p(k + 1, Rat(0));
            for (int c = 0; c < k; ++c) p[c] = ops.neg(sol->at(c, 0));
            p[k] = 1;
            return p;
        }
        cur = cur * a;
    }
}

/// Minimal polynomial of a module endomorphism: lcm over the vertex blocks.
inline Poly hom_min_poly(const FieldSpec& field, const Hom& f) {
    FieldOps ops(field);
    Poly acc = {Rat(1)};
    for (const auto& fv : f) {
        Poly mv = matrix_min_poly(fv);
        Poly g = poly_gcd(ops, acc, mv);
        acc = poly_mul(ops, poly_quot(ops, acc, g), mv);  // lcm
    }
    return poly_monic(ops, std::move(acc));
}

/// Rational roots of a polynomial (for rationals only; used to refine the
/// coprime factor list). Denominators are cleared first; candidate roots come
/// from divisors of the integral constant and leading coefficients.
inline std::vector<Rat> rational_roots(const FieldOps& ops, Poly p) {
    std::vector<Rat> roots;
    poly_trim(p);
    if (p.empty()) return roots;
    while (!p.empty() && p.front() == 0) {
        roots.push_back(Rat(0));
        p.erase(p.begin());
        break;  // squarefree input: the root 0 appears at most once
    }
    if (poly_deg(p) < 1) return roots;
    mpz_class den(1);
    for (const auto& c : p) {
        mpz_class d = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    mpz_class a0 = Rat(p.front() * den).get_num();
    mpz_class ad = Rat(p.back() * den).get_num();
    if (a0 < 0) a0 = -a0;
    if (ad < 0) ad = -ad;
    auto divisors = [](mpz_class x) {
        std::vector<mpz_class> out;
        if (x == 0) return out;
        for (mpz_class d(1); d * d <= x && out.size() < 4096; ++d)
            if (x % d == 0) {
                out.push_back(d);
                out.push_back(x / d);
            }
        return out;
    };
    for (const auto& num : divisors(a0))
        for (const auto& dd : divisors(ad))
            for (int sgn : {1, -1}) {
                Rat cand(num * sgn, dd);
                cand.canonicalize();
                if (poly_eval(ops, p, cand) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// Pairwise coprime factors of p covering all of its irreducible factors:
/// squarefree (Yun) components, each further refined by its rational roots.
/// Multiplicities are dropped; stable-kernel iteration absorbs them.
inline std::vector<Poly> coprime_components(const FieldSpec& field, const Poly& p) {
    FieldOps ops(field);
    std::vector<Poly> sqfree;
    {
        Poly a = poly_monic(ops, p);
        if (poly_deg(a) < 1) return {};
        Poly g = poly_gcd(ops, a, poly_deriv(ops, a));
        Poly w = poly_quot(ops, a, g);
        while (poly_deg(w) > 0) {
            Poly y = poly_gcd(ops, w, g);
            Poly comp = poly_quot(ops, w, y);
            if (poly_deg(comp) > 0) sqfree.push_back(comp);
            w = std::move(y);
            g = poly_quot(ops, g, w);
        }
    }
    std::vector<Poly> out;
    for (const Poly& s : sqfree) {
        Poly rest = s;
        if (field.kind == FieldSpec::Kind::Rationals) {
            for (const Rat& r : rational_roots(ops, s)) {
                out.push_back({ops.neg(r), Rat(1)});
                rest = poly_quot(ops, rest, out.back());
            }
        } else {
            for (long r = 0; r < field.p; ++r) {
                Rat x = ops.from_long(r);
                if (poly_eval(ops, rest, x) != 0) continue;
                out.push_back({ops.neg(x), Rat(1)});
                rest = poly_quot(ops, rest, out.back());
                if (poly_deg(rest) < 1) break;
            }
        }
        if (poly_deg(rest) > 0) out.push_back(poly_monic(ops, rest));
    }
    return out;
}

/// Splitting along a non-trivial Fitting decomposition, if some endomorphism
/// built from the basis provides one: M = ker(f^N) ⊕ im(f^N) for stabilizing
/// N. The stable kernel is grown by preimage iteration and the stable image
/// by forward iteration, re-echelonizing at each step; this keeps rational
/// entries small, unlike forming the matrix power f^dim directly.
inline bool try_fitting_split(const Representation& m, const std::vector<Hom>& end_basis,
                              const Hom& f, Representation& out1, Representation& out2) {
    int d = m.total_dim();
    (void)end_basis;
    const Quiver& q = m.algebra()->quiver();
    int nv = q.num_vertices();
    std::vector<Matrix> ker(nv, Matrix(0, 0, m.algebra()->field()));
    std::vector<Matrix> im(nv, Matrix(0, 0, m.algebra()->field()));
    for (int v = 0; v < nv; ++v) {
        ker[v] = Matrix(m.dim(v), 0, m.algebra()->field());
        im[v] = Matrix::identity(m.dim(v), m.algebra()->field());
    }
    // one extra pass after both chains stop moving, capped by the dimension
    for (int step = 0; step <= d; ++step) {
        bool moved = false;
        for (int v = 0; v < nv; ++v) {
            // next kernel: preimage of the current one, i.e. ker(C f) where
            // the rows of C span the left annihilator of the current kernel
            Matrix c = ker[v].transpose().kernel_basis().transpose();
            Matrix nk = (c * f[v]).kernel_basis();
            if (nk.cols() != ker[v].cols()) moved = true;
            ker[v] = std::move(nk);
            Matrix ni = (f[v] * im[v]).column_space_basis();
            if (ni.cols() != im[v].cols()) moved = true;
            im[v] = std::move(ni);
        }
        if (!moved) break;
    }
    int ker_dim = 0, im_dim = 0;
    for (int v = 0; v < nv; ++v) {
        ker_dim += ker[v].cols();
        im_dim += im[v].cols();
    }
    if (ker_dim == 0 || ker_dim == d) return false;
    if (ker_dim + im_dim != d) throw QaError("fitting split: chains did not stabilize");
    out1 = sub_from_embeddings(m, std::move(ker)).rep;
    out2 = sub_from_embeddings(m, std::move(im)).rep;
    return true;
}

/// tr over all vertices of the composite endomorphism.
inline Rat hom_trace(const FieldOps& ops, const Hom& a, const Hom& b) {
    Rat t(0);
    for (size_t v = 0; v < a.size(); ++v) {
        Matrix c = a[v] * b[v];
        for (int i = 0; i < c.rows(); ++i) t = ops.add(t, c.at(i, i));
    }
    return t;
}

/// dim of End(M)/rad via the trace form. The trace-form radical equals the
/// Jacobson radical in characteristic 0, and over GF(p) when p exceeds the
/// dimension of the faithful module M.
inline int semisimple_quotient_dim(const Representation& m, const std::vector<Hom>& basis) {
    FieldOps ops(m.algebra()->field());
    int k = static_cast<int>(basis.size());
    Matrix gram(k, k, m.algebra()->field());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gram.at(i, j) = hom_trace(ops, basis[i], basis[j]);
    return gram.rank();
}

/// Exhaustive locality check over GF(p): every endomorphism must be nilpotent
/// or invertible. Only used when p^dim(End) is small.
inline bool local_by_enumeration(const Representation& m, const std::vector<Hom>& basis, long p) {
    FieldOps ops(m.algebra()->field());
    int k = static_cast<int>(basis.size());
    int d = m.total_dim();
    std::vector<long> coeff(k, 0);
    while (true) {
        int pos = 0;
        while (pos < k && coeff[pos] == p - 1) {
            coeff[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        ++coeff[pos];

        Hom f;
        for (size_t v = 0; v < basis[0].size(); ++v) {
            Matrix acc = basis[0][v].scaled(ops.from_long(coeff[0]));
            for (int i = 1; i < k; ++i)
                acc = acc + basis[i][v].scaled(ops.from_long(coeff[i]));
            f.push_back(std::move(acc));
        }
        if (hom_is_invertible(f)) continue;
        bool nilpotent = true;
        for (const auto& fv : f)
            if (!fv.pow(d).is_zero()) {
                nilpotent = false;
                break;
            }
        if (!nilpotent) return false;
    }
    return true;
}

inline void decompose_into(const Representation& m, std::vector<Representation>& out) {
    if (m.is_zero()) return;
    if (m.total_dim() == 1) {
        out.push_back(m);
        return;
    }
    std::vector<Hom> end_basis = hom_space(m, m);
    if (end_basis.size() == 1) {
        out.push_back(m);
        return;
    }

    FieldSpec field = m.algebra()->field();
    FieldOps ops(field);

    // Sweep candidate endomorphisms for a Fitting split. First by stable
    // kernels alone (cheap), then by the coprime factors of the candidate's
    // minimal polynomial: if mu_f = u * v with gcd(u, v) = 1, then
    // M = ker u(f)^inf + ker v(f)^inf is a direct module decomposition. That
    // catches splits the bare stable kernel misses, e.g. idempotents shifted
    // by a scalar. Candidates: basis, pairwise sums and products, then seeded
    // pseudo-random combinations; generated lazily, stop at the first split.
    Representation a, b;
    auto attempt_plain = [&](const Hom& f) {
        if (!try_fitting_split(m, end_basis, f, a, b)) return false;
        decompose_into(a, out);
        decompose_into(b, out);
        return true;
    };
    auto attempt_poly = [&](const Hom& f) {
        Poly mu = hom_min_poly(field, f);
        std::vector<Poly> comps = coprime_components(field, mu);
        if (comps.size() < 2) return false;
        Hom g;
        for (const auto& fv : f) g.push_back(poly_eval_matrix(comps[0], fv));
        if (!try_fitting_split(m, end_basis, g, a, b))
            throw QaError("coprime minimal-polynomial factor failed to split");
        decompose_into(a, out);
        decompose_into(b, out);
        return true;
    };
    std::mt19937 combo_rng(987123);
    auto random_combo = [&]() {
        Hom f;
        for (size_t v = 0; v < end_basis[0].size(); ++v)
            f.push_back(Matrix(end_basis[0][v].rows(), end_basis[0][v].cols(), field));
        std::uniform_int_distribution<int> coeff(-2, 2);
        for (const auto& bb : end_basis) {
            Rat c = ops.from_long(coeff(combo_rng));
            if (c == 0) continue;
            for (size_t v = 0; v < f.size(); ++v) f[v] = f[v] + bb[v].scaled(c);
        }
        return f;
    };

    for (const auto& f : end_basis)
        if (attempt_plain(f)) return;
    for (const auto& f : end_basis)
        if (attempt_poly(f)) return;
    for (size_t i = 0; i < end_basis.size(); ++i)
        for (size_t j = i + 1; j < end_basis.size(); ++j) {
            Hom f = hom_add(end_basis[i], end_basis[j]);
            if (attempt_plain(f) || attempt_poly(f)) return;
        }
    for (size_t i = 0; i < end_basis.size(); ++i)
        for (size_t j = 0; j < end_basis.size(); ++j) {
            if (i == j) continue;
            Hom f = hom_compose(end_basis[i], end_basis[j]);
            if (attempt_plain(f) || attempt_poly(f)) return;
        }
    std::vector<Hom> randoms;
    for (int t = 0; t < 12; ++t) randoms.push_back(random_combo());
    for (const auto& f : randoms)
        if (attempt_plain(f) || attempt_poly(f)) return;

    // No split found: certify that End(M) is local.
    bool trace_form_valid =
        field.kind == FieldSpec::Kind::Rationals || field.p > m.total_dim();
    if (trace_form_valid) {
        int r = semisimple_quotient_dim(m, end_basis);
        if (r == 1) {
            out.push_back(m);
            return;
        }
        // End/rad may be a proper field extension. Certify: End/rad must be
        // commutative, and some candidate must act on it with an irreducible
        // minimal polynomial of full degree r (a primitive element). The
        // minimal polynomial of the image of f in End/rad is the squarefree
        // part of mu_f; with its linear factors already split off, a single
        // coprime component of degree r <= 3 is irreducible.
        auto in_radical = [&](const Hom& w) {
            for (const auto& bb : end_basis)
                if (hom_trace(ops, w, bb) != 0) return false;
            return true;
        };
        bool commutative = true;
        for (size_t i = 0; i < end_basis.size() && commutative; ++i)
            for (size_t j = i + 1; j < end_basis.size() && commutative; ++j) {
                Hom w = hom_sub(hom_compose(end_basis[i], end_basis[j]),
                                hom_compose(end_basis[j], end_basis[i]));
                if (!in_radical(w)) commutative = false;
            }
        if (commutative && r <= 3) {
            auto primitive = [&](const Hom& f) {
                std::vector<Poly> comps = coprime_components(field, hom_min_poly(field, f));
                return comps.size() == 1 && poly_deg(comps[0]) == r;
            };
            for (const auto& f : end_basis)
                if (primitive(f)) {
                    out.push_back(m);
                    return;
                }
            for (const auto& f : randoms)
                if (primitive(f)) {
                    out.push_back(m);
                    return;
                }
        }
    }
    if (field.kind == FieldSpec::Kind::Prime) {
        double log_size = static_cast<double>(end_basis.size()) * std::log2(double(field.p));
        if (log_size <= 20.0) {
            if (local_by_enumeration(m, end_basis, field.p)) {
                out.push_back(m);
                return;
            }
            throw CertificationFailed(
                "endomorphism algebra is not local but no Fitting split was found");
        }
    }
    throw CertificationFailed("endomorphism algebra too large to certify locality");
}

}  // namespace detail

/// Indecomposable summands; deterministic order for a fixed input.
inline std::vector<Representation> decompose(const Representation& m) {
    std::vector<Representation> out;
    detail::decompose_into(m, out);
    return out;
}

inline bool is_indecomposable(const Representation& m) {
    return !m.is_zero() && decompose(m).size() == 1;
}

/// Isomorphism test that is complete for indecomposables: if M ≅ N then the
/// non-isomorphisms in Hom(M,N) form a proper subspace, so some basis element
/// is an isomorphism.
inline bool is_isomorphic_indec(const Representation& m, const Representation& n) {
    if (m.dims() != n.dims()) return false;
    if (m.is_zero()) return true;
    for (const auto& h : hom_space(m, n))
        if (hom_is_invertible(h)) return true;
    return false;
}

/// General isomorphism test: dimension vectors, basis sweep, then multiset
/// matching of indecomposable summands (Krull–Schmidt).
inline bool is_isomorphic(const Representation& m, const Representation& n) {
    if (m.dims() != n.dims()) return false;
    if (m.is_zero()) return true;
    std::vector<Hom> hs = hom_space(m, n);
    for (const auto& h : hs)
        if (hom_is_invertible(h)) return true;
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j)
            if (hom_is_invertible(hom_add(hs[i], hs[j]))) return true;

    std::vector<Representation> ms = decompose(m);
    std::vector<Representation> ns = decompose(n);
    if (ms.size() != ns.size()) return false;
    std::vector<bool> used(ns.size(), false);
    for (const auto& a : ms) {
        bool found = false;
        for (size_t j = 0; j < ns.size(); ++j) {
            if (used[j]) continue;
            if (is_isomorphic_indec(a, ns[j])) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

using ClassId = int;

/// Registry of isomorphism classes of indecomposables over one algebra.
/// Ids are assigned in first-seen order; lookups are by dimension vector
/// first, then the indecomposable isomorphism test.
class IsoRegistry {
  public:
    explicit IsoRegistry(AlgebraRef alg) : alg_(std::move(alg)) {
        for (int v = 0; v < alg_->quiver().num_vertices(); ++v)
            projectives_.push_back(indecomposable_projective(alg_, v));
    }

    const AlgebraRef& algebra() const { return alg_; }
    int size() const { return static_cast<int>(reps_.size()); }
    const Representation& representative(ClassId id) const { return reps_[id]; }
    bool is_projective(ClassId id) const { return projective_[id]; }

    /// Looks up or inserts an indecomposable module. Throws NotIndecomposable
    /// if the module visibly decomposes.
    ClassId intern(const Representation& m) {
        if (m.is_zero()) throw NotIndecomposable();
        for (size_t i = 0; i < reps_.size(); ++i)
            if (reps_[i].dims() == m.dims() && is_isomorphic_indec(reps_[i], m))
                return static_cast<ClassId>(i);
        if (!is_indecomposable(m)) throw NotIndecomposable();
        reps_.push_back(m);
        bool proj = false;
        for (const auto& p : projectives_)
            if (p.dims() == m.dims() && is_isomorphic_indec(p, m)) {
                proj = true;
                break;
            }
        projective_.push_back(proj);
        return static_cast<ClassId>(reps_.size() - 1);
    }

    /// Class ids with multiplicity of the indecomposable summands of m.
    std::map<ClassId, long> summand_classes(const Representation& m) {
        std::map<ClassId, long> out;
        for (const auto& s : decompose(m)) out[intern(s)]++;
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["version"] = 1;
        j["field"] = alg_->field().str();
        j["algebra_fingerprint"] = alg_->fingerprint();
        j["classes"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < reps_.size(); ++i) {
            nlohmann::ordered_json c;
            c["id"] = static_cast<int>(i);
            c["projective"] = projective_[i];
            c["dims"] = reps_[i].dims();
            nlohmann::ordered_json maps = nlohmann::ordered_json::object();
            const Quiver& q = alg_->quiver();
            for (int a = 0; a < q.num_arrows(); ++a) {
                const Matrix& t = reps_[i].map(a);
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (int r = 0; r < t.rows(); ++r) {
                    nlohmann::ordered_json row = nlohmann::ordered_json::array();
                    for (int cidx = 0; cidx < t.cols(); ++cidx)
                        row.push_back(rat_to_string(t.at(r, cidx)));
                    rows.push_back(std::move(row));
                }
                maps[q.arrow(a).label] = std::move(rows);
            }
            c["maps"] = std::move(maps);
            j["classes"].push_back(std::move(c));
        }
        return j;
    }

    void save(const std::string& path) const {
        std::ofstream f(path);
        if (!f) throw QaError("cannot write registry file: " + path);
        f << to_json().dump(2) << "\n";
    }

    static IsoRegistry load(AlgebraRef alg, const std::string& path) {
        std::ifstream f(path);
        if (!f) throw QaError("cannot read registry file: " + path);
        nlohmann::json j;
        f >> j;
        if (j.at("algebra_fingerprint").get<std::string>() != alg->fingerprint())
            throw QaError("registry file does not match this algebra");
        IsoRegistry reg(alg);
        const Quiver& q = alg->quiver();
        for (const auto& c : j.at("classes")) {
            std::vector<int> dims = c.at("dims").get<std::vector<int>>();
            std::vector<Matrix> maps;
            for (int a = 0; a < q.num_arrows(); ++a) {
                const auto& rows = c.at("maps").at(q.arrow(a).label);
                Matrix t(dims[q.arrow(a).dst], dims[q.arrow(a).src], alg->field());
                for (int r = 0; r < t.rows(); ++r)
                    for (int cc = 0; cc < t.cols(); ++cc)
                        t.at(r, cc) = rat_from_string(rows[r][cc].get<std::string>());
                maps.push_back(std::move(t));
            }
            Representation rep = Representation::make(alg, std::move(dims), std::move(maps));
            reg.reps_.push_back(std::move(rep));
            reg.projective_.push_back(c.at("projective").get<bool>());
        }
        return reg;
    }

  private:
    AlgebraRef alg_;
    std::vector<Representation> reps_;
    std::vector<bool> projective_;
    std::vector<Representation> projectives_;
};

}  // namespace qa
