#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qa/decomp.hpp"
#include "qa/repmod.hpp"

namespace qa {

/// A projective cover P -> M: the cover module, the per-vertex epimorphism
/// matrices, and which indecomposable projective each block of P came from.
struct Cover {
    Representation projective;
    std::vector<Matrix> epi;       // dim M(v) x dim P(v)
    std::vector<int> block_vertex; // one entry per P_v summand, in block order
};

/// Minimal projective cover. P = ⊕_v P_v^{dim top(M)_v}; the epimorphism sends
/// each generator of P_v to a chosen lift of a top basis vector and extends
/// along paths by the module action.
inline Cover projective_cover(const Representation& m) {
    AlgebraRef alg = m.algebra();
    const Quiver& q = alg->quiver();
    FieldSpec f = alg->field();

    SubRep rad = radical(m);
    // Complement of rad M(v) in M(v): lifts of a top basis.
    std::vector<std::vector<Matrix>> gens(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) {
        Matrix big = rad.embed[v].hstack(Matrix::identity(m.dim(v), f));
        auto ech = big.rref();
        for (int p : ech.pivots)
            if (p >= rad.embed[v].cols()) {
                Matrix col(m.dim(v), 1, f);
                col.at(p - rad.embed[v].cols(), 0) = 1;
                gens[v].push_back(std::move(col));
            }
    }

    Cover cover;
    cover.projective = Representation::zero(alg);
    for (int v = 0; v < q.num_vertices(); ++v)
        for (size_t i = 0; i < gens[v].size(); ++i) cover.block_vertex.push_back(v);

    std::vector<Matrix> epi(q.num_vertices());
    for (int w = 0; w < q.num_vertices(); ++w) epi[w] = Matrix(m.dim(w), 0, f);

    for (int v = 0; v < q.num_vertices(); ++v) {
        if (gens[v].empty()) continue;
        ProjectiveData pd = indecomposable_projective_data(alg, v);
        for (const auto& u : gens[v]) {
            cover.projective = direct_sum(cover.projective, pd.rep);
            // Image of each local basis vector of P_v: the basis path acts on u.
            for (int w = 0; w < q.num_vertices(); ++w) {
                Matrix img(m.dim(w), pd.rep.dim(w), f);
                for (size_t k = 0; k < pd.basis_elements[w].size(); ++k) {
                    const Path& p = alg->basis_path(pd.basis_elements[w][k]);
                    Matrix col = m.path_action(p) * u;
                    for (int r = 0; r < m.dim(w); ++r) img.at(r, static_cast<int>(k)) = col.at(r, 0);
                }
                epi[w] = epi[w].hstack(img);
            }
        }
    }
    cover.epi = std::move(epi);

    for (int w = 0; w < q.num_vertices(); ++w)
        if (cover.epi[w].rank() != m.dim(w)) throw QaError("projective cover: map not surjective");
    return cover;
}

/// First syzygy: the kernel of a minimal projective cover, as a
/// subrepresentation of the cover.
inline SubRep syzygy_sub(const Representation& m) {
    Cover c = projective_cover(m);
    const Quiver& q = m.algebra()->quiver();
    std::vector<Matrix> ker(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) ker[v] = c.epi[v].kernel_basis();
    return sub_from_embeddings(c.projective, std::move(ker));
}

inline Representation syzygy(const Representation& m) {
    if (m.is_zero()) return m;
    return syzygy_sub(m).rep;
}

/// Result of a dimension computation with a cutoff.
struct DimResult {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    int value = -1;     // Finite: the dimension
    int witness_i = -1; // Infinite: indices with isomorphic syzygy stages
    int witness_j = -1;
    int cutoff = -1;    // Unknown: the cutoff that was exhausted

    static DimResult finite(int n) { return {Kind::Finite, n, -1, -1, -1}; }
    static DimResult infinite(int i, int j) { return {Kind::Infinite, -1, i, j, -1}; }
    static DimResult unknown(int cutoff) { return {Kind::Unknown, -1, -1, -1, cutoff}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }

    std::string str() const {
        switch (kind) {
            case Kind::Finite: return std::to_string(value);
            case Kind::Infinite:
                return "infinity (syzygy stages " + std::to_string(witness_i) + " and " +
                       std::to_string(witness_j) + " coincide)";
            default: return "unknown (cutoff " + std::to_string(cutoff) + ")";
        }
    }

    bool operator==(const DimResult& o) const {
        if (kind != o.kind) return false;
        return kind != Kind::Finite || value == o.value;
    }
};

inline DimResult dim_max(const DimResult& a, const DimResult& b) {
    if (a.kind == DimResult::Kind::Infinite) return a;
    if (b.kind == DimResult::Kind::Infinite) return b;
    if (a.kind == DimResult::Kind::Unknown) return a;
    if (b.kind == DimResult::Kind::Unknown) return b;
    return a.value >= b.value ? a : b;
}

/// Projective dimension via the chain of syzygy class sets. The chain is a
/// deterministic function of the current set of non-projective classes, so a
/// repeated set proves the resolution never terminates.
inline DimResult proj_dim(const Representation& m, int cutoff = 40, IsoRegistry* shared = nullptr) {
    std::unique_ptr<IsoRegistry> local;
    IsoRegistry* reg = shared;
    if (!reg) {
        local = std::make_unique<IsoRegistry>(m.algebra());
        reg = local.get();
    }

    auto nonproj = [&](const Representation& x) {
        std::set<ClassId> s;
        if (!x.is_zero())
            for (const auto& [id, mult] : reg->summand_classes(x))
                if (!reg->is_projective(id)) s.insert(id);
        return s;
    };

    std::vector<std::set<ClassId>> chain;
    chain.push_back(nonproj(m));
    if (chain[0].empty()) return DimResult::finite(0);

    // Syzygy of a class set, classwise; results are memoized in the registry
    // by construction of intern().
    std::map<ClassId, std::set<ClassId>> omega_cache;
    for (int n = 1; n <= cutoff; ++n) {
        std::set<ClassId> next;
        for (ClassId id : chain.back()) {
            auto it = omega_cache.find(id);
            if (it == omega_cache.end())
                it = omega_cache.emplace(id, nonproj(syzygy(reg->representative(id)))).first;
            next.insert(it->second.begin(), it->second.end());
        }
        if (next.empty()) return DimResult::finite(n);
        for (size_t i = 0; i < chain.size(); ++i)
            if (chain[i] == next) return DimResult::infinite(static_cast<int>(i), n);
        chain.push_back(std::move(next));
    }
    return DimResult::unknown(cutoff);
}

/// Injective dimension via duality: id(M) = pd of D(M) over the opposite
/// algebra.
inline DimResult inj_dim(const Representation& m, int cutoff = 40,
                         IsoRegistry* opposite_registry = nullptr) {
    AlgebraRef op = opposite_registry ? opposite_registry->algebra() : m.algebra()->opposite();
    return proj_dim(dual_module(m, op), cutoff, opposite_registry);
}

}  // namespace qa
