#pragma once

// Shared fixtures: small named algebras plus deterministic random generators
// for algebras and bound modules.

#include <random>
#include <vector>

#include "qa/dsl.hpp"

namespace fx {

using namespace qa;

inline Relation monomial(const Quiver& q, std::vector<std::string> arrows, const Rat& c = 1) {
    Path p;
    for (const auto& label : arrows) {
        int a = q.arrow_index(label);
        if (p.arrows.empty()) p.source = q.arrow(a).src;
        p.arrows.push_back(a);
    }
    return {{c, p}};
}

inline AlgebraRef a2(FieldSpec f = FieldSpec::rationals()) {
    Quiver q = Quiver::build({"1", "2"}, {{"a", "1", "2"}});
    return BoundAlgebra::from_presentation(q, {}, f, 3);
}

inline AlgebraRef loop_x2(FieldSpec f = FieldSpec::rationals()) {
    Quiver q = Quiver::build({"v"}, {{"x", "v", "v"}});
    return BoundAlgebra::from_presentation(q, {monomial(q, {"x", "x"})}, f, 4);
}

/// Cyclic Nakayama algebra on 3 vertices with radical square zero.
inline AlgebraRef nakayama3(FieldSpec f = FieldSpec::rationals()) {
    Quiver q = Quiver::build({"1", "2", "3"},
                             {{"a1", "1", "2"}, {"a2", "2", "3"}, {"a3", "3", "1"}});
    std::vector<Relation> rels = {monomial(q, {"a1", "a2"}), monomial(q, {"a2", "a3"}),
                                  monomial(q, {"a3", "a1"})};
    return BoundAlgebra::from_presentation(q, rels, f, 3);
}

/// Linear A4 quiver with radical square zero: pd S1 = 3.
inline AlgebraRef linear_a4_rad2(FieldSpec f = FieldSpec::rationals()) {
    Quiver q = Quiver::build({"1", "2", "3", "4"},
                             {{"a1", "1", "2"}, {"a2", "2", "3"}, {"a3", "3", "4"}});
    std::vector<Relation> rels = {monomial(q, {"a1", "a2"}), monomial(q, {"a2", "a3"})};
    return BoundAlgebra::from_presentation(q, rels, f, 3);
}

inline AlgebraRef kronecker(FieldSpec f = FieldSpec::rationals()) {
    Quiver q = Quiver::build({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
    return BoundAlgebra::from_presentation(q, {}, f, 3);
}

/// Submodule generated by the given per-vertex column spans, closed under the
/// arrow action.
inline SubRep submodule_generated(const Representation& m, std::vector<Matrix> gens) {
    const Quiver& q = m.algebra()->quiver();
    for (auto& g : gens) g = g.column_space_basis();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            if (gens[ar.src].cols() == 0) continue;
            Matrix img = m.map(a) * gens[ar.src];
            Matrix bigger = gens[ar.dst].hstack(img).column_space_basis();
            if (bigger.cols() != gens[ar.dst].cols()) {
                gens[ar.dst] = bigger;
                changed = true;
            }
        }
    }
    return sub_from_embeddings(m, std::move(gens));
}

/// Random admissible algebra: at most 4 vertices and 6 arrows, all length-3
/// paths killed, plus a random sprinkle of length-2 relations.
inline AlgebraRef random_algebra(std::mt19937& rng, FieldSpec f = FieldSpec::rationals()) {
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    while (true) {
        int nv = pick(2, 4);
        std::vector<std::string> vertices;
        for (int v = 1; v <= nv; ++v) vertices.push_back(std::to_string(v));
        int na = pick(1, 6);
        std::vector<ArrowDecl> arrows;
        for (int a = 0; a < na; ++a)
            arrows.push_back({"r" + std::to_string(a), std::to_string(pick(1, nv)),
                              std::to_string(pick(1, nv))});
        Quiver q;
        try {
            q = Quiver::build(vertices, arrows);
        } catch (const QaError&) {
            continue;
        }
        std::vector<Relation> rels;
        std::vector<Path> len2;
        for (const Path& p : paths_up_to(q, 4)) {
            if (p.length() == 3) rels.push_back({{Rat(1), p}});
            if (p.length() == 2) len2.push_back(p);
        }
        for (size_t i = 0; i < len2.size(); ++i) {
            int roll = pick(0, 5);
            if (roll <= 1) {
                rels.push_back({{Rat(1), len2[i]}});
            } else if (roll == 2) {
                // try a binomial with a parallel length-2 path
                for (size_t j = i + 1; j < len2.size(); ++j)
                    if (len2[j].source == len2[i].source &&
                        len2[j].target(q) == len2[i].target(q)) {
                        rels.push_back({{Rat(1), len2[i]}, {Rat(-1), len2[j]}});
                        break;
                    }
            }
        }
        try {
            return BoundAlgebra::from_presentation(q, rels, f, 4);
        } catch (const NotAdmissibleError&) {
            continue;
        }
    }
}

/// Random bound module: a random quotient of a small random projective by a
/// randomly generated submodule of its radical. Always bound, often
/// decomposable.
inline Representation random_module(AlgebraRef alg, std::mt19937& rng) {
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    const Quiver& q = alg->quiver();
    for (int attempt = 0; attempt < 20; ++attempt) {
        Representation p = Representation::zero(alg);
        int summands = pick(1, 2);
        for (int s = 0; s < summands; ++s)
            p = direct_sum(p, indecomposable_projective(alg, pick(0, q.num_vertices() - 1)));
        SubRep rad_p = radical(p);
        std::vector<Matrix> gens;
        for (int v = 0; v < q.num_vertices(); ++v) {
            int ng = pick(0, 2);
            Matrix g(p.dim(v), ng, alg->field());
            for (int j = 0; j < ng; ++j) {
                if (rad_p.embed[v].cols() == 0) continue;
                // random combination of radical vectors
                Matrix comb(rad_p.embed[v].cols(), 1, alg->field());
                for (int i = 0; i < comb.rows(); ++i) comb.at(i, 0) = Rat(pick(-1, 1));
                Matrix col = rad_p.embed[v] * comb;
                for (int i = 0; i < p.dim(v); ++i) g.at(i, j) = col.at(i, 0);
            }
            gens.push_back(std::move(g));
        }
        SubRep sub = submodule_generated(p, std::move(gens));
        Representation m = quotient(p, sub.embed).rep;
        if (!m.is_zero()) return m;
    }
    return simple(alg, 0);
}

}  // namespace fx
