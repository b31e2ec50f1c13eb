#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace qa;

TEST_CASE("k0 class drops projectives") {
    AlgebraRef a = fx::a2();
    K0Context ctx(a);
    CHECK(ctx.k0_class(indecomposable_projective(a, 0)).empty());
    CHECK(ctx.k0_class(simple(a, 0)).size() == 1);
    auto v = ctx.k0_class(direct_sum(simple(a, 0), simple(a, 0)));
    REQUIRE(v.size() == 1);
    CHECK(v.begin()->second == 2);
}

TEST_CASE("omega bar") {
    AlgebraRef a = fx::a2();
    K0Context ctx(a);
    // omega(S1) = S2 is projective, so the class dies
    auto gens = generator_classes(ctx, simple(a, 0));
    REQUIRE(gens.size() == 1);
    CHECK(ctx.omega_bar(gens[0]).empty());

    AlgebraRef l = fx::loop_x2();
    K0Context lctx(l);
    auto lg = generator_classes(lctx, simple(l, 0));
    REQUIRE(lg.size() == 1);
    auto img = lctx.omega_bar(lg[0]);
    REQUIRE(img.size() == 1);
    CHECK(img.begin()->first == lg[0]);  // the simple is its own syzygy
}

TEST_CASE("phi basic values") {
    AlgebraRef a = fx::a2();
    K0Context ctx(a);
    CHECK(phi(ctx, simple(a, 0)) == 1);  // pd = 1
    CHECK(phi(ctx, indecomposable_projective(a, 0)) == 0);
    CHECK(phi(ctx, direct_sum(simple(a, 0), simple(a, 1))) == 1);

    AlgebraRef l = fx::loop_x2();
    K0Context lctx(l);
    CHECK(phi(lctx, simple(l, 0)) == 0);  // indecomposable of infinite pd
}

TEST_CASE("phi sees rank drops after a rank plateau") {
    // over the linear A4 quiver with rad^2 = 0: ranks 2,2,1,0 for S1 + S2, so
    // any first-plateau rule would wrongly answer 0; phi must give pd S1 = 3
    AlgebraRef a4 = fx::linear_a4_rad2();
    K0Context ctx(a4);
    Representation m = direct_sum(simple(a4, 0), simple(a4, 1));
    CHECK(phi(ctx, m) == 3);
    CHECK(proj_dim(m) == DimResult::finite(3));
}

TEST_CASE("phi suite equals phi of the direct sum") {
    AlgebraRef n = fx::nakayama3();
    K0Context ctx(n);
    std::vector<Representation> suite = {simple(n, 0), simple(n, 1), simple(n, 2)};
    Representation total = direct_sum(n, suite);
    CHECK(phi_suite(ctx, suite) == phi(ctx, total));
}

TEST_CASE("selfinjective algebras have phi lower bound zero") {
    for (AlgebraRef alg : {fx::loop_x2(), fx::nakayama3()}) {
        K0Context ctx(alg);
        CHECK(phi_lower_bound(ctx, default_phidim_suite(alg)) == 0);
    }
}

TEST_CASE("eta oracle agrees with phi") {
    for (AlgebraRef alg :
         {fx::a2(), fx::loop_x2(), fx::nakayama3(), fx::linear_a4_rad2(), fx::kronecker()}) {
        K0Context ctx(alg);
        for (const auto& m : default_phidim_suite(alg)) {
            auto gens = generator_classes(ctx, m);
            ClosureResult cl = syzygy_class_closure(ctx, gens);
            REQUIRE(cl.finite);
            int horizon = static_cast<int>(cl.classes.size()) + 1;
            CHECK(phi_of_classes(ctx, gens) == phi_eta_oracle(ctx, gens, horizon));
        }
    }
}

TEST_CASE("syzygy class closure") {
    AlgebraRef l = fx::loop_x2();
    K0Context ctx(l);
    ClosureResult r = syzygy_finite_subgroup(ctx, simple(l, 0));
    CHECK(r.finite);
    CHECK(r.classes.size() == 1);

    AlgebraRef a = fx::a2();
    K0Context actx(a);
    ClosureResult r2 =
        syzygy_finite_subgroup(actx, direct_sum(simple(a, 0), simple(a, 1)));
    CHECK(r2.finite);
}

TEST_CASE("phi witness characterization") {
    AlgebraRef a = fx::a2();
    K0Context ctx(a);
    CHECK(phi_characterization_check(ctx, direct_sum(simple(a, 0), simple(a, 1))));

    AlgebraRef l = fx::loop_x2();
    K0Context lctx(l);
    CHECK(phi_characterization_check(lctx, simple(l, 0)));  // phi = 0, empty max

    AlgebraRef a4 = fx::linear_a4_rad2();
    K0Context actx(a4);
    CHECK(phi_characterization_check(actx, direct_sum(simple(a4, 0), simple(a4, 1))));
}

TEST_CASE("default suite contents") {
    AlgebraRef a = fx::a2();
    auto suite = default_phidim_suite(a);
    // simples (2) + nonzero radicals (1: rad P1) + syzygies of S1 (1)
    CHECK(suite.size() == 4);
}
