#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "fixtures.hpp"

using namespace qa;

TEST_CASE("decompose semisimples") {
    AlgebraRef a = fx::a2();
    Representation m = direct_sum(a, {simple(a, 0), simple(a, 1), simple(a, 1)});
    auto parts = decompose(m);
    REQUIRE(parts.size() == 3);
    int at1 = 0, at2 = 0;
    for (const auto& p : parts) {
        if (p.dims() == std::vector<int>{1, 0}) ++at1;
        if (p.dims() == std::vector<int>{0, 1}) ++at2;
    }
    CHECK(at1 == 1);
    CHECK(at2 == 2);
}

TEST_CASE("indecomposables stay whole") {
    AlgebraRef a = fx::a2();
    CHECK(is_indecomposable(indecomposable_projective(a, 0)));
    CHECK(decompose(indecomposable_projective(a, 0)).size() == 1);
    AlgebraRef l = fx::loop_x2();
    CHECK(is_indecomposable(indecomposable_projective(l, 0)));

    AlgebraRef k = fx::kronecker();
    // the regular Kronecker module with T_a = T_b = id is indecomposable
    FieldSpec f = k->field();
    Representation reg =
        Representation::make(k, {1, 1}, {Matrix::identity(1, f), Matrix::identity(1, f)});
    CHECK(is_indecomposable(reg));
}

TEST_CASE("isomorphism tests") {
    AlgebraRef a = fx::a2();
    Representation s1 = simple(a, 0), s2 = simple(a, 1);
    CHECK(is_isomorphic(s1, s1));
    CHECK_FALSE(is_isomorphic(s1, s2));
    CHECK(is_isomorphic(direct_sum(s1, s2), direct_sum(s2, s1)));
    CHECK_FALSE(is_isomorphic(direct_sum(s1, s1), direct_sum(s1, s2)));

    // Kronecker modules with different eigenvalue are non-isomorphic
    AlgebraRef k = fx::kronecker();
    FieldSpec f = k->field();
    auto kmod = [&](const Rat& lam) {
        Matrix tb(1, 1, f);
        tb.at(0, 0) = lam;
        return Representation::make(k, {1, 1}, {Matrix::identity(1, f), tb});
    };
    CHECK(is_isomorphic(kmod(2), kmod(2)));
    CHECK_FALSE(is_isomorphic(kmod(2), kmod(3)));
}

TEST_CASE("decomposition over GF(p) with enumeration certificate") {
    AlgebraRef a = fx::a2(FieldSpec::prime(2));
    Representation m = direct_sum(simple(a, 0), indecomposable_projective(a, 0));
    auto parts = decompose(m);
    CHECK(parts.size() == 2);
    CHECK(is_indecomposable(indecomposable_projective(a, 0)));
}

TEST_CASE("registry interning") {
    AlgebraRef a = fx::a2();
    IsoRegistry reg(a);
    ClassId s1 = reg.intern(simple(a, 0));
    CHECK(reg.intern(simple(a, 0)) == s1);
    ClassId p1 = reg.intern(indecomposable_projective(a, 0));
    CHECK(reg.is_projective(p1));
    CHECK_FALSE(reg.is_projective(s1));
    CHECK_THROWS_AS(reg.intern(direct_sum(simple(a, 0), simple(a, 1))), NotIndecomposable);

    auto classes = reg.summand_classes(direct_sum(simple(a, 0), simple(a, 0)));
    REQUIRE(classes.size() == 1);
    CHECK(classes.begin()->second == 2);
}

TEST_CASE("registry persistence round trip") {
    AlgebraRef a = fx::a2();
    std::string path = "registry_roundtrip_test.json";

    {
        IsoRegistry reg(a);
        reg.save(path);
        IsoRegistry back = IsoRegistry::load(a, path);
        CHECK(back.size() == reg.size());
    }
    {
        IsoRegistry reg(a);
        ClassId s1 = reg.intern(simple(a, 0));
        ClassId s2 = reg.intern(simple(a, 1));
        ClassId p1 = reg.intern(indecomposable_projective(a, 0));
        reg.save(path);
        IsoRegistry back = IsoRegistry::load(a, path);
        REQUIRE(back.size() == 3);
        CHECK(back.intern(simple(a, 0)) == s1);
        CHECK(back.intern(simple(a, 1)) == s2);
        CHECK(back.intern(indecomposable_projective(a, 0)) == p1);
        CHECK(back.is_projective(p1));
    }
    // wrong algebra: fingerprint mismatch
    CHECK_THROWS_AS(IsoRegistry::load(fx::loop_x2(), path), QaError);
    std::remove(path.c_str());
}

TEST_CASE("krull-schmidt multiplicities are stable") {
    AlgebraRef n = fx::nakayama3();
    IsoRegistry reg(n);
    Representation m = direct_sum(n, {simple(n, 0), simple(n, 1), simple(n, 0)});
    auto c1 = reg.summand_classes(m);
    auto c2 = reg.summand_classes(m);
    CHECK(c1 == c2);
    long total = 0;
    for (auto& [id, mult] : c1) total += mult;
    CHECK(total == 3);
}
