#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qa/matrix.hpp"

using namespace qa;

TEST_CASE("field arithmetic over Q") {
    FieldOps ops(FieldSpec::rationals());
    CHECK(ops.add(Rat(1, 2), Rat(1, 3)) == Rat(5, 6));
    CHECK(ops.mul(Rat(2, 3), Rat(3, 2)) == 1);
    CHECK(ops.inv(Rat(-4, 7)) == Rat(-7, 4));
    CHECK_THROWS_AS(ops.inv(Rat(0)), QaError);
}

TEST_CASE("field arithmetic over GF(p)") {
    FieldOps ops(FieldSpec::prime(7));
    CHECK(ops.reduce(Rat(10)) == 3);
    CHECK(ops.reduce(Rat(-1)) == 6);
    CHECK(ops.reduce(Rat(1, 2)) == 4);  // 2 * 4 = 8 = 1 mod 7
    CHECK(ops.mul(Rat(3), Rat(5)) == 1);
    CHECK(ops.inv(Rat(3)) == 5);
    CHECK_THROWS_AS(FieldSpec::prime(6), QaError);
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_from_string("-3/4") == Rat(-3, 4));
    CHECK(rat_from_string("17") == Rat(17));
}

TEST_CASE("rank basics") {
    FieldSpec f = FieldSpec::rationals();
    CHECK(Matrix::identity(2, f).rank() == 2);
    CHECK(Matrix::zero(2, 2, f).rank() == 0);
    Matrix m = Matrix::from_rows({{1, 2}, {2, 4}}, f);
    CHECK(m.rank() == 1);
    CHECK(m.rank() == m.transpose().rank());
}

TEST_CASE("kernel basis") {
    FieldSpec f = FieldSpec::rationals();
    CHECK(Matrix::identity(3, f).kernel_basis().cols() == 0);
    CHECK(Matrix::zero(2, 3, f).kernel_basis().cols() == 3);

    // over GF(2), ker [[1,1]] is spanned by (1,1)
    FieldSpec f2 = FieldSpec::prime(2);
    Matrix m(1, 2, f2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    Matrix k = m.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 1);
}

TEST_CASE("solve") {
    FieldSpec f = FieldSpec::rationals();
    auto x = Matrix::identity(2, f).solve({Rat(3), Rat(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 4);

    Matrix row = Matrix::from_rows({{1, 1}}, f);
    auto y = row.solve({Rat(2)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == 2);

    Matrix col = Matrix::from_rows({{1}, {1}}, f);
    CHECK_FALSE(col.solve({Rat(1), Rat(2)}).has_value());
}

TEST_CASE("inverse and determinism of rref") {
    FieldSpec f = FieldSpec::rationals();
    Matrix m = Matrix::from_rows({{2, 1}, {1, 1}}, f);
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((m * *inv) == Matrix::identity(2, f));
    CHECK(m.rref().reduced == m.rref().reduced);

    CHECK_FALSE(Matrix::from_rows({{1, 2}, {2, 4}}, f).inverse().has_value());
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(0, 5), entry(-3, 3);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
        for (int t = 0; t < 40; ++t) {
            int r = dim(rng), c = dim(rng);
            Matrix m(r, c, f);
            FieldOps ops(f);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m.at(i, j) = ops.reduce(Rat(entry(rng)));
            CHECK(m.rank() + m.kernel_basis().cols() == c);
            CHECK(m.rank() == m.transpose().rank());
            // every kernel column really is killed
            if (m.kernel_basis().cols() > 0)
                CHECK((m * m.kernel_basis()).is_zero());
        }
    }
}
