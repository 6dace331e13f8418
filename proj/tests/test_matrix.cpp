#include "test_util.hpp"

using namespace steinerlab;
using namespace steinerlab::testutil;

static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("rref: identity, dependent rows, mod 2") {
    RrefResult r1 = rref(Matrix::identity(Q, 2));
    CHECK(r1.reduced == Matrix::identity(Q, 2));
    CHECK(r1.rank == 2);
    CHECK(r1.pivots == std::vector<std::size_t>{0, 1});

    RrefResult r2 = rref(mat(Q, {{1, 2}, {2, 4}}));
    CHECK(r2.reduced == mat(Q, {{1, 2}, {0, 0}}));
    CHECK(r2.rank == 1);
    CHECK(r2.pivots == std::vector<std::size_t>{0});

    FieldSpec f2 = FieldSpec::prime(2);
    RrefResult r3 = rref(mat(f2, {{1, 1}, {1, 0}}));
    CHECK(r3.reduced == Matrix::identity(f2, 2));
    CHECK(r3.rank == 2);
}

TEST_CASE("kernel: identity, zero, one relation") {
    CHECK(kernel(Matrix::identity(Q, 3)).dim() == 0);
    CHECK(kernel(Matrix(Q, 2, 3)).dim() == 3);

    Subspace k = kernel(mat(Q, {{1, 1, 0}}));
    CHECK(k.dim() == 2);
    CHECK(k.contains(vec({1, -1, 0})));
    CHECK(k.contains(vec({0, 0, 1})));
    CHECK_FALSE(k.contains(vec({1, 0, 0})));
}

TEST_CASE("solve: identity, free variable zeroed, inconsistent") {
    auto x1 = solve(Matrix::identity(Q, 3), vec({4, 5, 6}));
    REQUIRE(x1.has_value());
    CHECK(*x1 == vec({4, 5, 6}));

    auto x2 = solve(mat(Q, {{1, 1}}), vec({3}));
    REQUIRE(x2.has_value());
    CHECK(*x2 == vec({3, 0}));

    CHECK_FALSE(solve(mat(Q, {{1}, {1}}), vec({0, 1})).has_value());
}

TEST_CASE("properties: rref projection, rank transpose, rank-nullity") {
    std::mt19937_64 rng(11);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix m = random_matrix(f, r, c, rng);
            RrefResult red = rref(m);
            CHECK(rref(red.reduced).reduced == red.reduced);
            CHECK(rank(m) == rank(m.transpose()));
            CHECK(kernel(m).dim() + rank(m) == c);
        }
    }
}

TEST_CASE("matrix algebra basics") {
    Matrix a = mat(Q, {{1, 2}, {3, 4}});
    Matrix b = mat(Q, {{0, 1}, {1, 0}});
    CHECK(a * b == mat(Q, {{2, 1}, {4, 3}}));
    CHECK(a.apply(vec({1, 1})) == vec({3, 7}));
    CHECK(a.vstack(b).rows() == 4);
    CHECK(a.hstack(b).cols() == 4);
    CHECK(Matrix(Q, 2, 2).is_zero());
    CHECK_FALSE(a.is_zero());
}
