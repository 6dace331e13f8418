#include "test_util.hpp"

using namespace steinerlab;
using namespace steinerlab::testutil;

static const FieldSpec Q = FieldSpec::rationals();

namespace {

// The a=1, n=2 convolution image: slices M_m with (M_m)_{ij} = 1 iff i+j = m.
MatrixSpace hankel12_image() {
    return reduce(binary_mult_datum(1, 2, Q)).reduced.image();
}

}  // namespace

TEST_CASE("slices_of_phi: identity, Hankel pattern, duplicated column") {
    MatrixSpace full = slices_of_phi(Matrix::identity(Q, 6), 2, 3);
    CHECK(full.dim() == 6);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Matrix e(Q, 2, 3);
            e.set(i, j, Scalar(1));
            CHECK(full.contains(e));
        }

    MatrixSpace hankel = hankel12_image();
    CHECK(hankel.dim() == 4);
    for (int m = 0; m < 4; ++m) {
        Matrix slice(Q, 2, 3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j)
                if (i + j == m) slice.set(i, j, Scalar(1));
        CHECK(hankel.contains(slice));
    }

    Matrix phi = binary_mult_datum(1, 2, Q).phi;
    Matrix dup = phi.hstack(phi);  // every column duplicated
    CHECK(slices_of_phi(dup, 2, 3).dim() == 4);
}

TEST_CASE("contract_line on the Hankel image") {
    MatrixSpace hankel = hankel12_image();
    CHECK(contract_line(hankel, vec({1, 0})) ==
          Subspace::from_spanning(mat(Q, {{1, 0, 0}})));
    CHECK(contract_line(hankel, vec({1, 1})) ==
          Subspace::from_spanning(mat(Q, {{1, 1, 1}})));
    CHECK_THROWS(contract_line(hankel, vec({0, 0})));

    MatrixSpace full = MatrixSpace::full(Q, 2, 3);
    CHECK(contract_line(full, vec({1, 0})) == Subspace::full(Q, 3));
    CHECK(contract_line(full, vec({3, -2})) == Subspace::full(Q, 3));
}

TEST_CASE("contract_line is projectively well-defined") {
    std::mt19937_64 rng(41);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t s = 2 + rng() % 2, h0 = 2 + rng() % 2;
            std::vector<Matrix> gens;
            for (int g = 0; g < 3; ++g) gens.push_back(random_matrix(f, s, h0, rng));
            MatrixSpace space = MatrixSpace::from_generators(f, s, h0, gens);
            std::vector<Scalar> s0(s, Scalar(0));
            s0[rng() % s] = Scalar(1);
            s0[rng() % s] = Scalar(1 + static_cast<long>(rng() % 2));
            Scalar lam = f.is_rationals() ? Scalar(mpq_class(3, 7)) : Scalar(2);
            std::vector<Scalar> scaled(s);
            for (std::size_t i = 0; i < s; ++i) scaled[i] = f.mul(lam, s0[i]);
            CHECK(contract_line(space, s0) == contract_line(space, scaled));
        }
    }
}

TEST_CASE("is_pure_in examples and equivalence with contract_line") {
    MatrixSpace hankel = hankel12_image();
    Subspace a = Subspace::from_spanning(mat(Q, {{1, 0}}));
    CHECK(is_pure_in(hankel, a, Subspace::from_spanning(mat(Q, {{1, 0, 0}}))));
    CHECK_FALSE(is_pure_in(hankel, a, Subspace::from_spanning(mat(Q, {{0, 1, 0}}))));
    CHECK(is_pure_in(MatrixSpace::full(Q, 2, 3), Subspace::full(Q, 2), Subspace::full(Q, 3)));

    // B <= contract_line(space, s0)  <=>  is_pure_in(space, <s0>, B).
    std::mt19937_64 rng(43);
    FieldSpec f3 = FieldSpec::prime(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Matrix> gens;
        for (int g = 0; g < 3; ++g) gens.push_back(random_matrix(f3, 2, 3, rng));
        MatrixSpace space = MatrixSpace::from_generators(f3, 2, 3, gens);
        for (const auto& s0 : projective_points(3, 2)) {
            Subspace fiber = contract_line(space, s0);
            Subspace line = Subspace::from_spanning(Matrix::from_rows(f3, {s0}));
            Subspace b = Subspace::from_spanning(random_matrix(f3, 1 + rng() % 2, 3, rng));
            if (b.dim() == 0) continue;
            CHECK(is_pure_in(space, line, b) == fiber.contains(b));
        }
    }
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(3, 1, 2).value == 7);
    CHECK(gaussian_binomial(5, 0, 3).value == 1);
    CHECK(gaussian_binomial(4, 2, 2).value == 35);
    for (long q : {2L, 3L, 5L})
        for (long n = 0; n <= 5; ++n)
            for (long k = 0; k <= n; ++k)
                CHECK(gaussian_binomial(n, k, q).value == gaussian_binomial(n, n - k, q).value);
    CHECK_THROWS(gaussian_binomial(2, 3, 2));
    CHECK_THROWS(gaussian_binomial(3, 1, 4));
}

TEST_CASE("outer and flatten follow the row-major convention") {
    Matrix o = outer(Q, vec({1, 2}), vec({3, 4, 5}));
    CHECK(o == mat(Q, {{3, 4, 5}, {6, 8, 10}}));
    CHECK(flatten_slice(o) == vec({3, 4, 5, 6, 8, 10}));
}
