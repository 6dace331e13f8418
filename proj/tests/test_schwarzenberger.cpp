#include "test_util.hpp"

using namespace steinerlab;
using namespace steinerlab::testutil;

static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("binary family shapes and the convolution pattern") {
    SteinerDatum d12 = binary_mult_datum(1, 2, Q);
    CHECK(d12.s == 2);
    CHECK(d12.t == 4);
    CHECK(d12.h0 == 3);
    CHECK(d12.f0 == 1);
    for (int m = 0; m < 4; ++m)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(d12.phi.at(static_cast<std::size_t>(i) * 3 + j, m) ==
                      (i + j == m ? Scalar(1) : Scalar(0)));

    SteinerDatum d11 = binary_mult_datum(1, 1, Q);
    CHECK(d11.s == 2);
    CHECK(d11.t == 3);
    CHECK(d11.h0 == 2);
    CHECK(d11.image().dim() == 3);

    // a=2, n=2: the image is the space of 3x3 Hankel matrices.
    SteinerDatum d22 = binary_mult_datum(2, 2, Q);
    std::vector<long> c{3, 1, 4, 1, 5};
    Matrix hankel(Q, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) hankel.set(i, j, Scalar(c[static_cast<std::size_t>(i + j)]));
    CHECK(d22.image().contains(hankel));

    // Bookkeeping: s + n = t and h0 = n + 1.
    for (int a = 1; a <= 4; ++a)
        for (int n = 1; n <= 4; ++n) {
            SteinerDatum d = binary_mult_datum(a, n, Q);
            CHECK(d.s + n == d.t);
            CHECK(d.h0 == n + 1);
            CHECK(rank(d.phi) == static_cast<std::size_t>(d.t));  // always reduced
        }
}

TEST_CASE("all builders validate on their own probes") {
    for (int a = 1; a <= 3; ++a)
        for (int n = 1; n <= 3; ++n) CHECK(validate(binary_mult_datum(a, n, Q)).accepted);
    CHECK(validate(binary_mult_datum(2, 2, FieldSpec::prime(5))).accepted);
    CHECK(validate(veronese_datum(Q)).accepted);
    CHECK(validate(scroll_datum(1, 1, 1, Q)).accepted);
    CHECK(validate(scroll_datum(1, 2, 1, Q)).accepted);
}

TEST_CASE("veronese family dimensions") {
    SteinerDatum v = veronese_datum(Q);
    CHECK(v.s == 3);
    CHECK(v.h0 == 3);
    CHECK(v.t == 6);
    CHECK(veronese_tensor(Q).is_surjective());
    CHECK(rank(veronese_tensor(Q).flattened()) == 6);
}

TEST_CASE("tensor round trip and the generic entry point") {
    MultiplicationTensor t = binary_tensor(1, 2, Q);
    SteinerDatum direct = binary_mult_datum(1, 2, Q);
    MultiplicationTensor back = tensor_from_datum(direct);
    REQUIRE(back.entries.size() == t.entries.size());
    for (std::size_t k = 0; k < t.entries.size(); ++k) CHECK(back.entries[k] == t.entries[k]);

    SteinerDatum generic = generic_schwarzenberger_datum(t, 1, direct.probe, Q);
    CHECK(generic.phi == direct.phi);
    CHECK(generic.s == direct.s);
    CHECK(generic.t == direct.t);
}

TEST_CASE("non-surjective tensors are rejected") {
    MultiplicationTensor t = binary_tensor(1, 2, Q);
    // Zero out the target coordinate m = 0 everywhere: a zero slice.
    for (std::size_t i = 0; i < t.sL; ++i)
        for (std::size_t j = 0; j < t.sU; ++j) t.set(i, j, 0, Scalar(0));
    CHECK_FALSE(t.is_surjective());
    CHECK_THROWS(generic_schwarzenberger_datum(t, 1, binary_mult_datum(1, 2, Q).probe, Q));
}

TEST_CASE("eta injectivity check and a corrupted datum") {
    CHECK(eta_injectivity_check(binary_mult_datum(1, 2, Q)).accepted);
    CHECK(eta_injectivity_check(binary_mult_datum(3, 1, Q)).accepted);

    // Corrupt phi so that the fiber map drops rank at the first probe point
    // (coordinate point e_0 of P^n): kill the whole first H0-coordinate.
    SteinerDatum bad = binary_mult_datum(1, 2, Q);
    for (std::size_t c = 0; c < bad.phi.cols(); ++c)
        for (int i = 0; i < bad.s; ++i) bad.phi.set(static_cast<std::size_t>(i) * 3, c, Scalar(0));
    ValidationReport rep = eta_injectivity_check(bad);
    CHECK_FALSE(rep.accepted);
    CHECK(rep.failing_index >= 0);
}

TEST_CASE("probe grids") {
    // Over Q on P^2: 3 coordinate points, 3 pairwise sums, all-ones.
    CHECK(projective_grid(Q, 2).size() == 7);
    // Over F2, P^2(F2) is small enough to enumerate fully.
    CHECK(projective_grid(FieldSpec::prime(2), 2).size() == 7);
    CHECK(projective_grid(FieldSpec::prime(3), 1).size() == 4);
}
