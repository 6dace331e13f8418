#include "test_util.hpp"

using namespace steinerlab;
using namespace steinerlab::testutil;

static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("validate: classical family, zero map, full tensor space") {
    SteinerDatum classical = binary_mult_datum(1, 2, Q);
    CHECK(classical.probe.sample_quotients.size() >= 5);
    ValidationReport ok = validate(classical);
    CHECK(ok.accepted);
    CHECK(ok.failing_index == -1);
    for (const auto& s : ok.per_sample) CHECK(s.passed);

    SteinerDatum zero = classical;
    zero.phi = Matrix(Q, zero.phi.rows(), zero.phi.cols());
    ValidationReport bad = validate(zero);
    CHECK_FALSE(bad.accepted);
    CHECK(bad.failing_index == 0);
    for (const auto& s : bad.per_sample) CHECK_FALSE(s.passed);

    CHECK(validate(make_full_segre_datum(Q, 2, 3, 1, 4)).accepted);
}

TEST_CASE("validate agrees between a datum and its reduction") {
    for (SteinerDatum d : {binary_mult_datum(1, 2, Q), binary_mult_datum(2, 2, Q),
                           make_full_segre_datum(Q, 2, 3, 1, 4, 2)}) {
        SteinerDatum padded = pad_with_zero_columns(d, 1);
        CHECK(validate(padded).accepted == validate(reduce(padded).reduced).accepted);
    }
}

TEST_CASE("is_reduced and reduce") {
    SteinerDatum classical = binary_mult_datum(1, 2, Q);
    CHECK(is_reduced(classical));
    CHECK(classical.rank_e() + classical.s * classical.f0 == classical.t);

    SteinerDatum padded = pad_with_zero_columns(classical, 1);
    CHECK_FALSE(is_reduced(padded));
    ReductionResult r = reduce(padded);
    CHECK(r.p == 1);
    CHECK(r.reduced.t == 4);
    CHECK(r.reduced.phi == classical.phi);
    CHECK(r.kernel_basis.dim() == 1);

    // Idempotence and the already-reduced case.
    ReductionResult again = reduce(r.reduced);
    CHECK(again.p == 0);
    CHECK(again.reduced.phi == r.reduced.phi);

    // Two proportional columns: kernel is the difference vector.
    SteinerDatum prop = classical;
    Matrix extra(Q, prop.phi.rows(), 1);
    for (std::size_t i = 0; i < prop.phi.rows(); ++i)
        extra.set(i, 0, Q.mul(Scalar(2), prop.phi.at(i, 0)));
    prop.phi = prop.phi.hstack(extra);
    prop.t += 1;
    ReductionResult rp = reduce(prop);
    CHECK(rp.p == 1);
    CHECK(rp.reduced.t == prop.t - 1);
    CHECK(is_reduced(rp.reduced));
    CHECK(kernel(prop.phi).contains(vec({2, 0, 0, 0, -1})));

    CHECK(is_reduced(make_full_segre_datum(Q, 2, 3, 1, 4)));
}

TEST_CASE("rank bound rk(E) >= min(dim X, s*rk(Q))") {
    RankBound b1 = rank_bound(binary_mult_datum(1, 2, Q));
    CHECK(b1.rk_e == 2);
    CHECK(b1.rk_q == 2);
    CHECK(b1.bound == 2);
    CHECK(b1.satisfied);

    RankBound b2 = rank_bound(binary_mult_datum(2, 2, Q));
    CHECK(b2.rk_e == 2);
    CHECK(b2.bound == 2);
    CHECK(b2.satisfied);

    // A synthetic datum violating the bound: rk_e < min(dim_x, s*rk_q).
    SteinerDatum thin = binary_mult_datum(1, 2, Q);
    thin.phi = Matrix(Q, 6, 3);
    for (int i = 0; i < 3; ++i) thin.phi.set(i, i, Scalar(1));
    thin.t = 3;
    CHECK_FALSE(rank_bound(thin).satisfied);

    SteinerDatum unflagged = binary_mult_datum(1, 2, Q);
    unflagged.probe.sigma_generically_finite = false;
    CHECK_THROWS_AS(rank_bound(unflagged), std::domain_error);
}

TEST_CASE("detect_trivial") {
    CHECK(detect_trivial(make_full_segre_datum(Q, 2, 3, 1, 4)) == 0);
    CHECK(detect_trivial(make_full_segre_datum(Q, 2, 3, 1, 4, 2)) == 2);
    CHECK_FALSE(detect_trivial(binary_mult_datum(1, 2, Q)).has_value());

    // dim_x large enough but phi not bijective: structural contradiction.
    SteinerDatum inconsistent = binary_mult_datum(1, 2, Q);
    inconsistent.probe.dim_x = 4;
    inconsistent.probe.dim_sigma_x = 4;
    CHECK_THROWS_AS(detect_trivial(inconsistent), std::domain_error);
}

TEST_CASE("fiber_composite shape") {
    SteinerDatum d = binary_mult_datum(1, 2, Q);
    Matrix c = fiber_composite(d, d.probe.sample_quotients.front());
    CHECK(c.rows() == static_cast<std::size_t>(d.s * d.f0));
    CHECK(c.cols() == static_cast<std::size_t>(d.t));
    CHECK(rank(c) == static_cast<std::size_t>(d.s * d.f0));
}
