#include <cstdlib>
#include <set>

#include "test_util.hpp"

using namespace steinerlab;
using namespace steinerlab::testutil;

static const FieldSpec Q = FieldSpec::rationals();

namespace {

// Generic 2-dimensional T0* in k^2 (x) k^2 whose determinant form x^2 - y^2
// splits: two jumping points over every odd prime.
SteinerDatum generic_pencil() {
    Matrix phi(Q, 4, 2);
    // columns flatten I and the swap matrix
    phi.set(0, 0, Scalar(1));
    phi.set(3, 0, Scalar(1));
    phi.set(1, 1, Scalar(1));
    phi.set(2, 1, Scalar(1));
    VarietyProbe probe{1, 1, true, {mat(Q, {{1, 0}}), mat(Q, {{0, 1}}), mat(Q, {{1, 1}})}};
    return SteinerDatum{Q, 2, 2, 1, 2, std::move(phi), std::move(probe), "generic pencil"};
}

// Pencil with determinant x^2 + y^2: no jumping points over F3.
SteinerDatum empty_pencil() {
    Matrix phi(Q, 4, 2);
    phi.set(0, 0, Scalar(1));
    phi.set(3, 0, Scalar(1));
    phi.set(1, 1, Scalar(1));
    phi.set(2, 1, Scalar(-1));
    VarietyProbe probe{1, 1, true, {mat(Q, {{1, 0}}), mat(Q, {{0, 1}})}};
    return SteinerDatum{Q, 2, 2, 1, 2, std::move(phi), std::move(probe), "empty pencil"};
}

}  // namespace

TEST_CASE("fiber_at closed forms for binary families") {
    SteinerDatum d12 = binary_mult_datum(1, 2, Q);
    CHECK(fiber_at(d12, vec({2, 1})) == Subspace::from_spanning(mat(Q, {{4, 2, 1}})));

    SteinerDatum d22 = binary_mult_datum(2, 2, Q);
    CHECK(fiber_at(d22, vec({1, 0, 0})) == Subspace::from_spanning(mat(Q, {{1, 0, 0}})));
    CHECK(fiber_at(d22, vec({0, 1, 0})).dim() == 0);
    CHECK_THROWS(fiber_at(d22, vec({0, 0, 0})));
}

TEST_CASE("enumerate_locus: spec counts") {
    SteinerDatum d12 = reduce_datum_mod(binary_mult_datum(1, 2, Q), 2);
    LocusReport r12 = enumerate_locus(d12, 2);
    CHECK(r12.sigma_total == 3);
    CHECK(r12.jtilde_count == 3);
    REQUIRE(r12.strata.size() == 1);
    CHECK(r12.strata[0].fiber_dim == 1);
    CHECK(r12.strata[0].sigma_count == 3);

    LocusReport r22 = enumerate_locus(reduce_datum_mod(binary_mult_datum(2, 2, Q), 3), 3);
    CHECK(r22.sigma_total == 4);
    CHECK(r22.jtilde_count == 4);

    LocusReport seg = enumerate_locus(reduce_datum_mod(make_full_segre_datum(Q, 2, 3, 1, 4), 2), 2);
    CHECK(seg.sigma_total == 3);
    CHECK(seg.jtilde_count == 21);
    REQUIRE(seg.strata.size() == 1);
    CHECK(seg.strata[0].fiber_dim == 3);
}

TEST_CASE("strata partition P(S) and witnesses satisfy the pair invariant") {
    for (long q : {2L, 3L}) {
        for (SteinerDatum base : {binary_mult_datum(1, 2, Q), binary_mult_datum(2, 2, Q),
                                  veronese_datum(Q), generic_pencil()}) {
            SteinerDatum dq = reduce_datum_mod(reduce(base).reduced, q);
            LocusReport rep = enumerate_locus(dq, q);
            long total = 0;
            for (const auto& s : rep.strata) {
                CHECK(s.sigma_count > 0);
                total += s.sigma_count;
            }
            mpz_class points;
            mpz_ui_pow_ui(points.get_mpz_t(), static_cast<unsigned long>(q),
                          static_cast<unsigned long>(dq.s));
            CHECK(total == (points - 1) / (q - 1));

            MatrixSpace image = dq.image();
            for (const auto& pair : rep.sample_pairs) {
                CHECK(pair.gamma.dim() == static_cast<std::size_t>(dq.f0));
                Subspace line = Subspace::from_spanning(Matrix::from_rows(dq.field, {pair.s0}));
                CHECK(is_pure_in(image, line, pair.gamma));
                CHECK(contract_line(image, pair.s0).contains(pair.gamma));
            }
        }
    }
}

TEST_CASE("jtilde oracle: direct pair enumeration at q=2") {
    for (SteinerDatum base : {binary_mult_datum(1, 2, Q), binary_mult_datum(1, 1, Q),
                              make_full_segre_datum(Q, 2, 3, 1, 4), scroll_datum(1, 1, 1, Q)}) {
        SteinerDatum dq = reduce(reduce_datum_mod(reduce(base).reduced, 2)).reduced;
        LocusReport rep = enumerate_locus(dq, 2);
        mpz_class direct = 0;
        for (const auto& s0 : projective_points(2, dq.s)) {
            Subspace fiber = fiber_at(dq, s0);
            if (fiber.dim() < static_cast<std::size_t>(dq.f0)) continue;
            direct += static_cast<long>(enumerate_subspaces_within(fiber, dq.f0, 2).size());
        }
        CHECK(rep.jtilde_count == direct);
    }
}

TEST_CASE("estimate_dimension: curve, threefold, finite set, empty") {
    CHECK(estimate_dimension(binary_mult_datum(1, 2, Q), {2, 3, 5}).estimated_dim == 1);

    DimensionEstimate seg = estimate_dimension(make_full_segre_datum(Q, 2, 3, 1, 4), {2, 3});
    CHECK(seg.estimated_dim == 3);
    CHECK(seg.consistent);

    DimensionEstimate fin = estimate_dimension(generic_pencil(), {3, 5});
    CHECK(fin.estimated_dim == 0);
    CHECK(fin.consistent);
    for (const auto& [q, c] : fin.per_q) CHECK(c <= 2);

    DimensionEstimate empty = estimate_dimension(empty_pencil(), {3, 7});
    CHECK(empty.estimated_dim == -1);

    CHECK_THROWS(estimate_dimension(binary_mult_datum(1, 2, Q), {2}));
}

TEST_CASE("lower bound arithmetic") {
    CHECK(lower_bound_dim(binary_mult_datum(1, 2, Q)) == 1);
    CHECK(lower_bound_dim(binary_mult_datum(2, 2, Q)) == 0);
    CHECK(lower_bound_dim(make_full_segre_datum(Q, 2, 3, 1, 4)) == 3);
    // t0 = rank phi, so padding does not change the bound.
    CHECK(lower_bound_dim(pad_with_zero_columns(binary_mult_datum(1, 2, Q), 3)) == 1);
}

TEST_CASE("locus reports are invariant under splitting off trivial factors") {
    CHECK(reduction_invariance_check(pad_with_zero_columns(binary_mult_datum(1, 2, Q), 1), 2));
    CHECK(reduction_invariance_check(pad_with_zero_columns(make_full_segre_datum(Q, 2, 3, 1, 4), 2), 3));
    CHECK(reduction_invariance_check(binary_mult_datum(2, 2, Q), 5));
}

TEST_CASE("enumerate_j_image") {
    std::vector<Subspace> lines12 = enumerate_j_image(binary_mult_datum(1, 2, Q), 2);
    CHECK(lines12.size() == 3);

    std::vector<Subspace> all_lines = enumerate_j_image(make_full_segre_datum(Q, 2, 3, 1, 4), 2);
    CHECK(all_lines.size() == 7);

    CHECK(enumerate_j_image(empty_pencil(), 3).empty());

    // Combinatorial guard: fiber dims of the full Segre with h0=3 are 3 <= 4,
    // but pushing fiber_max below that refuses with a size estimate.
    JImageLimits tight;
    tight.fiber_max = 2;
    CHECK_THROWS_AS(enumerate_j_image(make_full_segre_datum(Q, 2, 3, 1, 4), 2, tight),
                    std::domain_error);
}

TEST_CASE("bad primes are reported, not silently skipped") {
    SteinerDatum d = binary_mult_datum(1, 2, Q);
    d.phi.set(0, 0, Scalar(mpq_class(1, 2)));
    CHECK_THROWS(reduce_datum_mod(d, 2));
    CHECK_NOTHROW(reduce_datum_mod(d, 3));
}

TEST_CASE("projective point enumeration is exact and duplicate-free") {
    for (long q : {2L, 3L, 5L})
        for (int s = 1; s <= 3; ++s) {
            auto pts = projective_points(q, s);
            mpz_class expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(q),
                          static_cast<unsigned long>(s));
            expected = (expected - 1) / (q - 1);
            CHECK(mpz_class(static_cast<long>(pts.size())) == expected);
            std::set<std::vector<std::string>> seen;
            for (const auto& p : pts) {
                std::vector<std::string> key;
                for (const auto& x : p) key.push_back(FieldSpec::to_string(x));
                CHECK(seen.insert(key).second);
            }
        }
}

TEST_CASE("worker count respects STEINERLAB_THREADS and results do not depend on it") {
    const char* saved = std::getenv("STEINERLAB_THREADS");
    std::string saved_value = saved ? saved : "";

    ::setenv("STEINERLAB_THREADS", "3", 1);
    CHECK(worker_count() == 3);

    SteinerDatum dq = reduce_datum_mod(binary_mult_datum(2, 2, Q), 5);
    ::setenv("STEINERLAB_THREADS", "1", 1);
    std::string one = canonical_dump(locus_report_to_json(enumerate_locus(dq, 5)));
    ::setenv("STEINERLAB_THREADS", "4", 1);
    std::string four = canonical_dump(locus_report_to_json(enumerate_locus(dq, 5)));
    CHECK(one == four);

    if (saved)
        ::setenv("STEINERLAB_THREADS", saved_value.c_str(), 1);
    else
        ::unsetenv("STEINERLAB_THREADS");
}
