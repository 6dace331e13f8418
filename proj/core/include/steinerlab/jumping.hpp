#pragma once

#include "steinerlab/steiner.hpp"

namespace steinerlab {

/// A (1, f0)-jumping pair: a normalized projective point s0 of P(S) and an
/// f0-dimensional subspace Gamma of k^h0 with s0 (x) Gamma inside im phi.
struct JumpingPair {
    std::vector<Scalar> s0;
    Subspace gamma = Subspace::zero(FieldSpec::rationals(), 0);
};

struct Stratum {
    int fiber_dim;
    long sigma_count;
};

struct LocusReport {
    long q = 0;
    std::vector<Stratum> strata;  // ascending fiber_dim, zero counts omitted
    long sigma_total = 0;         // points with fiber_dim >= f0
    mpz_class jtilde_count = 0;   // sum of [fiber_dim choose f0]_q over jumping points
    std::optional<long> j_count;  // distinct Gamma-images, when enumerated
    std::vector<JumpingPair> sample_pairs;
};

struct DimensionEstimate {
    std::vector<std::pair<long, mpz_class>> per_q;
    int estimated_dim = -1;
    bool consistent = false;
};

struct JImageLimits {
    int f0_max = 2;
    int fiber_max = 4;
};

/// Reduces a Q-datum mod q (identity on F_q data). Throws on a bad prime
/// (some denominator divisible by q) naming the offending entry.
SteinerDatum reduce_datum_mod(const SteinerDatum& datum, long q);

/// B_{s0} for the reduced datum; s0 is a jumping point iff dim >= f0.
Subspace fiber_at(const SteinerDatum& datum, const std::vector<Scalar>& s0);

/// Exact stratification of P(S)(F_q) by dim B_{s0}. Internally parallel over
/// disjoint point ranges with an ordered merge; output is independent of the
/// thread count. Worker count is capped by the STEINERLAB_THREADS env var.
LocusReport enumerate_locus(const SteinerDatum& datum, long q, int max_witnesses = 32);

/// Multi-prime leading-exponent fit of |J~(F_q)|. The estimate is the
/// largest d with q_max^d <= count(q_max); consistency requires
/// q^d <= count(q) <= 2^(s+h0) * q^d at every prime. All-zero counts give -1.
DimensionEstimate estimate_dimension(const SteinerDatum& datum, const std::vector<long>& primes);
DimensionEstimate estimate_dimension_from_counts(const std::vector<std::pair<long, mpz_class>>& per_q,
                                                 int s, int h0);

/// Expected-dimension lower bound f0*(t0 - f0 + h0*(1-s)) + s - 1 with
/// t0 = rank phi. May be negative (empty-locus signal).
int lower_bound_dim(const SteinerDatum& datum);

/// True iff the locus reports of the datum and of its reduction coincide
/// stratum-by-stratum with identical witness sets.
bool reduction_invariance_check(const SteinerDatum& datum, long q);

/// The distinct images pi_2(J~)(F_q) as canonical subspaces. Refuses with a
/// size estimate when the combinatorial limits are exceeded.
std::vector<Subspace> enumerate_j_image(const SteinerDatum& datum, long q, JImageLimits limits = {});

/// All k-dimensional subspaces of a given subspace, canonical and sorted.
std::vector<Subspace> enumerate_subspaces_within(const Subspace& space, int k, long q);

/// Normalized representatives of P(F_q^s) in deterministic lexicographic
/// order (first nonzero coordinate = 1).
std::vector<std::vector<Scalar>> projective_points(long q, int s);

/// Worker cap: STEINERLAB_THREADS env var, else hardware concurrency.
unsigned worker_count();

}  // namespace steinerlab
