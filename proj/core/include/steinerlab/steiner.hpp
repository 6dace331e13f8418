#pragma once

#include <string>

#include "steinerlab/tensor_space.hpp"

namespace steinerlab {

/// Finite stand-in for the variety X: its dimension, the dimension of the
/// image of sigma: X -> G(f0-1, P(H0)), and quotient maps H0 ->> (F0^v)_x
/// sampled at finitely many points x.
struct VarietyProbe {
    int dim_x = 0;
    int dim_sigma_x = 0;
    bool sigma_generically_finite = false;
    std::vector<Matrix> sample_quotients;  // each f0 x h0, full rank
};

/// A Steiner bundle datum: the map phi: T* -> S* (x) H0 plus the shape
/// integers and a variety probe. phi has shape (s*h0) x t, columns flattened
/// row-major.
struct SteinerDatum {
    FieldSpec field;
    int s = 0, t = 0, f0 = 0, h0 = 0;
    Matrix phi{FieldSpec::rationals(), 0, 0};
    VarietyProbe probe;
    std::string label;

    int rank_e() const { return t - s * f0; }
    int rank_q() const { return h0 - f0; }
    MatrixSpace image() const { return slices_of_phi(phi, static_cast<std::size_t>(s), static_cast<std::size_t>(h0)); }
};

struct SampleCheck {
    int index;
    bool passed;
    std::size_t rank_found;
    std::size_t rank_required;
};

struct ValidationReport {
    bool accepted = false;
    std::vector<SampleCheck> per_sample;
    std::vector<std::string> shape_errors;
    int failing_index = -1;  // first failing sample, -1 when none
};

/// Checks shape invariants and, per sample quotient Qx, that the composite
/// (I_s (x) Qx) . phi has rank s*f0 (fiberwise surjectivity).
ValidationReport validate(const SteinerDatum& datum);

/// The (s*f0) x t composite matrix for one sample quotient.
Matrix fiber_composite(const SteinerDatum& datum, const Matrix& quotient);

bool is_reduced(const SteinerDatum& datum);

struct ReductionResult {
    SteinerDatum reduced;
    int p;  // dim ker phi, the number of split trivial factors
    Subspace kernel_basis;
};

/// Splits off the trivial factor: keeps the pivot columns of phi, so the
/// image is unchanged and the new phi is injective. Idempotent.
ReductionResult reduce(const SteinerDatum& datum);

struct RankBound {
    int rk_e, rk_q, bound;
    bool satisfied;
};

/// rk(E) >= min(dim X, s*rk(Q)); requires the sigma_generically_finite flag
/// (the hypothesis surrogate), otherwise throws.
RankBound rank_bound(const SteinerDatum& datum);

/// When dim X >= s*rk(Q), every such bundle is (S (x) Q) + O^p. Returns p if
/// the hypothesis holds and the structural signature (bijective reduced phi)
/// checks out; nullopt when the hypothesis fails; throws on inconsistency.
std::optional<int> detect_trivial(const SteinerDatum& datum);

/// The full Segre datum: t = s*h0 + padding, phi = [identity | 0]. Sample
/// quotients are a fixed full-rank pair.
SteinerDatum make_full_segre_datum(FieldSpec field, int s, int h0, int f0, int dim_x, int padding = 0);

/// Appends zero columns to phi (t grows by `count`), for reduction tests.
SteinerDatum pad_with_zero_columns(const SteinerDatum& datum, int count);

}  // namespace steinerlab
