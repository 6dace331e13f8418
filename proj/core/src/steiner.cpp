#include "steinerlab/steiner.hpp"

#include <stdexcept>

namespace steinerlab {

Matrix fiber_composite(const SteinerDatum& datum, const Matrix& quotient) {
    const std::size_t s = datum.s, h0 = datum.h0, f0 = datum.f0, t = datum.phi.cols();
    if (quotient.rows() != f0 || quotient.cols() != h0)
        throw std::invalid_argument("fiber_composite: quotient must be f0 x h0");
    Matrix qt = quotient.transpose();
    Matrix composite(datum.field, s * f0, t);
    for (std::size_t c = 0; c < t; ++c) {
        Matrix slice(datum.field, s, h0);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < h0; ++j) slice.set(i, j, datum.phi.at(i * h0 + j, c));
        Matrix reduced = slice * qt;  // s x f0
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < f0; ++j) composite.set(i * f0 + j, c, reduced.at(i, j));
    }
    return composite;
}

ValidationReport validate(const SteinerDatum& datum) {
    ValidationReport report;
    if (datum.s < 1 || datum.t < 1 || datum.f0 < 1 || datum.h0 < 1)
        report.shape_errors.push_back("dimensions s, t, f0, h0 must be positive");
    if (datum.rank_e() < 1)
        report.shape_errors.push_back("rk(E) = t - s*f0 must be >= 1");
    if (datum.h0 < datum.f0)
        report.shape_errors.push_back("h0 must be >= f0 (global generation)");
    if (datum.phi.rows() != static_cast<std::size_t>(datum.s) * datum.h0 ||
        datum.phi.cols() != static_cast<std::size_t>(datum.t))
        report.shape_errors.push_back("phi must have shape (s*h0) x t");
    if (datum.probe.dim_sigma_x < 0 || datum.probe.dim_sigma_x > datum.probe.dim_x)
        report.shape_errors.push_back("require 0 <= dim_sigma_x <= dim_x");
    if (datum.probe.sigma_generically_finite && datum.probe.dim_sigma_x != datum.probe.dim_x)
        report.shape_errors.push_back("sigma generically finite forces dim_sigma_x = dim_x");
    if (!report.shape_errors.empty()) return report;

    const std::size_t required = static_cast<std::size_t>(datum.s) * datum.f0;
    bool all_pass = true;
    for (std::size_t idx = 0; idx < datum.probe.sample_quotients.size(); ++idx) {
        const Matrix& q = datum.probe.sample_quotients[idx];
        if (q.rows() != static_cast<std::size_t>(datum.f0) || q.cols() != static_cast<std::size_t>(datum.h0) ||
            rank(q) != static_cast<std::size_t>(datum.f0)) {
            report.shape_errors.push_back("sample quotient " + std::to_string(idx) + " is not full rank f0 x h0");
            all_pass = false;
            if (report.failing_index < 0) report.failing_index = static_cast<int>(idx);
            continue;
        }
        std::size_t r = rank(fiber_composite(datum, q));
        bool pass = (r == required);
        report.per_sample.push_back({static_cast<int>(idx), pass, r, required});
        if (!pass) {
            all_pass = false;
            if (report.failing_index < 0) report.failing_index = static_cast<int>(idx);
        }
    }
    report.accepted = all_pass && report.shape_errors.empty();
    return report;
}

bool is_reduced(const SteinerDatum& datum) { return rank(datum.phi) == datum.phi.cols(); }

ReductionResult reduce(const SteinerDatum& datum) {
    Subspace ker = kernel(datum.phi);
    // Keep the pivot columns of phi: independent, same image, deterministic.
    RrefResult r = rref(datum.phi);
    Matrix phi_reduced(datum.field, datum.phi.rows(), r.pivots.size());
    for (std::size_t c = 0; c < r.pivots.size(); ++c)
        for (std::size_t i = 0; i < datum.phi.rows(); ++i) phi_reduced.set(i, c, datum.phi.at(i, r.pivots[c]));
    SteinerDatum reduced = datum;
    reduced.phi = std::move(phi_reduced);
    reduced.t = static_cast<int>(r.pivots.size());
    int p = datum.t - reduced.t;
    return ReductionResult{std::move(reduced), p, std::move(ker)};
}

RankBound rank_bound(const SteinerDatum& datum) {
    if (!datum.probe.sigma_generically_finite)
        throw std::domain_error(
            "rank_bound: the probe does not certify that sigma is generically finite; "
            "the bound's hypothesis is not satisfied");
    RankBound b;
    b.rk_e = datum.rank_e();
    b.rk_q = datum.rank_q();
    b.bound = std::min(datum.probe.dim_x, datum.s * b.rk_q);
    b.satisfied = b.rk_e >= b.bound;
    return b;
}

std::optional<int> detect_trivial(const SteinerDatum& datum) {
    if (datum.probe.dim_x < datum.s * datum.rank_q()) return std::nullopt;
    ReductionResult r = reduce(datum);
    const std::size_t full = static_cast<std::size_t>(datum.s) * datum.h0;
    bool bijective = r.reduced.phi.cols() == full && rank(r.reduced.phi) == full;
    if (!bijective)
        throw std::domain_error(
            "detect_trivial: dim X >= s*rk(Q) but the reduced phi is not bijective; "
            "the datum contradicts the trivial-bundle hypotheses");
    return r.p;
}

SteinerDatum make_full_segre_datum(FieldSpec field, int s, int h0, int f0, int dim_x, int padding) {
    const std::size_t n = static_cast<std::size_t>(s) * h0;
    Matrix phi = Matrix::identity(field, n);
    if (padding > 0) phi = phi.hstack(Matrix(field, n, padding));

    VarietyProbe probe;
    probe.dim_x = dim_x;
    probe.dim_sigma_x = dim_x;
    probe.sigma_generically_finite = true;
    // Three fixed full-rank quotients: identity block, shifted block, and a
    // banded all-ones triangle.
    Matrix q1(field, f0, h0), q2(field, f0, h0), q3(field, f0, h0);
    for (int i = 0; i < f0; ++i) {
        q1.set(i, i, Scalar(1));
        q2.set(i, i + (h0 - f0), Scalar(1));
        for (int j = i; j < h0; ++j) q3.set(i, j, Scalar(1));
    }
    probe.sample_quotients = {q1, q2, q3};

    SteinerDatum datum{field, s, static_cast<int>(n) + padding, f0, h0, std::move(phi), std::move(probe),
                       "full-segre s=" + std::to_string(s) + " h0=" + std::to_string(h0) +
                           " f0=" + std::to_string(f0)};
    return datum;
}

SteinerDatum pad_with_zero_columns(const SteinerDatum& datum, int count) {
    SteinerDatum padded = datum;
    padded.phi = datum.phi.hstack(Matrix(datum.field, datum.phi.rows(), count));
    padded.t = datum.t + count;
    padded.label = datum.label + " +pad" + std::to_string(count);
    return padded;
}

}  // namespace steinerlab
