#include "steinerlab/tangent.hpp"

#include <random>
#include <stdexcept>

namespace steinerlab {

namespace {

// First nonzero coordinate scaled to 1.
std::vector<Scalar> normalize_point(const FieldSpec& f, const std::vector<Scalar>& s0) {
    std::size_t lead = s0.size();
    for (std::size_t i = 0; i < s0.size(); ++i)
        if (s0[i] != 0) {
            lead = i;
            break;
        }
    if (lead == s0.size()) throw std::invalid_argument("jumping pair: s0 must be nonzero");
    Scalar inv = f.inv(s0[lead]);
    std::vector<Scalar> out(s0.size());
    for (std::size_t i = 0; i < s0.size(); ++i) out[i] = f.mul(s0[i], inv);
    return out;
}

std::size_t lead_index(const std::vector<Scalar>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    throw std::invalid_argument("lead_index: zero vector");
}

// Quotient map k^s -> k^s/<s0> in the coordinates {e_k : k != p0}, with s0
// normalized so s0[p0] = 1.
std::vector<Scalar> project_mod_line(const FieldSpec& f, const std::vector<Scalar>& s0, std::size_t p0,
                                     const std::vector<Scalar>& y) {
    std::vector<Scalar> out;
    out.reserve(y.size() - 1);
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (k == p0) continue;
        out.push_back(f.sub(y[k], f.mul(y[p0], s0[k])));
    }
    return out;
}

void check_pair(const SteinerDatum& reduced, const JumpingPair& pair) {
    if (pair.s0.size() != static_cast<std::size_t>(reduced.s))
        throw std::invalid_argument("jumping pair: s0 length mismatch");
    if (pair.gamma.ambient_dim() != static_cast<std::size_t>(reduced.h0) ||
        pair.gamma.dim() != static_cast<std::size_t>(reduced.f0))
        throw std::invalid_argument("jumping pair: Gamma must be an f0-dimensional subspace of k^h0");
    MatrixSpace image = reduced.image();
    Subspace line = Subspace::from_spanning(Matrix::from_rows(reduced.field, {pair.s0}));
    if (!is_pure_in(image, line, pair.gamma))
        throw std::invalid_argument("jumping pair: s0 (x) Gamma is not contained in im phi");
}

// Complement representatives of Lambda inside T0*: greedy completion of the
// lambda flats by canonical basis rows of the image.
std::vector<Matrix> lambda_complement(const MatrixSpace& image, const std::vector<Matrix>& lambda) {
    const FieldSpec f = image.field();
    std::vector<std::vector<Scalar>> rows;
    for (const auto& l : lambda) rows.push_back(l.flat());
    Matrix stack = Matrix::from_rows(f, rows);
    if (rank(stack) != lambda.size()) throw std::invalid_argument("jumping pair: Lambda is rank-deficient");
    std::vector<Matrix> mu;
    std::size_t current = lambda.size();
    for (std::size_t r = 0; r < image.dim() && current < image.dim(); ++r) {
        Matrix candidate = stack.vstack(Matrix::from_rows(f, {image.flattened().row(r)}));
        if (rank(candidate) > current) {
            stack = std::move(candidate);
            ++current;
            mu.push_back(image.basis()[r]);
        }
    }
    return mu;
}

}  // namespace

AdaptedBasis adapted_basis(const SteinerDatum& datum, const JumpingPair& pair) {
    SteinerDatum reduced = reduce(datum).reduced;
    check_pair(reduced, pair);
    const FieldSpec f = reduced.field;
    const int s = reduced.s, h0 = reduced.h0, f0 = reduced.f0;

    std::vector<Scalar> s0 = normalize_point(f, pair.s0);
    std::size_t p0 = lead_index(s0);

    // v: s0 then standard-basis fill-in skipping the pivot coordinate.
    std::vector<std::vector<Scalar>> v_rows{s0};
    for (int k = 0; k < s; ++k) {
        if (static_cast<std::size_t>(k) == p0) continue;
        std::vector<Scalar> e(s, Scalar(0));
        e[k] = Scalar(1);
        v_rows.push_back(e);
    }
    Matrix v = Matrix::from_rows(f, v_rows);

    const Matrix& gamma = pair.gamma.basis();
    RrefResult gr = rref(gamma);

    // u_1..u_f0 = pivot duals of the RREF of Gamma; u_k for k > f0 a basis of
    // the annihilator of Gamma. Pivot duals satisfy gamma_i . u_j = delta_ij.
    std::vector<std::vector<Scalar>> u_rows;
    for (std::size_t j = 0; j < gr.pivots.size(); ++j) {
        std::vector<Scalar> e(h0, Scalar(0));
        e[gr.pivots[j]] = Scalar(1);
        u_rows.push_back(e);
    }
    Subspace ann = kernel(gamma);
    for (std::size_t r = 0; r < ann.dim(); ++r) u_rows.push_back(ann.basis().row(r));
    Matrix u = Matrix::from_rows(f, u_rows);
    if (rank(u) != static_cast<std::size_t>(h0))
        throw std::logic_error("adapted_basis: dual completion is not a basis");

    std::vector<Matrix> lambda;
    for (int i = 0; i < f0; ++i) lambda.push_back(outer(f, s0, gamma.row(i)));
    return AdaptedBasis{std::move(v), gamma, std::move(u), std::move(lambda)};
}

TangentReport tangent_dimension(const SteinerDatum& datum, const JumpingPair& pair, bool strict,
                                unsigned long lift_seed) {
    bool auto_reduced = !is_reduced(datum);
    if (auto_reduced && strict)
        throw std::invalid_argument("tangent_dimension: datum is not reduced (strict mode)");
    SteinerDatum reduced = reduce(datum).reduced;
    AdaptedBasis basis = adapted_basis(reduced, pair);
    const FieldSpec f = reduced.field;
    const int s = reduced.s, f0 = reduced.f0;
    const MatrixSpace image = reduced.image();
    const int t0 = static_cast<int>(image.dim());

    std::vector<Scalar> s0 = normalize_point(f, pair.s0);
    std::size_t p0 = lead_index(s0);

    std::vector<Matrix> mu = lambda_complement(image, basis.lambda);
    const int m = static_cast<int>(mu.size());  // t0 - f0
    if (lift_seed != 0) {
        // Shift each representative by a pseudo-random Lambda component;
        // the computed dimension must be independent of this choice.
        std::mt19937_64 rng(lift_seed);
        for (auto& slice : mu) {
            Matrix shifted = slice;
            for (int i = 0; i < f0; ++i) {
                long c = static_cast<long>(rng() % 5);
                for (std::size_t a = 0; a < shifted.rows(); ++a)
                    for (std::size_t b = 0; b < shifted.cols(); ++b)
                        shifted.set(a, b, f.add(shifted.at(a, b), f.mul(Scalar(c), basis.lambda[i].at(a, b))));
            }
            slice = shifted;
        }
    }

    const int unknowns = f0 * m;
    std::vector<std::vector<Scalar>> rows;
    auto unknown = [m](int i, int j) { return i * m + j; };

    // (psi(lambda_i))(ker lambda_i) inside <v_1>.
    for (int i = 0; i < f0; ++i) {
        Subspace ker_i = kernel(basis.lambda[i]);
        for (std::size_t w = 0; w < ker_i.dim(); ++w) {
            std::vector<Scalar> wv = ker_i.basis().row(w);
            std::vector<std::vector<Scalar>> cols(m);
            for (int j = 0; j < m; ++j) cols[j] = project_mod_line(f, s0, p0, mu[j].apply(wv));
            for (int r = 0; r < s - 1; ++r) {
                std::vector<Scalar> row(unknowns, Scalar(0));
                for (int j = 0; j < m; ++j) row[unknown(i, j)] = cols[j][r];
                rows.push_back(std::move(row));
            }
        }
    }
    // (psi(lambda_0))(u_0) = (psi(lambda_i))(u_i) mod v_1, i > 0.
    for (int i = 1; i < f0; ++i) {
        std::vector<std::vector<Scalar>> cols0(m), colsi(m);
        for (int j = 0; j < m; ++j) {
            cols0[j] = project_mod_line(f, s0, p0, mu[j].apply(basis.u.row(0)));
            colsi[j] = project_mod_line(f, s0, p0, mu[j].apply(basis.u.row(i)));
        }
        for (int r = 0; r < s - 1; ++r) {
            std::vector<Scalar> row(unknowns, Scalar(0));
            for (int j = 0; j < m; ++j) {
                row[unknown(0, j)] = cols0[j][r];
                row[unknown(i, j)] = f.neg(colsi[j][r]);
            }
            rows.push_back(std::move(row));
        }
    }

    std::size_t system_rank = rows.empty() ? 0 : rank(Matrix::from_rows(f, rows));
    TangentReport report;
    report.pair = pair;
    report.ambient_dim = unknowns;
    report.tangent_dim = unknowns - static_cast<int>(system_rank);
    report.upper_bound = upper_bound_dim(reduced);
    report.auto_reduced = auto_reduced;
    return report;
}

int upper_bound_dim(const SteinerDatum& datum) {
    if (!is_reduced(datum))
        throw std::invalid_argument("upper_bound_dim: datum is not reduced; reduce it first");
    return datum.f0 * (datum.t - datum.probe.dim_sigma_x - datum.f0 * datum.s + 1);
}

SteinerDatum induction_step(const SteinerDatum& datum, const JumpingPair& pair) {
    if (datum.s < 2) throw std::invalid_argument("induction_step: s must be >= 2");
    SteinerDatum reduced = reduce(datum).reduced;
    check_pair(reduced, pair);
    const FieldSpec f = reduced.field;
    const int h0 = reduced.h0;

    std::vector<Scalar> s0 = normalize_point(f, pair.s0);
    std::size_t p0 = lead_index(s0);
    MatrixSpace image = reduced.image();

    std::vector<Matrix> lambda;
    for (std::size_t i = 0; i < pair.gamma.dim(); ++i) lambda.push_back(outer(f, s0, pair.gamma.basis().row(i)));
    std::vector<Matrix> mu = lambda_complement(image, lambda);

    // phi': columns are the complement slices with S*-rows projected mod <s0>.
    Matrix phi_new(f, static_cast<std::size_t>(reduced.s - 1) * h0, mu.size());
    for (std::size_t c = 0; c < mu.size(); ++c)
        for (int j = 0; j < h0; ++j) {
            std::vector<Scalar> col = project_mod_line(f, s0, p0, mu[c].col(j));
            for (int i = 0; i < reduced.s - 1; ++i) phi_new.set(static_cast<std::size_t>(i) * h0 + j, c, col[i]);
        }

    SteinerDatum next = reduced;
    next.s = reduced.s - 1;
    next.t = static_cast<int>(mu.size());
    next.phi = std::move(phi_new);
    next.label = reduced.label + " /induction";
    return reduce(next).reduced;
}

std::string class_case_name(ClassCase c) {
    switch (c) {
        case ClassCase::Trivial: return "Trivial";
        case ClassCase::CaseI: return "CaseI";
        case ClassCase::CaseII: return "CaseII";
        case ClassCase::CaseIII: return "CaseIII";
        case ClassCase::CaseIV: return "CaseIV";
        case ClassCase::CaseV: return "CaseV";
        case ClassCase::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

namespace {

mpz_class projective_count(long q, int dim) {
    // |P^dim(F_q)| = (q^(dim+1) - 1)/(q - 1)
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(dim + 1));
    return (num - 1) / (q - 1);
}

// Finite-field shadow of birationality of pi_1 through every induction step:
// over each prime, every jumping fiber is a single Grassmannian point
// (dim B = f0), at this level and at each further induction level.
bool birational_all_steps(const SteinerDatum& datum, const std::vector<long>& primes,
                          std::map<std::string, std::string>& evidence) {
    bool all = true;
    for (long q : primes) {
        SteinerDatum dq = reduce(reduce_datum_mod(datum, q)).reduced;
        int level = 0;
        while (dq.s >= 2) {
            LocusReport rep = enumerate_locus(dq, q);
            bool level_ok = true;
            for (const auto& st : rep.strata)
                if (st.fiber_dim > dq.f0) level_ok = false;
            evidence["birational.q" + std::to_string(q) + ".level" + std::to_string(level)] =
                level_ok ? "fibers=f0" : "fiber>f0";
            if (!level_ok) all = false;
            if (rep.sample_pairs.empty() || !level_ok) break;
            dq = induction_step(dq, rep.sample_pairs.front());
            ++level;
        }
    }
    return all;
}

}  // namespace

ClassificationVerdict classify_maximal(const SteinerDatum& datum,
                                       const std::vector<LocusReport>& locus_reports,
                                       const std::vector<TangentReport>& tangents) {
    if (!is_reduced(datum)) throw std::invalid_argument("classify_maximal: datum must be reduced");
    if (locus_reports.size() < 2)
        throw std::invalid_argument("classify_maximal: need locus reports from at least two primes");

    ClassificationVerdict out;
    std::vector<std::pair<long, mpz_class>> per_q;
    std::vector<long> primes;
    for (const auto& rep : locus_reports) {
        per_q.emplace_back(rep.q, rep.jtilde_count);
        primes.push_back(rep.q);
        out.evidence["jtilde.q" + std::to_string(rep.q)] = rep.jtilde_count.get_str();
        out.evidence["sigma.q" + std::to_string(rep.q)] = std::to_string(rep.sigma_total);
    }
    DimensionEstimate est = estimate_dimension_from_counts(per_q, datum.s, datum.h0);
    int ub = upper_bound_dim(datum);
    out.evidence["estimated_dim"] = std::to_string(est.estimated_dim);
    out.evidence["estimate_consistent"] = est.consistent ? "true" : "false";
    out.evidence["upper_bound"] = std::to_string(ub);
    out.evidence["f0"] = std::to_string(datum.f0);
    out.evidence["s"] = std::to_string(datum.s);
    for (std::size_t i = 0; i < tangents.size(); ++i)
        out.evidence["tangent_dim." + std::to_string(i)] = std::to_string(tangents[i].tangent_dim);

    // The trivial signature is structural (full tensor space), so it is
    // checked before the maximality gate: the upper-bound formula assumes a
    // generically finite sigma, which the trivial case does not have.
    const bool trivial_pred = datum.probe.dim_x >= datum.s * datum.rank_q();
    out.evidence["trivial.dim_x>=s*rk_q"] = trivial_pred ? "true" : "false";
    if (trivial_pred) out.matched.push_back(ClassCase::Trivial);

    if (trivial_pred) {
        out.verdict = ClassCase::Trivial;
        out.triple_description = "trivial bundle S (x) Q (plus trivial factors)";
        return out;
    }
    if (!est.consistent || est.estimated_dim != ub) {
        out.verdict = ClassCase::Unclassified;
        out.triple_description = "estimated dimension does not certify maximality";
        return out;
    }

    bool pi1_surjective = true;
    for (const auto& rep : locus_reports)
        if (mpz_class(rep.sigma_total) != projective_count(rep.q, datum.s - 1)) pi1_surjective = false;
    out.evidence["pi1_surjective"] = pi1_surjective ? "true" : "false";
    if (datum.s <= datum.f0 + 1 && pi1_surjective) out.matched.push_back(ClassCase::CaseII);

    bool birational = birational_all_steps(datum, primes, out.evidence);
    out.evidence["birational_all_steps"] = birational ? "true" : "false";

    bool sigma_is_line = true;  // sigma_total = q + 1 at every prime
    for (const auto& rep : locus_reports)
        if (mpz_class(rep.sigma_total) != projective_count(rep.q, 1)) sigma_is_line = false;

    if (datum.f0 == 1 && birational && sigma_is_line) out.matched.push_back(ClassCase::CaseI);
    if (datum.f0 > 1 && birational) out.matched.push_back(ClassCase::CaseIII);

    if (datum.f0 == 1 && !birational && datum.s >= 3) {
        bool j_is_p1 = true, j_is_p2 = true, sigma_is_p2 = true;
        for (const auto& rep : locus_reports) {
            try {
                long jc = static_cast<long>(enumerate_j_image(datum, rep.q).size());
                out.evidence["jcount.q" + std::to_string(rep.q)] = std::to_string(jc);
                if (mpz_class(jc) != projective_count(rep.q, 1)) j_is_p1 = false;
                if (mpz_class(jc) != projective_count(rep.q, 2)) j_is_p2 = false;
            } catch (const std::domain_error& e) {
                out.evidence["jcount.q" + std::to_string(rep.q)] = std::string("refused: ") + e.what();
                j_is_p1 = j_is_p2 = false;
            }
            if (mpz_class(rep.sigma_total) != projective_count(rep.q, 2)) sigma_is_p2 = false;
        }
        if (j_is_p1) out.matched.push_back(ClassCase::CaseIV);
        if (datum.s == 3 && sigma_is_p2 && j_is_p2) out.matched.push_back(ClassCase::CaseV);
    }

    // Precedence: Trivial, then CaseI before CaseII (the f0 = 1, s = 2
    // rational normal curve satisfies both), then III, IV, V.
    const ClassCase order[] = {ClassCase::Trivial, ClassCase::CaseI, ClassCase::CaseII,
                               ClassCase::CaseIII, ClassCase::CaseIV, ClassCase::CaseV};
    for (ClassCase c : order)
        for (ClassCase m : out.matched)
            if (m == c && out.verdict == ClassCase::Unclassified) out.verdict = c;

    switch (out.verdict) {
        case ClassCase::Trivial:
            out.triple_description = "trivial bundle S (x) Q (plus trivial factors)";
            break;
        case ClassCase::CaseI:
            out.triple_description =
                "Schwarzenberger triple (J~, |pi2* O_PN(1)|, pi1* O_P1(s-1)); J~ a rational normal curve";
            break;
        case ClassCase::CaseII:
            out.triple_description =
                "Schwarzenberger triple (J~, |pi2* U^v|, pi1* O_PS(1)); Grassmannian bundle over P(S)";
            break;
        case ClassCase::CaseIII:
            out.triple_description = "Schwarzenberger triple (J~, |pi2* U^v|, O_J~(1)); J~ = Sigma";
            break;
        case ClassCase::CaseIV:
            out.triple_description =
                "Schwarzenberger triple (J~, |pi2* O_P1(1)|, pi1* O_Sigma(1)); J~ a rational normal scroll";
            break;
        case ClassCase::CaseV:
            out.triple_description =
                "Schwarzenberger triple (J~, |pi2* O_P2(1)|, pi1* O_P2(1)); J~ a Veronese surface";
            break;
        case ClassCase::Unclassified:
            out.triple_description = "no case matched";
            break;
    }
    return out;
}

}  // namespace steinerlab
