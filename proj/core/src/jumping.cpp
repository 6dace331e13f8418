#include "steinerlab/jumping.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace steinerlab {

unsigned worker_count() {
    if (const char* env = std::getenv("STEINERLAB_THREADS")) {
        long n = std::atol(env);
        if (n >= 1 && n <= 256) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

SteinerDatum reduce_datum_mod(const SteinerDatum& datum, long q) {
    if (datum.field.is_prime_field()) {
        if (datum.field.p != q)
            throw std::invalid_argument("reduce_datum_mod: datum lives over F" + std::to_string(datum.field.p) +
                                        ", cannot enumerate over F" + std::to_string(q));
        return datum;
    }
    FieldSpec fq = FieldSpec::prime(q);
    auto reduce_matrix = [&](const Matrix& m, const std::string& name) {
        Matrix out(fq, m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const Scalar& e = m.at(i, j);
                if (mpz_divisible_ui_p(e.get_den().get_mpz_t(), static_cast<unsigned long>(q)))
                    throw std::domain_error("reduce_datum_mod: bad prime " + std::to_string(q) + " for " + name +
                                            " entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                            e.get_str());
                out.set(i, j, e);
            }
        return out;
    };
    SteinerDatum out = datum;
    out.field = fq;
    out.phi = reduce_matrix(datum.phi, "phi");
    out.probe.sample_quotients.clear();
    for (std::size_t k = 0; k < datum.probe.sample_quotients.size(); ++k)
        out.probe.sample_quotients.push_back(
            reduce_matrix(datum.probe.sample_quotients[k], "sample_quotient[" + std::to_string(k) + "]"));
    return out;
}

Subspace fiber_at(const SteinerDatum& datum, const std::vector<Scalar>& s0) {
    SteinerDatum reduced = reduce(datum).reduced;
    return contract_line(reduced.image(), s0);
}

std::vector<std::vector<Scalar>> projective_points(long q, int s) {
    std::vector<std::vector<Scalar>> points;
    for (int lead = 0; lead < s; ++lead) {
        std::vector<long> tail(s - lead - 1, 0);
        while (true) {
            std::vector<Scalar> v(s, Scalar(0));
            v[lead] = Scalar(1);
            for (int k = 0; k < s - lead - 1; ++k) v[lead + 1 + k] = Scalar(tail[k]);
            points.push_back(v);
            int k = s - lead - 2;
            while (k >= 0 && tail[k] == q - 1) tail[k--] = 0;
            if (k < 0) break;
            ++tail[k];
        }
    }
    return points;
}

LocusReport enumerate_locus(const SteinerDatum& datum, long q, int max_witnesses) {
    SteinerDatum dq = reduce(reduce_datum_mod(datum, q)).reduced;
    const MatrixSpace space = dq.image();
    const int f0 = dq.f0;
    const auto points = projective_points(q, dq.s);

    std::vector<int> dims(points.size(), 0);
    const unsigned workers =
        std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, points.size()));
    const std::size_t chunk = (points.size() + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(points.size(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            for (std::size_t i = begin; i < end; ++i)
                dims[i] = static_cast<int>(contract_line(space, points[i]).dim());
        });
    }
    for (auto& th : pool) th.join();

    LocusReport report;
    report.q = q;
    std::map<int, long> strata;
    for (std::size_t i = 0; i < points.size(); ++i) {
        ++strata[dims[i]];
        if (dims[i] >= f0) {
            ++report.sigma_total;
            report.jtilde_count += gaussian_binomial(dims[i], f0, q).value;
            if (static_cast<int>(report.sample_pairs.size()) < max_witnesses) {
                Subspace b = contract_line(space, points[i]);
                std::vector<std::vector<Scalar>> gamma_rows;
                for (int r = 0; r < f0; ++r) gamma_rows.push_back(b.basis().row(r));
                report.sample_pairs.push_back(
                    JumpingPair{points[i], Subspace::from_spanning(Matrix::from_rows(dq.field, gamma_rows))});
            }
        }
    }
    for (const auto& [d, c] : strata) report.strata.push_back(Stratum{d, c});
    return report;
}

DimensionEstimate estimate_dimension_from_counts(const std::vector<std::pair<long, mpz_class>>& per_q,
                                                 int s, int h0) {
    DimensionEstimate est;
    est.per_q = per_q;
    long q_best = 0;
    mpz_class count_best = 0;
    for (const auto& [q, c] : per_q)
        if (c > 0 && q > q_best) {
            q_best = q;
            count_best = c;
        }
    if (q_best == 0) {
        est.estimated_dim = -1;
        est.consistent = true;
        for (const auto& [q, c] : per_q) est.consistent = est.consistent && c == 0;
        return est;
    }
    int d = 0;
    mpz_class power(q_best);
    while (power <= count_best) {
        ++d;
        power *= q_best;
    }
    est.estimated_dim = d;
    mpz_class slack;
    mpz_ui_pow_ui(slack.get_mpz_t(), 2, static_cast<unsigned long>(s + h0));
    est.consistent = true;
    for (const auto& [q, c] : per_q) {
        mpz_class qd;
        mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
        if (c < qd || c > slack * qd) est.consistent = false;
    }
    return est;
}

DimensionEstimate estimate_dimension(const SteinerDatum& datum, const std::vector<long>& primes) {
    if (primes.size() < 2 && datum.field.is_rationals())
        throw std::invalid_argument("estimate_dimension: need at least 2 primes");
    std::vector<std::pair<long, mpz_class>> per_q;
    for (long q : primes) per_q.emplace_back(q, enumerate_locus(datum, q).jtilde_count);
    return estimate_dimension_from_counts(per_q, datum.s, datum.h0);
}

int lower_bound_dim(const SteinerDatum& datum) {
    int t0 = static_cast<int>(rank(datum.phi));
    return datum.f0 * (t0 - datum.f0 + datum.h0 * (1 - datum.s)) + datum.s - 1;
}

static bool pairs_equal(const std::vector<JumpingPair>& a, const std::vector<JumpingPair>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].s0 != b[i].s0 || a[i].gamma != b[i].gamma) return false;
    return true;
}

bool reduction_invariance_check(const SteinerDatum& datum, long q) {
    LocusReport lhs = enumerate_locus(datum, q);
    LocusReport rhs = enumerate_locus(reduce(datum).reduced, q);
    if (lhs.strata.size() != rhs.strata.size()) return false;
    for (std::size_t i = 0; i < lhs.strata.size(); ++i)
        if (lhs.strata[i].fiber_dim != rhs.strata[i].fiber_dim ||
            lhs.strata[i].sigma_count != rhs.strata[i].sigma_count)
            return false;
    return lhs.sigma_total == rhs.sigma_total && lhs.jtilde_count == rhs.jtilde_count &&
           pairs_equal(lhs.sample_pairs, rhs.sample_pairs);
}

std::vector<Subspace> enumerate_subspaces_within(const Subspace& space, int k, long q) {
    const int d = static_cast<int>(space.dim());
    std::vector<Subspace> out;
    if (k > d) return out;
    const FieldSpec fq = space.field();
    // Enumerate k x d RREF matrices in coordinates of the space, then map
    // rows through the basis into the ambient.
    std::vector<int> pivots(k);
    std::function<void(int, int)> choose = [&](int pos, int from) {
        if (pos == k) {
            std::vector<std::pair<int, int>> free_slots;
            std::vector<bool> is_pivot(d, false);
            for (int p : pivots) is_pivot[p] = true;
            for (int i = 0; i < k; ++i)
                for (int j = pivots[i] + 1; j < d; ++j)
                    if (!is_pivot[j]) free_slots.emplace_back(i, j);
            std::vector<long> assign(free_slots.size(), 0);
            while (true) {
                Matrix coords(fq, k, d);
                for (int i = 0; i < k; ++i) coords.set(i, pivots[i], Scalar(1));
                for (std::size_t f = 0; f < free_slots.size(); ++f)
                    coords.set(free_slots[f].first, free_slots[f].second, Scalar(assign[f]));
                out.push_back(Subspace::from_spanning(coords * space.basis()));
                int f = static_cast<int>(free_slots.size()) - 1;
                while (f >= 0 && assign[f] == q - 1) assign[f--] = 0;
                if (f < 0) break;
                ++assign[f];
            }
            return;
        }
        for (int c = from; c <= d - (k - pos); ++c) {
            pivots[pos] = c;
            choose(pos + 1, c + 1);
        }
    };
    choose(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_j_image(const SteinerDatum& datum, long q, JImageLimits limits) {
    SteinerDatum dq = reduce(reduce_datum_mod(datum, q)).reduced;
    if (dq.f0 > limits.f0_max)
        throw std::domain_error("enumerate_j_image: f0 = " + std::to_string(dq.f0) + " exceeds limit " +
                                std::to_string(limits.f0_max));
    const MatrixSpace space = dq.image();
    std::set<Subspace> images;
    for (const auto& s0 : projective_points(q, dq.s)) {
        Subspace b = contract_line(space, s0);
        if (static_cast<int>(b.dim()) < dq.f0) continue;
        if (static_cast<int>(b.dim()) > limits.fiber_max) {
            mpz_class estimate = gaussian_binomial(static_cast<long>(b.dim()), dq.f0, q).value;
            throw std::domain_error("enumerate_j_image: fiber dim " + std::to_string(b.dim()) +
                                    " exceeds limit " + std::to_string(limits.fiber_max) +
                                    " (about " + estimate.get_str() + " subspaces per fiber)");
        }
        for (const auto& g : enumerate_subspaces_within(b, dq.f0, q)) images.insert(g);
    }
    return {images.begin(), images.end()};
}

}  // namespace steinerlab
