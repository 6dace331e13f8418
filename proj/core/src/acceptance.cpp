#include "steinerlab/acceptance.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

namespace steinerlab {

namespace {

namespace fs = std::filesystem;

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

const std::vector<long> kPrimes{2, 3, 5};

std::vector<Scalar> point(std::initializer_list<long> coords) {
    std::vector<Scalar> out;
    for (long c : coords) out.push_back(Scalar(c));
    return out;
}

// --- Criterion 1: the a=1, n=2 family end to end ------------------------------

void crit1(Checker& c) {
    SteinerDatum red = reduce(binary_mult_datum(1, 2, FieldSpec::rationals())).reduced;
    c.expect(lower_bound_dim(red) == 1, "lower bound != 1");
    c.expect(upper_bound_dim(red) == 1, "upper bound != 1");

    std::vector<LocusReport> reports;
    std::vector<TangentReport> tangents;
    for (long q : kPrimes) {
        SteinerDatum dq = reduce_datum_mod(red, q);
        LocusReport rep = enumerate_locus(dq, q);
        c.expect(rep.jtilde_count == q + 1, "jtilde(q=" + std::to_string(q) + ") != q+1");
        c.expect(!rep.sample_pairs.empty(), "no witness pairs at q=" + std::to_string(q));
        for (const auto& pair : rep.sample_pairs) {
            TangentReport tr = tangent_dimension(dq, pair);
            c.expect(tr.tangent_dim == 1,
                     "tangent dim " + std::to_string(tr.tangent_dim) + " != 1 at q=" + std::to_string(q));
            tangents.push_back(std::move(tr));
        }
        reports.push_back(std::move(rep));
    }

    DimensionEstimate est = estimate_dimension(red, kPrimes);
    c.expect(est.consistent, "estimate inconsistent");
    c.expect(est.estimated_dim == 1, "estimated dim != 1");

    ClassificationVerdict verdict = classify_maximal(red, reports, tangents);
    c.expect(verdict.verdict == ClassCase::CaseI,
             "verdict " + class_case_name(verdict.verdict) + " != CaseI");
}

// --- Criterion 2: a=2, n=2 counts, estimate and one induction step ------------

void crit2(Checker& c) {
    SteinerDatum red = reduce(binary_mult_datum(2, 2, FieldSpec::rationals())).reduced;

    std::vector<std::pair<long, mpz_class>> counts;
    for (long q : {3L, 5L}) {
        LocusReport rep = enumerate_locus(reduce_datum_mod(red, q), q);
        c.expect(rep.sigma_total == q + 1, "sigma(q=" + std::to_string(q) + ") != q+1");
        counts.emplace_back(q, rep.jtilde_count);
    }
    DimensionEstimate est = estimate_dimension_from_counts(counts, red.s, red.h0);
    int ub = upper_bound_dim(red);
    c.expect(est.consistent, "estimate inconsistent");
    c.expect(est.estimated_dim == 1 && ub == 1, "estimated dim / upper bound != 1");

    std::vector<Scalar> s0 = point({1, 0, 0});
    Subspace gamma = fiber_at(red, s0);
    c.expect(gamma.dim() == 1, "fiber at (1,0,0) has dim != 1");
    if (gamma.dim() == 1) {
        SteinerDatum ind = induction_step(red, JumpingPair{s0, gamma});
        c.expect(ind.s == red.s - 1, "induction: s did not drop by 1");
        c.expect(ind.t == red.t - 1, "induction: t did not drop by 1");
        SteinerDatum target = reduce(binary_mult_datum(1, 2, FieldSpec::rationals())).reduced;
        c.expect(ind.image().flattened() == target.image().flattened(),
                 "induction image != a=1, n=2 image");
    }
}

// --- Criterion 3: the full tensor space splits off trivial factors ------------

void crit3(Checker& c) {
    for (int pad : {0, 1, 2}) {
        SteinerDatum d = make_full_segre_datum(FieldSpec::rationals(), 2, 3, 1, 4, pad);
        std::optional<int> p = detect_trivial(d);
        c.expect(p.has_value() && *p == pad,
                 "detect_trivial(padding=" + std::to_string(pad) + ") != padding");
    }

    SteinerDatum red = reduce(make_full_segre_datum(FieldSpec::rationals(), 2, 3, 1, 4, 0)).reduced;
    for (long q : {2L, 3L}) {
        LocusReport rep = enumerate_locus(reduce_datum_mod(red, q), q);
        long expected = (q + 1) * (q * q + q + 1);
        c.expect(rep.jtilde_count == expected,
                 "jtilde(q=" + std::to_string(q) + ") != (q+1)(q^2+q+1)");
    }
    DimensionEstimate est = estimate_dimension(red, {2, 3});
    c.expect(est.consistent && est.estimated_dim == 3, "estimated dim != 3");
}

// --- Criterion 4: locus reports are invariant under splitting trivial factors -

void crit4(Checker& c) {
    std::vector<SteinerDatum> corpus;
    corpus.push_back(binary_mult_datum(1, 1, FieldSpec::rationals()));
    corpus.push_back(binary_mult_datum(1, 2, FieldSpec::rationals()));
    corpus.push_back(binary_mult_datum(2, 2, FieldSpec::rationals()));
    corpus.push_back(binary_mult_datum(1, 3, FieldSpec::rationals()));
    corpus.push_back(veronese_datum(FieldSpec::rationals()));
    corpus.push_back(make_full_segre_datum(FieldSpec::rationals(), 2, 3, 1, 4, 0));
    const std::size_t base = corpus.size();
    for (std::size_t i = 0; i < base; ++i) {
        corpus.push_back(pad_with_zero_columns(corpus[i], 1));
        corpus.push_back(pad_with_zero_columns(corpus[i], 2));
    }
    for (const auto& d : corpus)
        for (long q : kPrimes)
            c.expect(reduction_invariance_check(d, q),
                     "invariance failed: " + d.label + " q=" + std::to_string(q));
}

// --- Criterion 5: the tangent upper bound across a family grid + random data --

void crit5(Checker& c) {
    for (int a = 1; a <= 3; ++a)
        for (int n = 1; n <= 3; ++n) {
            SteinerDatum red = reduce(binary_mult_datum(a, n, FieldSpec::rationals())).reduced;
            const std::string label = "a=" + std::to_string(a) + " n=" + std::to_string(n);
            int ub = upper_bound_dim(red);
            int lb = lower_bound_dim(red);
            int max_tan = -1;
            std::vector<std::pair<long, mpz_class>> counts;
            for (long q : kPrimes) {
                SteinerDatum dq = reduce_datum_mod(red, q);
                LocusReport rep = enumerate_locus(dq, q);
                counts.emplace_back(q, rep.jtilde_count);
                for (const auto& pair : rep.sample_pairs) {
                    TangentReport tr = tangent_dimension(dq, pair);
                    c.expect(tr.tangent_dim <= ub,
                             label + " q=" + std::to_string(q) + ": tangent dim " +
                                 std::to_string(tr.tangent_dim) + " > bound " + std::to_string(ub));
                    max_tan = std::max(max_tan, tr.tangent_dim);
                }
            }
            DimensionEstimate est = estimate_dimension_from_counts(counts, red.s, red.h0);
            if (est.estimated_dim >= 0) {
                c.expect(est.estimated_dim >= lb, label + ": estimate below lower bound");
                if (max_tan >= 0)
                    c.expect(est.estimated_dim <= max_tan, label + ": estimate above max tangent dim");
            }
        }

    // Random reduced data over F_3 / F_5 with honest rational-normal-curve
    // probes; every witness pair must respect the bound.
    std::mt19937_64 rng(20260824ull);
    int made = 0, guard = 0;
    while (made < 50 && guard < 20000) {
        ++guard;
        const long p = (rng() & 1) ? 3 : 5;
        const FieldSpec f = FieldSpec::prime(p);
        const int s = 2 + static_cast<int>(rng() % 2);
        const int h0 = 3, f0 = 1;
        int t = s * f0 + 1 + static_cast<int>(rng() % 3);
        t = std::min(t, s * h0);

        Matrix phi(f, static_cast<std::size_t>(s) * h0, static_cast<std::size_t>(t));
        for (std::size_t i = 0; i < phi.rows(); ++i)
            for (std::size_t j = 0; j < phi.cols(); ++j)
                phi.set(i, j, Scalar(static_cast<long>(rng() % static_cast<unsigned long>(p))));
        if (rank(phi) != static_cast<std::size_t>(t)) continue;

        VarietyProbe probe;
        probe.dim_x = 1;
        probe.dim_sigma_x = 1;
        probe.sigma_generically_finite = true;
        for (long z = 0; z < p; ++z) {
            std::vector<Scalar> row{Scalar(1), Scalar(z), Scalar((z * z) % p)};
            probe.sample_quotients.push_back(Matrix::from_rows(f, {row}));
        }
        probe.sample_quotients.push_back(Matrix::from_rows(f, {point({0, 0, 1})}));

        SteinerDatum d{f, s, t, f0, h0, std::move(phi), std::move(probe),
                       "random F" + std::to_string(p) + " #" + std::to_string(made)};
        if (!validate(d).accepted) continue;
        ++made;

        int ub = upper_bound_dim(d);
        LocusReport rep = enumerate_locus(d, p, 8);
        for (const auto& pair : rep.sample_pairs) {
            TangentReport tr = tangent_dimension(d, pair);
            c.expect(tr.tangent_dim <= ub, d.label + ": tangent dim " +
                                               std::to_string(tr.tangent_dim) + " > bound " +
                                               std::to_string(ub));
        }
    }
    c.expect(made == 50, "only generated " + std::to_string(made) + "/50 random data");
}

// --- Criterion 6: brute-force Hom count over F_2 matches the tangent dim ------

bool in_line_f2(const FieldSpec& f, const std::vector<Scalar>& s0, const std::vector<Scalar>& y) {
    Matrix m = Matrix::from_rows(f, {s0, y});
    return rank(m) <= 1;
}

long count_homs_f2(const SteinerDatum& dq, const JumpingPair& pair, int ambient) {
    const FieldSpec f = dq.field;
    MatrixSpace image = dq.image();
    const int f0 = dq.f0;
    const int m = static_cast<int>(image.dim()) - f0;

    std::vector<Matrix> lambda;
    for (std::size_t i = 0; i < pair.gamma.dim(); ++i)
        lambda.push_back(outer(f, pair.s0, pair.gamma.basis().row(i)));

    // Independent complement choice: greedy completion of the lambda flats.
    std::vector<std::vector<Scalar>> flats;
    for (const auto& l : lambda) flats.push_back(flatten_slice(l));
    Matrix acc = Matrix::from_rows(f, flats);
    std::size_t cur = rank(acc);
    std::vector<Matrix> mu;
    for (std::size_t r = 0; r < image.dim() && mu.size() < static_cast<std::size_t>(m); ++r) {
        Matrix cand = acc.vstack(Matrix::from_rows(f, {image.flattened().row(r)}));
        if (rank(cand) > cur) {
            acc = std::move(cand);
            ++cur;
            mu.push_back(image.basis()[r]);
        }
    }
    if (static_cast<int>(mu.size()) != m) throw std::logic_error("hom oracle: complement failed");

    // Pivot duals u_i of the RREF of Gamma.
    RrefResult gr = rref(pair.gamma.basis());
    std::vector<std::vector<Scalar>> u;
    for (std::size_t i = 0; i < gr.pivots.size(); ++i) {
        std::vector<Scalar> e(static_cast<std::size_t>(dq.h0), Scalar(0));
        e[gr.pivots[i]] = Scalar(1);
        u.push_back(std::move(e));
    }

    // All vectors of each ker(lambda_i).
    std::vector<std::vector<std::vector<Scalar>>> kernels(f0);
    for (int i = 0; i < f0; ++i) {
        Subspace k = kernel(lambda[i]);
        const std::size_t kd = k.dim();
        for (unsigned long mask = 0; mask < (1ul << kd); ++mask) {
            std::vector<Scalar> w(static_cast<std::size_t>(dq.h0), Scalar(0));
            for (std::size_t b = 0; b < kd; ++b)
                if (mask & (1ul << b))
                    for (std::size_t jj = 0; jj < w.size(); ++jj)
                        w[jj] = f.add(w[jj], k.basis().at(b, jj));
            kernels[i].push_back(std::move(w));
        }
    }

    long count = 0;
    for (unsigned long mask = 0; mask < (1ul << ambient); ++mask) {
        std::vector<Matrix> psi;
        for (int i = 0; i < f0; ++i) {
            Matrix slice(f, static_cast<std::size_t>(dq.s), static_cast<std::size_t>(dq.h0));
            for (int j = 0; j < m; ++j)
                if (mask & (1ul << (i * m + j)))
                    for (std::size_t a = 0; a < slice.rows(); ++a)
                        for (std::size_t b = 0; b < slice.cols(); ++b)
                            slice.set(a, b, f.add(slice.at(a, b), mu[j].at(a, b)));
            psi.push_back(std::move(slice));
        }
        bool good = true;
        for (int i = 0; i < f0 && good; ++i)
            for (const auto& w : kernels[i]) {
                if (!in_line_f2(f, pair.s0, psi[i].apply(w))) {
                    good = false;
                    break;
                }
            }
        for (int i = 1; i < f0 && good; ++i) {
            std::vector<Scalar> y0 = psi[0].apply(u[0]);
            std::vector<Scalar> yi = psi[static_cast<std::size_t>(i)].apply(u[static_cast<std::size_t>(i)]);
            std::vector<Scalar> diff(y0.size());
            for (std::size_t jj = 0; jj < y0.size(); ++jj) diff[jj] = f.sub(y0[jj], yi[jj]);
            if (!in_line_f2(f, pair.s0, diff)) good = false;
        }
        if (good) ++count;
    }
    return count;
}

void crit6(Checker& c) {
    std::vector<SteinerDatum> corpus;
    for (auto [a, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}})
        corpus.push_back(binary_mult_datum(a, n, FieldSpec::rationals()));
    corpus.push_back(veronese_datum(FieldSpec::rationals()));
    corpus.push_back(make_full_segre_datum(FieldSpec::rationals(), 2, 2, 1, 4, 0));
    corpus.push_back(scroll_datum(1, 1, 1, FieldSpec::rationals()));

    for (const auto& d : corpus) {
        SteinerDatum dq = reduce(reduce_datum_mod(reduce(d).reduced, 2)).reduced;
        const int ambient = dq.f0 * (static_cast<int>(rank(dq.phi)) - dq.f0);
        if (ambient > 12 || ambient < 0) continue;
        LocusReport rep = enumerate_locus(dq, 2, 3);
        for (const auto& pair : rep.sample_pairs) {
            TangentReport tr = tangent_dimension(dq, pair);
            long homs = count_homs_f2(dq, pair, ambient);
            c.expect(homs == (1L << tr.tangent_dim),
                     d.label + ": |Hom| " + std::to_string(homs) + " != 2^" +
                         std::to_string(tr.tangent_dim));
        }
    }
}

// --- Criterion 7: contract_line / is_pure_in against full span enumeration ----

std::vector<long> to_bits(const std::vector<Scalar>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x == 0 ? 0 : 1);
    return out;
}

void check_space_f2(Checker& c, const std::string& label, const MatrixSpace& space) {
    const FieldSpec f = space.field();
    const std::size_t dim = space.dim();
    const std::size_t s = space.s(), h0 = space.h0();

    std::set<std::vector<long>> span_set;
    for (unsigned long mask = 0; mask < (1ul << dim); ++mask) {
        std::vector<Scalar> v(s * h0, Scalar(0));
        for (std::size_t b = 0; b < dim; ++b)
            if (mask & (1ul << b))
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] = f.add(v[j], space.flattened().at(b, j));
        span_set.insert(to_bits(v));
    }

    std::vector<std::vector<Scalar>> h0_vectors;
    for (unsigned long mask = 0; mask < (1ul << h0); ++mask) {
        std::vector<Scalar> b(h0, Scalar(0));
        for (std::size_t k = 0; k < h0; ++k)
            if (mask & (1ul << k)) b[k] = Scalar(1);
        h0_vectors.push_back(std::move(b));
    }

    for (const auto& s0 : projective_points(2, static_cast<int>(s))) {
        // Brute fiber vs contract_line.
        Subspace cl = contract_line(space, s0);
        long brute = 0;
        for (const auto& b : h0_vectors) {
            bool inside = span_set.count(to_bits(flatten_slice(outer(f, s0, b)))) > 0;
            if (inside) {
                ++brute;
                c.expect(cl.contains(b), label + ": brute fiber vector missing from contract_line");
            }
        }
        c.expect(brute == (1L << cl.dim()), label + ": fiber size mismatch");

        // is_pure_in vs elementwise products.
        Subspace line = Subspace::from_spanning(Matrix::from_rows(f, {s0}));
        for (std::size_t k = 1; k <= h0; ++k)
            for (const auto& B : enumerate_subspaces_within(Subspace::full(f, h0), static_cast<int>(k), 2)) {
                bool expected = true;
                for (const auto& b : h0_vectors) {
                    if (!B.contains(b)) continue;
                    if (!span_set.count(to_bits(flatten_slice(outer(f, s0, b))))) {
                        expected = false;
                        break;
                    }
                }
                c.expect(is_pure_in(space, line, B) == expected, label + ": is_pure_in mismatch");
            }
    }
}

void crit7(Checker& c) {
    const FieldSpec f2 = FieldSpec::prime(2);
    for (auto [a, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
        SteinerDatum dq = reduce_datum_mod(reduce(binary_mult_datum(a, n, FieldSpec::rationals())).reduced, 2);
        check_space_f2(c, dq.label, dq.image());
    }
    check_space_f2(c, "full 2x2",
                   reduce_datum_mod(make_full_segre_datum(FieldSpec::prime(2), 2, 2, 1, 4, 0), 2).image());

    std::mt19937_64 rng(7ull);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t s = 2 + (rng() % 2), h0 = 2 + (rng() % 2);
        const std::size_t d = 1 + (rng() % std::min<std::size_t>(4, s * h0));
        std::vector<Matrix> gens;
        for (std::size_t g = 0; g < d; ++g) {
            Matrix slice(f2, s, h0);
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < h0; ++j) slice.set(i, j, Scalar(static_cast<long>(rng() & 1)));
            gens.push_back(std::move(slice));
        }
        MatrixSpace space = MatrixSpace::from_generators(f2, s, h0, gens);
        if (space.dim() == 0 || space.dim() > 4) continue;
        check_space_f2(c, "random #" + std::to_string(trial), space);
    }
}

// --- Criterion 8: report bytes are independent of the worker count ------------

void crit8(Checker& c) {
    fs::path base = fs::temp_directory_path() / "steinerlab-acceptance-8";
    std::error_code ec;
    fs::remove_all(base, ec);

    const char* saved = std::getenv("STEINERLAB_THREADS");
    std::string saved_value = saved ? saved : "";

    PipelineConfig cfg;
    cfg.family = "binary";
    cfg.a = 1;
    cfg.n = 2;
    cfg.field = FieldSpec::rationals();
    cfg.primes = {2, 3, 5};
    cfg.witnesses = 8;

    std::vector<fs::path> dirs;
    for (const char* threads : {"1", "8"}) {
        ::setenv("STEINERLAB_THREADS", threads, 1);
        cfg.out_dir = (base / (std::string("threads-") + threads)).string();
        run_pipeline(cfg);
        dirs.push_back(cfg.out_dir);
    }
    if (saved)
        ::setenv("STEINERLAB_THREADS", saved_value.c_str(), 1);
    else
        ::unsetenv("STEINERLAB_THREADS");

    auto listing = [](const fs::path& dir) {
        std::vector<std::string> names;
        for (const auto& e : fs::directory_iterator(dir)) names.push_back(e.path().filename().string());
        std::sort(names.begin(), names.end());
        return names;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    };

    std::vector<std::string> a = listing(dirs[0]), b = listing(dirs[1]);
    c.expect(a == b, "different artifact sets");
    c.expect(!a.empty(), "no artifacts written");
    if (a == b)
        for (const auto& name : a)
            c.expect(slurp(dirs[0] / name) == slurp(dirs[1] / name), name + " differs between runs");
    fs::remove_all(base, ec);
}

struct CriterionSpec {
    int id;
    const char* name;
    double limit_seconds;
    void (*fn)(Checker&);
};

const CriterionSpec kCriteria[] = {
    {1, "classical-a1-n2-baseline", 60.0, crit1},
    {2, "classical-a2-n2-induction", 60.0, crit2},
    {3, "full-tensor-trivial", 60.0, crit3},
    {4, "reduction-invariance", 180.0, crit4},
    {5, "tangent-upper-bound-suite", 600.0, crit5},
    {6, "tangent-hom-oracle-f2", 180.0, crit6},
    {7, "pure-tensor-oracle-f2", 120.0, crit7},
    {8, "pipeline-determinism", 60.0, crit8},
};

bool selected(const CriterionSpec& spec, const std::string& filter) {
    if (filter.empty()) return true;
    std::stringstream ss(filter);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token == std::to_string(spec.id)) return true;
        if (std::string(spec.name).find(token) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& filter) {
    std::vector<CriterionResult> results;
    for (const auto& spec : kCriteria) {
        if (!selected(spec, filter)) continue;
        Checker c;
        auto start = std::chrono::steady_clock::now();
        try {
            spec.fn(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > spec.limit_seconds)
            c.expect(false, "exceeded time limit of " + std::to_string(spec.limit_seconds) + "s");
        results.push_back({spec.id, spec.name, c.ok, c.detail, seconds, spec.limit_seconds});
    }
    return results;
}

int acceptance_main(const std::string& filter, std::ostream& out) {
    std::vector<CriterionResult> results = run_acceptance(filter);
    if (results.empty()) {
        out << "no criteria match filter \"" << filter << "\"\n";
        return 1;
    }
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " [" << r.name << "] "
            << std::fixed << std::setprecision(1) << r.seconds << "s/" << r.limit_seconds << "s";
        if (!r.detail.empty()) out << " -- " << r.detail;
        out << "\n";
        all = all && r.passed;
    }
    out << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << results.size()
        << " criteria)\n";
    return all ? 0 : 1;
}

}  // namespace steinerlab
