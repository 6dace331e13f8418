#include "steinerlab/json_io.hpp"

#include <sstream>

namespace steinerlab {

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(FieldSpec::to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"field", m.field().name()},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
    FieldSpec field = FieldSpec::parse(j.at("field").get<std::string>());
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("matrix JSON: row count mismatch");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw std::invalid_argument("matrix JSON: column count mismatch");
        for (std::size_t jj = 0; jj < cols; ++jj)
            m.set(i, jj, field.from_string(entries[i][jj].get<std::string>()));
    }
    return m;
}

json subspace_to_json(const Subspace& s) {
    return json{{"ambient_dim", s.ambient_dim()}, {"basis", matrix_to_json(s.basis())}};
}

Subspace subspace_from_json(const json& j) {
    Matrix basis = matrix_from_json(j.at("basis"));
    if (basis.cols() != j.at("ambient_dim").get<std::size_t>())
        throw std::invalid_argument("subspace JSON: ambient dimension mismatch");
    return Subspace::from_spanning(basis);
}

json datum_to_json(const SteinerDatum& d) {
    json quotients = json::array();
    for (const auto& q : d.probe.sample_quotients) quotients.push_back(matrix_to_json(q));
    json probe{{"dim_x", d.probe.dim_x},
               {"dim_sigma_x", d.probe.dim_sigma_x},
               {"sigma_generically_finite", d.probe.sigma_generically_finite},
               {"sample_quotients", std::move(quotients)}};
    return json{{"field", d.field.name()}, {"s", d.s},      {"t", d.t},
                {"f0", d.f0},             {"h0", d.h0},     {"phi", matrix_to_json(d.phi)},
                {"probe", std::move(probe)}, {"label", d.label}};
}

SteinerDatum datum_from_json(const json& j) {
    SteinerDatum d{FieldSpec::parse(j.at("field").get<std::string>()),
                   j.at("s").get<int>(),
                   j.at("t").get<int>(),
                   j.at("f0").get<int>(),
                   j.at("h0").get<int>(),
                   matrix_from_json(j.at("phi")),
                   {},
                   j.value("label", "")};
    const json& probe = j.at("probe");
    d.probe.dim_x = probe.at("dim_x").get<int>();
    d.probe.dim_sigma_x = probe.at("dim_sigma_x").get<int>();
    d.probe.sigma_generically_finite = probe.at("sigma_generically_finite").get<bool>();
    for (const auto& q : probe.at("sample_quotients")) d.probe.sample_quotients.push_back(matrix_from_json(q));
    return d;
}

json tensor_to_json(const MultiplicationTensor& t) {
    json entries = json::array();
    for (std::size_t i = 0; i < t.sL; ++i) {
        json plane = json::array();
        for (std::size_t jj = 0; jj < t.sU; ++jj) {
            json line = json::array();
            for (std::size_t m = 0; m < t.sLU; ++m) line.push_back(FieldSpec::to_string(t.at(i, jj, m)));
            plane.push_back(std::move(line));
        }
        entries.push_back(std::move(plane));
    }
    return json{{"field", t.field.name()},
                {"dims", json::array({t.sL, t.sU, t.sLU})},
                {"entries", std::move(entries)}};
}

MultiplicationTensor tensor_from_json(const json& j) {
    FieldSpec field = j.contains("field") ? FieldSpec::parse(j.at("field").get<std::string>())
                                          : FieldSpec::rationals();
    const json& dims = j.at("dims");
    MultiplicationTensor t(field, dims.at(0).get<std::size_t>(), dims.at(1).get<std::size_t>(),
                           dims.at(2).get<std::size_t>());
    const json& entries = j.at("entries");
    for (std::size_t i = 0; i < t.sL; ++i)
        for (std::size_t jj = 0; jj < t.sU; ++jj)
            for (std::size_t m = 0; m < t.sLU; ++m) {
                const json& e = entries.at(i).at(jj).at(m);
                t.set(i, jj, m, e.is_string() ? field.from_string(e.get<std::string>())
                                              : Scalar(e.get<long>()));
            }
    return t;
}

json pair_to_json(const JumpingPair& p) {
    json s0 = json::array();
    for (const auto& c : p.s0) s0.push_back(FieldSpec::to_string(c));
    return json{{"s0", std::move(s0)}, {"gamma", subspace_to_json(p.gamma)}};
}

JumpingPair pair_from_json(const json& j, FieldSpec field) {
    std::vector<Scalar> s0;
    for (const auto& c : j.at("s0")) s0.push_back(field.from_string(c.get<std::string>()));
    return JumpingPair{std::move(s0), subspace_from_json(j.at("gamma"))};
}

json locus_report_to_json(const LocusReport& r) {
    json strata = json::array();
    for (const auto& s : r.strata)
        strata.push_back(json{{"fiber_dim", s.fiber_dim}, {"sigma_count", s.sigma_count}});
    json pairs = json::array();
    for (const auto& p : r.sample_pairs) pairs.push_back(pair_to_json(p));
    json out{{"q", r.q},
             {"strata", std::move(strata)},
             {"sigma_total", r.sigma_total},
             {"jtilde_count", r.jtilde_count.get_str()},
             {"sample_pairs", std::move(pairs)}};
    if (r.j_count) out["j_count"] = *r.j_count;
    return out;
}

LocusReport locus_report_from_json(const json& j, FieldSpec field) {
    LocusReport r;
    r.q = j.at("q").get<long>();
    for (const auto& s : j.at("strata"))
        r.strata.push_back(Stratum{s.at("fiber_dim").get<int>(), s.at("sigma_count").get<long>()});
    r.sigma_total = j.at("sigma_total").get<long>();
    r.jtilde_count = mpz_class(j.at("jtilde_count").get<std::string>());
    if (j.contains("j_count")) r.j_count = j.at("j_count").get<long>();
    FieldSpec fq = FieldSpec::prime(r.q);
    (void)field;
    for (const auto& p : j.at("sample_pairs")) r.sample_pairs.push_back(pair_from_json(p, fq));
    return r;
}

json estimate_to_json(const DimensionEstimate& e) {
    json per_q = json::array();
    for (const auto& [q, c] : e.per_q) per_q.push_back(json{{"q", q}, {"jtilde_count", c.get_str()}});
    return json{{"per_q", std::move(per_q)},
                {"estimated_dim", e.estimated_dim},
                {"consistent", e.consistent}};
}

json tangent_report_to_json(const TangentReport& r) {
    return json{{"pair", pair_to_json(r.pair)},       {"ambient_dim", r.ambient_dim},
                {"tangent_dim", r.tangent_dim},       {"upper_bound", r.upper_bound},
                {"at_bound", r.at_bound},             {"auto_reduced", r.auto_reduced}};
}

json validation_report_to_json(const ValidationReport& r) {
    json samples = json::array();
    for (const auto& s : r.per_sample)
        samples.push_back(json{{"index", s.index},
                               {"passed", s.passed},
                               {"rank_found", s.rank_found},
                               {"rank_required", s.rank_required}});
    return json{{"accepted", r.accepted},
                {"per_sample", std::move(samples)},
                {"shape_errors", r.shape_errors},
                {"failing_index", r.failing_index}};
}

json verdict_to_json(const ClassificationVerdict& v) {
    json matched = json::array();
    for (ClassCase c : v.matched) matched.push_back(class_case_name(c));
    return json{{"verdict", class_case_name(v.verdict)},
                {"matched", std::move(matched)},
                {"evidence", v.evidence},
                {"triple_description", v.triple_description}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string locus_report_to_csv(const LocusReport& r) {
    std::ostringstream out;
    out << "q,fiber_dim,sigma_count\n";
    for (const auto& s : r.strata) out << r.q << "," << s.fiber_dim << "," << s.sigma_count << "\n";
    out << "# sigma_total=" << r.sigma_total << " jtilde_count=" << r.jtilde_count.get_str() << "\n";
    return out.str();
}

std::string verdict_to_markdown(const ClassificationVerdict& v) {
    std::ostringstream out;
    out << "## Classification: " << class_case_name(v.verdict) << "\n\n";
    out << v.triple_description << "\n\n";
    out << "| evidence | value |\n|---|---|\n";
    for (const auto& [k, val] : v.evidence) out << "| " << k << " | " << val << " |\n";
    return out.str();
}

}  // namespace steinerlab
