#include "steinerlab/pipeline.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

namespace steinerlab {

namespace fs = std::filesystem;

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

PipelineConfig pipeline_config_from_json(const json& j) {
    PipelineConfig c;
    c.family = j.value("family", "");
    c.a = j.value("a", 1);
    c.n = j.value("n", 2);
    c.n2 = j.value("n2", 1);
    c.s = j.value("s", 2);
    c.h0 = j.value("h0", 3);
    c.f0 = j.value("f0", 1);
    c.dim_x = j.value("dim_x", 1);
    c.padding = j.value("padding", 0);
    if (j.contains("field")) c.field = FieldSpec::parse(j.at("field").get<std::string>());
    c.datum_path = j.value("datum", "");
    if (j.contains("primes")) {
        c.primes.clear();
        for (const auto& p : j.at("primes")) c.primes.push_back(p.get<long>());
    }
    c.witnesses = j.value("witnesses", 8);
    c.seed = j.value("seed", 1ul);
    c.out_dir = j.value("out_dir", "");
    if (c.family.empty() && c.datum_path.empty())
        throw StageError(Stage::Config, "config needs either \"family\" or \"datum\"");
    if (c.primes.empty()) throw StageError(Stage::Config, "config needs at least one prime");
    for (long p : c.primes)
        if (!is_prime(p)) throw StageError(Stage::Config, "not a prime: " + std::to_string(p));
    return c;
}

SteinerDatum construct_family(const PipelineConfig& config) {
    try {
        if (!config.datum_path.empty()) {
            std::ifstream in(config.datum_path);
            if (!in) throw StageError(Stage::Io, "cannot read " + config.datum_path);
            json j;
            in >> j;
            return datum_from_json(j);
        }
        if (config.family == "binary") return binary_mult_datum(config.a, config.n, config.field);
        if (config.family == "veronese") return veronese_datum(config.field);
        if (config.family == "scroll")
            return scroll_datum(config.a, config.n, config.n2, config.field);
        if (config.family == "segre")
            return make_full_segre_datum(config.field, config.s, config.h0, config.f0,
                                         config.dim_x, config.padding);
        throw StageError(Stage::Config, "unknown family: " + config.family);
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(Stage::Construct, e.what());
    }
}

namespace {

struct ArtifactSink {
    fs::path dir;
    json manifest_outputs = json::object();

    void write(const std::string& name, const std::string& bytes) {
        if (dir.empty()) return;
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw StageError(Stage::Io, "cannot write " + (dir / name).string());
        out << bytes;
        manifest_outputs[name] = content_digest(bytes);
    }
};

}  // namespace

PipelineSummary run_pipeline(const PipelineConfig& config) {
    ArtifactSink sink;
    if (!config.out_dir.empty()) {
        sink.dir = config.out_dir;
        std::error_code ec;
        fs::create_directories(sink.dir, ec);
        if (ec) throw StageError(Stage::Io, "cannot create " + sink.dir.string());
    }

    SteinerDatum datum = construct_family(config);
    sink.write("datum.json", canonical_dump(datum_to_json(datum)));

    ValidationReport val = validate(datum);
    sink.write("validation.json", canonical_dump(validation_report_to_json(val)));
    if (!val.accepted)
        throw StageError(Stage::Validate,
                         "validation failed" + (val.failing_index >= 0
                                                    ? " at sample " + std::to_string(val.failing_index)
                                                    : std::string(": ") +
                                                          (val.shape_errors.empty() ? "shape"
                                                                                    : val.shape_errors.front())));

    std::optional<ReductionResult> red_opt;
    try {
        red_opt = reduce(datum);
    } catch (const std::exception& e) {
        throw StageError(Stage::Reduce, e.what());
    }
    ReductionResult& red = *red_opt;
    sink.write("reduced.json", canonical_dump(datum_to_json(red.reduced)));

    std::vector<LocusReport> reports;
    std::vector<SteinerDatum> mod_data;
    try {
        for (long q : config.primes) {
            SteinerDatum dq = red.reduced.field.is_rationals()
                                  ? reduce_datum_mod(red.reduced, q)
                                  : red.reduced;
            if (dq.field.p != q)
                throw std::invalid_argument("prime " + std::to_string(q) +
                                            " does not match datum field " + dq.field.name());
            LocusReport rep = enumerate_locus(dq, q, config.witnesses);
            sink.write("locus_q" + std::to_string(q) + ".json",
                       canonical_dump(locus_report_to_json(rep)));
            sink.write("locus_q" + std::to_string(q) + ".csv", locus_report_to_csv(rep));
            reports.push_back(std::move(rep));
            mod_data.push_back(std::move(dq));
        }
    } catch (const std::exception& e) {
        throw StageError(Stage::Locus, e.what());
    }

    std::vector<std::pair<long, mpz_class>> per_q;
    for (const auto& rep : reports) per_q.emplace_back(rep.q, rep.jtilde_count);
    DimensionEstimate est = estimate_dimension_from_counts(per_q, red.reduced.s, red.reduced.h0);
    sink.write("estimate.json", canonical_dump(estimate_to_json(est)));

    std::vector<TangentReport> tangents;
    try {
        json tangents_json = json::array();
        for (std::size_t i = 0; i < reports.size(); ++i) {
            json per_prime = json::array();
            for (const auto& pair : reports[i].sample_pairs) {
                TangentReport tr = tangent_dimension(mod_data[i], pair);
                tr.at_bound = est.consistent && est.estimated_dim == tr.upper_bound;
                per_prime.push_back(tangent_report_to_json(tr));
                tangents.push_back(std::move(tr));
            }
            tangents_json.push_back(json{{"q", reports[i].q}, {"reports", std::move(per_prime)}});
        }
        sink.write("tangents.json", canonical_dump(tangents_json));
    } catch (const std::exception& e) {
        throw StageError(Stage::Tangent, e.what());
    }

    ClassificationVerdict verdict;
    try {
        verdict = classify_maximal(red.reduced, reports, tangents);
    } catch (const std::exception& e) {
        throw StageError(Stage::Classify, e.what());
    }
    sink.write("verdict.json", canonical_dump(verdict_to_json(verdict)));
    sink.write("verdict.md", verdict_to_markdown(verdict));

    PipelineSummary summary;
    summary.label = datum.label.empty() ? (config.family.empty() ? config.datum_path : config.family)
                                        : datum.label;
    summary.t0 = red.reduced.t;
    summary.lower_bound = lower_bound_dim(red.reduced);
    summary.estimated_dim = est.estimated_dim;
    summary.upper_bound = upper_bound_dim(red.reduced);
    summary.verdict = class_case_name(verdict.verdict);

    json summary_json{{"label", summary.label},
                      {"t0", summary.t0},
                      {"split_trivial_rank", red.p},
                      {"lower_bound", summary.lower_bound},
                      {"estimated_dim", summary.estimated_dim},
                      {"estimate_consistent", est.consistent},
                      {"upper_bound", summary.upper_bound},
                      {"verdict", summary.verdict}};
    sink.write("summary.json", canonical_dump(summary_json));

    if (!sink.dir.empty()) {
        json cfg{{"family", config.family}, {"a", config.a},       {"n", config.n},
                 {"n2", config.n2},         {"s", config.s},       {"h0", config.h0},
                 {"f0", config.f0},         {"dim_x", config.dim_x}, {"padding", config.padding},
                 {"field", config.field.name()},
                 {"datum", config.datum_path},
                 {"primes", config.primes},
                 {"witnesses", config.witnesses},
                 {"seed", config.seed}};
        std::string cfg_bytes = canonical_dump(cfg);
        json manifest{{"tool", "steinerlab"},
                      {"tool_version", "1.0.0"},
                      {"config", cfg},
                      {"config_digest", content_digest(cfg_bytes)},
                      {"seed", config.seed},
                      {"outputs", sink.manifest_outputs}};
        std::ofstream out(sink.dir / "manifest.json", std::ios::binary);
        if (!out) throw StageError(Stage::Io, "cannot write manifest.json");
        out << canonical_dump(manifest);
    }
    return summary;
}

}  // namespace steinerlab
