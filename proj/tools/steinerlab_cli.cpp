#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "steinerlab/acceptance.hpp"

using namespace steinerlab;

namespace {

struct FamilyArgs {
    std::string family = "binary";
    int a = 1, n = 2, n2 = 1;
    int s = 2, h0 = 3, f0 = 1, dim_x = 1, padding = 0;
    std::string field = "Q";
    std::string datum_path;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
    cmd->add_option("--family", args.family, "binary | veronese | scroll | segre");
    cmd->add_option("--a", args.a, "degree of L on P^1");
    cmd->add_option("--n", args.n, "degree of the twist (first block)");
    cmd->add_option("--n2", args.n2, "degree of the second scroll block");
    cmd->add_option("--s", args.s, "dim S (segre family)");
    cmd->add_option("--h0", args.h0, "dim H0 (segre family)");
    cmd->add_option("--f0", args.f0, "rank of the fiber quotient (segre family)");
    cmd->add_option("--dim-x", args.dim_x, "dim X recorded in the probe (segre family)");
    cmd->add_option("--padding", args.padding, "trivial columns appended (segre family)");
    cmd->add_option("--field", args.field, "ground field, Q or F<p>");
    cmd->add_option("--input,--datum", args.datum_path, "datum JSON file instead of a family")
        ->check(CLI::ExistingFile);
}

PipelineConfig to_config(const FamilyArgs& args) {
    PipelineConfig cfg;
    cfg.family = args.datum_path.empty() ? args.family : "";
    cfg.a = args.a;
    cfg.n = args.n;
    cfg.n2 = args.n2;
    cfg.s = args.s;
    cfg.h0 = args.h0;
    cfg.f0 = args.f0;
    cfg.dim_x = args.dim_x;
    cfg.padding = args.padding;
    cfg.field = FieldSpec::parse(args.field);
    cfg.datum_path = args.datum_path;
    return cfg;
}

SteinerDatum load_datum(const FamilyArgs& args) { return construct_family(to_config(args)); }

void emit(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw StageError(Stage::Io, "cannot write " + out_path);
    out << bytes;
}

std::vector<Scalar> parse_point(const std::string& text, const FieldSpec& field) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) out.push_back(field.from_string(token));
    return out;
}

SteinerDatum datum_mod(const SteinerDatum& datum, long q) {
    return datum.field.is_rationals() ? reduce_datum_mod(datum, q) : datum;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact jumping-locus computations for Steiner-type bundle data"};
    app.require_subcommand(1);

    FamilyArgs args;
    std::string out_path, config_path, filter, s0_text, format = "json";
    std::string pair_path;
    std::vector<std::string> locus_paths;
    std::string tangents_path;
    long q = 2;
    int witnesses = 32;
    std::vector<long> primes{2, 3, 5, 7};
    std::vector<long> locus_primes;
    unsigned long seed = 1;
    std::string out_dir;

    auto* construct = app.add_subcommand("construct", "build a datum and print its JSON");
    add_family_options(construct, args);
    construct->add_option("-o,--output,--out", out_path, "output file (default stdout)");

    auto* validate_cmd = app.add_subcommand("validate", "check shapes and fiberwise surjectivity");
    add_family_options(validate_cmd, args);
    validate_cmd->add_option("-o,--output,--out", out_path);

    auto* reduce_cmd = app.add_subcommand("reduce", "split off the trivial factor");
    add_family_options(reduce_cmd, args);
    reduce_cmd->add_option("-o,--output,--out", out_path);

    auto* locus = app.add_subcommand("locus", "stratify P(S)(F_q) by jumping-fiber dimension");
    add_family_options(locus, args);
    locus->add_option("--q", q, "a single prime q");
    locus->add_option("--primes", locus_primes, "several primes; emits an array of reports");
    locus->add_option("--witnesses", witnesses, "max witness pairs recorded");
    locus->add_option("--format", format, "json | csv");
    locus->add_option("-o,--output,--out", out_path);

    auto* tangent_cmd = app.add_subcommand("tangent", "tangent-space dimensions at jumping pairs");
    add_family_options(tangent_cmd, args);
    tangent_cmd->add_option("--q", q, "prime q")->required();
    tangent_cmd->add_option("--s0", s0_text, "comma-separated point of P(S); default: all witnesses");
    tangent_cmd->add_option("--pair", pair_path, "JSON file with a {s0, gamma} pair")
        ->check(CLI::ExistingFile);
    tangent_cmd->add_option("--witnesses", witnesses, "max witness pairs examined");
    tangent_cmd->add_option("-o,--output,--out", out_path);

    auto* classify = app.add_subcommand("classify", "decision table for maximal-dimension loci");
    add_family_options(classify, args);
    classify->add_option("--primes", primes, "primes used for counting");
    classify->add_option("--locus", locus_paths, "precomputed locus report JSON files");
    classify->add_option("--tangents", tangents_path, "precomputed tangent report array JSON")
        ->check(CLI::ExistingFile);
    classify->add_option("--format", format, "json | markdown");
    classify->add_option("-o,--output,--out", out_path);

    auto* pipeline = app.add_subcommand("pipeline", "run every stage and write an artifact directory");
    add_family_options(pipeline, args);
    pipeline->add_option("--config", config_path, "pipeline config JSON")->check(CLI::ExistingFile);
    pipeline->add_option("--primes", primes, "primes used for counting");
    pipeline->add_option("--witnesses", witnesses, "max witness pairs recorded");
    pipeline->add_option("--seed", seed, "seed recorded in the run manifest");
    pipeline->add_option("--out-dir", out_dir, "artifact directory");

    auto* acceptance = app.add_subcommand("acceptance", "run the release acceptance suite");
    acceptance->add_option("--filter", filter, "comma-separated criterion ids or name substrings");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            emit(canonical_dump(datum_to_json(load_datum(args))), out_path);
        } else if (validate_cmd->parsed()) {
            ValidationReport report = validate(load_datum(args));
            emit(canonical_dump(validation_report_to_json(report)), out_path);
            if (!report.accepted) return static_cast<int>(Stage::Validate);
        } else if (reduce_cmd->parsed()) {
            ReductionResult r = reduce(load_datum(args));
            json out{{"reduced", datum_to_json(r.reduced)},
                     {"split_trivial_rank", r.p},
                     {"kernel", subspace_to_json(r.kernel_basis)}};
            emit(canonical_dump(out), out_path);
        } else if (locus->parsed()) {
            SteinerDatum red = reduce(load_datum(args)).reduced;
            if (locus_primes.empty()) {
                LocusReport rep = enumerate_locus(datum_mod(red, q), q, witnesses);
                emit(format == "csv" ? locus_report_to_csv(rep)
                                     : canonical_dump(locus_report_to_json(rep)),
                     out_path);
            } else {
                json out = json::array();
                std::string csv;
                for (long p : locus_primes) {
                    LocusReport rep = enumerate_locus(datum_mod(red, p), p, witnesses);
                    if (format == "csv")
                        csv += locus_report_to_csv(rep);
                    else
                        out.push_back(locus_report_to_json(rep));
                }
                emit(format == "csv" ? csv : canonical_dump(out), out_path);
            }
        } else if (tangent_cmd->parsed()) {
            SteinerDatum dq = datum_mod(reduce(load_datum(args)).reduced, q);
            std::vector<JumpingPair> pairs;
            if (!pair_path.empty()) {
                std::ifstream in(pair_path);
                json j;
                in >> j;
                pairs.push_back(pair_from_json(j, dq.field));
            } else if (!s0_text.empty()) {
                std::vector<Scalar> s0 = parse_point(s0_text, dq.field);
                Subspace fiber = fiber_at(dq, s0);
                if (fiber.dim() < static_cast<std::size_t>(dq.f0))
                    throw StageError(Stage::Tangent, "point is not jumping: fiber dim < f0");
                Matrix gamma(dq.field, static_cast<std::size_t>(dq.f0), fiber.ambient_dim());
                for (std::size_t i = 0; i < gamma.rows(); ++i)
                    for (std::size_t j = 0; j < gamma.cols(); ++j) gamma.set(i, j, fiber.basis().at(i, j));
                pairs.push_back(JumpingPair{s0, Subspace::from_spanning(gamma)});
            } else {
                pairs = enumerate_locus(dq, q, witnesses).sample_pairs;
            }
            json out = json::array();
            for (const auto& pair : pairs) out.push_back(tangent_report_to_json(tangent_dimension(dq, pair)));
            emit(canonical_dump(out), out_path);
        } else if (classify->parsed()) {
            SteinerDatum red = reduce(load_datum(args)).reduced;
            std::vector<LocusReport> reports;
            std::vector<TangentReport> tangents;
            if (!locus_paths.empty()) {
                for (const auto& path : locus_paths) {
                    std::ifstream in(path);
                    if (!in) throw StageError(Stage::Io, "cannot read " + path);
                    json j;
                    in >> j;
                    reports.push_back(locus_report_from_json(j, red.field));
                }
                if (!tangents_path.empty()) {
                    std::ifstream in(tangents_path);
                    json arr;
                    in >> arr;
                    for (const auto& j : arr) {
                        TangentReport tr;
                        tr.ambient_dim = j.value("ambient_dim", 0);
                        tr.tangent_dim = j.value("tangent_dim", 0);
                        tr.upper_bound = j.value("upper_bound", 0);
                        tr.at_bound = j.value("at_bound", false);
                        tr.auto_reduced = j.value("auto_reduced", false);
                        tangents.push_back(std::move(tr));
                    }
                }
            } else {
                for (long p : primes) {
                    SteinerDatum dq = datum_mod(red, p);
                    LocusReport rep = enumerate_locus(dq, p, witnesses);
                    for (const auto& pair : rep.sample_pairs)
                        tangents.push_back(tangent_dimension(dq, pair));
                    reports.push_back(std::move(rep));
                }
            }
            ClassificationVerdict verdict = classify_maximal(red, reports, tangents);
            emit(format == "markdown" ? verdict_to_markdown(verdict)
                                      : canonical_dump(verdict_to_json(verdict)),
                 out_path);
        } else if (pipeline->parsed()) {
            PipelineConfig cfg;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                json j;
                in >> j;
                cfg = pipeline_config_from_json(j);
            } else {
                cfg = to_config(args);
                cfg.primes = primes;
                cfg.witnesses = witnesses;
                cfg.seed = seed;
                cfg.out_dir = out_dir;
            }
            PipelineSummary summary = run_pipeline(cfg);
            json out{{"label", summary.label},
                     {"t0", summary.t0},
                     {"lower_bound", summary.lower_bound},
                     {"estimated_dim", summary.estimated_dim},
                     {"upper_bound", summary.upper_bound},
                     {"verdict", summary.verdict}};
            std::cout << canonical_dump(out);
        } else if (acceptance->parsed()) {
            return acceptance_main(filter, std::cout);
        }
    } catch (const StageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.stage);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
