#pragma once

#include "steinerlab/json_io.hpp"

namespace steinerlab {

/// Stage-distinct exit codes for pipeline failures.
enum class Stage : int {
    Config = 10,
    Construct = 11,
    Validate = 12,
    Reduce = 13,
    Locus = 14,
    Tangent = 15,
    Classify = 16,
    Io = 17,
};

struct StageError : std::runtime_error {
    StageError(Stage stage, const std::string& msg)
        : std::runtime_error(msg), stage(stage) {}
    Stage stage;
};

struct PipelineConfig {
    // Either a built-in family ("binary", "veronese", "scroll", "segre") with
    // its parameters, or a datum JSON file.
    std::string family;
    int a = 1, n = 2, n2 = 1;
    int s = 2, h0 = 3, f0 = 1, dim_x = 1, padding = 0;
    FieldSpec field = FieldSpec::rationals();
    std::string datum_path;

    std::vector<long> primes{2, 3, 5, 7};
    int witnesses = 8;
    unsigned long seed = 1;
    std::string out_dir;  // empty: no artifacts written
};

PipelineConfig pipeline_config_from_json(const json& j);

struct PipelineSummary {
    std::string label;
    int t0 = 0;
    int lower_bound = 0;
    int estimated_dim = 0;
    int upper_bound = 0;
    std::string verdict;
};

/// construct -> validate -> reduce -> locus -> tangent -> classify, writing
/// canonical JSON artifacts plus a run manifest when out_dir is set.
PipelineSummary run_pipeline(const PipelineConfig& config);

SteinerDatum construct_family(const PipelineConfig& config);

/// FNV-1a 64-bit content digest, hex.
std::string content_digest(const std::string& bytes);

}  // namespace steinerlab
