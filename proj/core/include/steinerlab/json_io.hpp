#pragma once

#include <json.hpp>

#include "steinerlab/schwarzenberger.hpp"
#include "steinerlab/tangent.hpp"

namespace steinerlab {

using json = nlohmann::json;

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

json datum_to_json(const SteinerDatum& d);
SteinerDatum datum_from_json(const json& j);

json tensor_to_json(const MultiplicationTensor& t);
MultiplicationTensor tensor_from_json(const json& j);

json pair_to_json(const JumpingPair& p);
JumpingPair pair_from_json(const json& j, FieldSpec field);

json locus_report_to_json(const LocusReport& r);
LocusReport locus_report_from_json(const json& j, FieldSpec field);

json estimate_to_json(const DimensionEstimate& e);
json tangent_report_to_json(const TangentReport& r);
json validation_report_to_json(const ValidationReport& r);
json verdict_to_json(const ClassificationVerdict& v);

/// Canonical bytes: keys sorted (nlohmann object order), two-space indent,
/// trailing newline. Identical values always produce identical bytes.
std::string canonical_dump(const json& j);

/// CSV / markdown exports carry the summary fields only.
std::string locus_report_to_csv(const LocusReport& r);
std::string verdict_to_markdown(const ClassificationVerdict& v);

}  // namespace steinerlab
