#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "tailspace/checks.hpp"
#include "tailspace/codes.hpp"
#include "tailspace/constructions.hpp"
#include "tailspace/markov.hpp"

namespace tailspace {

/// nlohmann::json with the default (std::map) object container: keys are
/// always sorted, so dumps are canonical and reruns byte-compare.
using Json = nlohmann::json;

// Function files: {"n", "kind", "values", "convention", "meta"}.
Json function_to_json(const CubeFunction& f, Json meta = Json::object());
CubeFunction function_from_json(const Json& j);

// Generator files: {"mu", "matrix", "labels"}.
Json generator_to_json(const MarkovGenerator& gen);
MarkovGenerator generator_from_json(const Json& j);

// Code files: {"length", "generators"} with rows as ASCII bit strings,
// leftmost character = coordinate 1.
Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

// Construction records: function metadata, parameters, claims array
// [{"claim", "relation", "achieved", "bound", "holds"}] with dyadic values
// serialized as "num/den" strings (den a power of two).
Json record_to_json(const ConstructionRecord& rec);

Json report_to_json(const CheckReport& r);
Json reports_to_json(const std::string& suite_id,
                     const std::vector<CheckReport>& reports);
/// One row per report; columns are the sorted union of parameter keys.
std::string reports_to_csv(const std::vector<CheckReport>& reports);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit content digest, rendered as 16 hex characters.
std::string digest_hex(const std::string& bytes);

}  // namespace tailspace
