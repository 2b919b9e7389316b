#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "dlab/diag.hpp"
#include "dlab/space.hpp"

namespace dlab {

using Json = nlohmann::ordered_json;

/// Throws kParse on malformed JSON and kInvalidDescriptor on a well-formed but invalid descriptor.
SpacePtr space_from_json(const Json& j);
Json space_to_json(const Space& space);
SpacePtr parse_space(std::string_view text);

/// Dense "1,0,2", a JSON array, or a sparse JSON object {"1": 1, "3": 2}. Throws kParse.
SparseVector parse_vector(std::string_view text);
SparseVector vector_from_json(const Json& j);
/// Sparse object form with decimal string keys.
Json vector_to_json(const SparseVector& v);

Json report_to_json(const DiagnosticReport& report);

}  // namespace dlab
