#pragma once

#include <string>

#include "json.hpp"
#include "mdsgrs/field.hpp"
#include "mdsgrs/grs.hpp"
#include "mdsgrs/linalg.hpp"

// JSON artifacts. Malformed input throws ParseError.
namespace mdsgrs {

using Json = nlohmann::ordered_json;

/// {"p","m","modulus","theta"}; theta is the encoding of the primitive element (always 2).
Json field_to_json(const Field& f);
/// Rebuilds the field from its modulus.
FieldPtr field_from_json(const Json& j, std::uint64_t table_limit = Field::kDefaultTableLimit);

/// {"field","a","v","extended","k","provenance":{"theorem","params"}}
Json code_to_json(const SelfDualCode& code);
/// Structural checks only: distinct in-field points, |v| = |a|, k = n/2.
/// Self-duality is left to the caller.
SelfDualCode code_from_json(const Json& j, std::uint64_t table_limit = Field::kDefaultTableLimit);
SelfDualCode code_from_string(const std::string& text, std::uint64_t table_limit = Field::kDefaultTableLimit);

/// One row per line, space-separated encodings.
std::string generator_text(const GeneratorMatrix& g);

}  // namespace mdsgrs
