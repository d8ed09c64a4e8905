#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "kritwahl/nutzwert.hpp"
#include "kritwahl/preference.hpp"
#include "kritwahl/rational.hpp"

namespace kritwahl {

using Json = nlohmann::json;

/// {"num": N, "den": D, "decimal": "..."}; decimal carries 15 significant
/// digits rounded half-to-even.
Json rational_to_json(const Rational& r);

/// Accepts integers, decimal numbers, "n/d" or decimal strings and
/// {"num", "den"} objects.
Rational rational_from_json(const Json& j);

Json comparison_to_json(const Comparison& c);
Json comparisons_to_json(const std::vector<Comparison>& cs);

/// {"alternatives": [...], "scores": [[...], ...]}; scale_max is carried
/// separately by the owning document.
Json score_table_to_json(const ScoreTable& table);

/// Reads {"alternatives", "scores", "scale_max"?}. A missing scale_max
/// falls back to `default_scale_max`.
ScoreTable score_table_from_json(const Json& j, std::int64_t default_scale_max);

/// Typed field access raising ErrorCode::ParseError with the field name.
const Json& require_field(const Json& object, const char* name);
std::string require_string(const Json& object, const char* name);
std::int64_t require_integer(const Json& object, const char* name);
std::vector<std::string> require_string_list(const Json& object, const char* name);

/// Parses text as JSON, mapping syntax errors to ErrorCode::ParseError.
Json parse_json(const std::string& text);

}  // namespace kritwahl
