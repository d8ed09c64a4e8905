#include "kritwahl/codec.hpp"

#include "kritwahl/error.hpp"

namespace kritwahl {

Json rational_to_json(const Rational& r) {
  return Json{{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_decimal(15)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return Rational::parse(j.dump());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_object()) {
    std::int64_t den = j.contains("den") ? require_integer(j, "den") : 1;
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    return Rational(require_integer(j, "num"), den);
  }
  throw Error(ErrorCode::ParseError, "expected a number, got " + j.dump());
}

Json comparison_to_json(const Comparison& c) {
  return Json{{"winner", c.winner}, {"loser", c.loser}};
}

Json comparisons_to_json(const std::vector<Comparison>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(comparison_to_json(c));
  return out;
}

Json score_table_to_json(const ScoreTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.scores()) {
    Json r = Json::array();
    for (const auto& s : row) r.push_back(rational_to_json(s));
    rows.push_back(std::move(r));
  }
  return Json{{"alternatives", table.alternatives()}, {"scores", std::move(rows)}};
}

ScoreTable score_table_from_json(const Json& j, std::int64_t default_scale_max) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "score table must be an object");
  auto alternatives = require_string_list(j, "alternatives");
  std::int64_t scale_max = default_scale_max;
  if (j.contains("scale_max") && !j.at("scale_max").is_null()) {
    scale_max = require_integer(j, "scale_max");
  }
  const Json& rows = require_field(j, "scores");
  if (!rows.is_array()) throw Error(ErrorCode::ParseError, "'scores' must be an array of rows");
  std::vector<std::vector<Rational>> scores;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "each score row must be an array");
    std::vector<Rational> values;
    for (const auto& v : row) values.push_back(rational_from_json(v));
    scores.push_back(std::move(values));
  }
  return ScoreTable(std::move(alternatives), std::move(scores), scale_max);
}

const Json& require_field(const Json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  }
  return object.at(name);
}

std::string require_string(const Json& object, const char* name) {
  const Json& v = require_field(object, name);
  if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string("'") + name + "' must be a string");
  return v.get<std::string>();
}

std::int64_t require_integer(const Json& object, const char* name) {
  const Json& v = require_field(object, name);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::ParseError, std::string("'") + name + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<std::string> require_string_list(const Json& object, const char* name) {
  const Json& v = require_field(object, name);
  if (!v.is_array()) throw Error(ErrorCode::ParseError, std::string("'") + name + "' must be an array");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) {
      throw Error(ErrorCode::ParseError, std::string("'") + name + "' must hold strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace kritwahl
