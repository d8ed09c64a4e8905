#include "kritwahl/session.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <random>
#include <sstream>

#include "kritwahl/error.hpp"

namespace kritwahl {

std::string_view to_string(Strategy s) {
  return s == Strategy::Lexicographic ? "lexicographic" : "max-inference";
}

std::string_view to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::Eliciting: return "eliciting";
    case SessionStatus::Weighted: return "weighted";
    case SessionStatus::Scored: return "scored";
  }
  return "eliciting";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "lexicographic") return Strategy::Lexicographic;
  if (text == "max-inference") return Strategy::MaxInference;
  throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + std::string(text) +
                                              "' (expected lexicographic or max-inference)");
}

std::string generate_session_id() {
  std::random_device rd;
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (int i = 0; i < 4; ++i) out << std::setw(8) << static_cast<std::uint32_t>(rd());
  return out.str();
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

Session::Session(std::string id, std::string created_at, CriterionSet criteria, Strategy strategy,
                 std::int64_t scale_max)
    : id_(std::move(id)),
      created_at_(std::move(created_at)),
      criteria_(std::move(criteria)),
      relation_(criteria_),
      strategy_(strategy),
      scale_max_(scale_max) {
  if (scale_max_ <= 0) throw Error(ErrorCode::InvalidArgument, "scale_max must be positive");
}

Session Session::create(std::vector<std::string> labels, Strategy strategy,
                        std::int64_t scale_max) {
  return Session(generate_session_id(), utc_timestamp(), CriterionSet(std::move(labels)), strategy,
                 scale_max);
}

SessionStatus Session::status() const {
  if (!relation_.complete()) return SessionStatus::Eliciting;
  return scores_ ? SessionStatus::Scored : SessionStatus::Weighted;
}

std::optional<CriterionPair> Session::next_question() const {
  auto open = relation_.undecided_pairs();
  if (open.empty()) return std::nullopt;
  if (strategy_ == Strategy::Lexicographic) return open.front();

  std::optional<CriterionPair> best;
  std::size_t best_score = 0;
  for (const auto& p : open) {
    std::size_t score = std::min(relation_.forced_count({p.first, p.second}),
                                 relation_.forced_count({p.second, p.first}));
    if (!best || score > best_score) {
      best = p;
      best_score = score;
    }
  }
  return best;
}

std::vector<Comparison> Session::answer(CriterionPair pair, Criterion winner) {
  std::size_t k = criteria_.size();
  if (pair.first >= k || pair.second >= k || winner >= k) {
    throw Error(ErrorCode::IndexOutOfRange, "criterion index out of range for k=" + std::to_string(k));
  }
  if (pair.first == pair.second) {
    throw Error(ErrorCode::SelfComparison, "a criterion cannot be compared with itself");
  }
  pair = CriterionPair::of(pair.first, pair.second);
  if (!pair.contains(winner)) {
    throw Error(ErrorCode::InvalidArgument, "winner must be one of the two compared criteria");
  }
  if (relation_.decided(pair.first, pair.second)) {
    throw Error(ErrorCode::StalePair, "pair " + criteria_.label(pair.first) + " / " +
                                          criteria_.label(pair.second) + " is already decided");
  }
  Criterion loser = winner == pair.first ? pair.second : pair.first;
  return log_.apply(relation_, {winner, loser});
}

void Session::undo() {
  auto [rel, log] = retract_last(relation_, log_);
  relation_ = std::move(rel);
  log_ = std::move(log);
}

void Session::set_scores(ScoreTable table) {
  if (table.criterion_count() != criteria_.size()) {
    throw Error(ErrorCode::ShapeMismatch, "score table has " +
                                              std::to_string(table.criterion_count()) +
                                              " columns, session has " +
                                              std::to_string(criteria_.size()) + " criteria");
  }
  scale_max_ = table.scale_max();
  scores_ = std::move(table);
}

std::vector<Rational> Session::weights() const { return compute_weights(relation_); }

TheoremReport Session::satz() const {
  return verify_satz(ComparisonMatrix::from_relation(relation_));
}

UtilityResult Session::result() const {
  if (!scores_) throw Error(ErrorCode::NoScores, "no score table attached");
  return evaluate(*scores_, weights());
}

std::vector<SwapReport> Session::sensitivity() const {
  if (!scores_) throw Error(ErrorCode::NoScores, "no score table attached");
  return sensitivity_adjacent_swap(relation_, *scores_);
}

Json Session::export_state() const {
  Json doc{
      {"version", kSchemaVersion},
      {"id", id_},
      {"created_at", created_at_},
      {"labels", criteria_.labels()},
      {"strategy", to_string(strategy_)},
      {"answers", comparisons_to_json(log_.entered())},
      {"scale_max", scale_max_},
  };
  if (scores_) doc["scores"] = score_table_to_json(*scores_);
  return doc;
}

Session Session::import_state(const std::string& text) { return import_state(parse_json(text)); }

Session Session::import_state(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "session document must be an object");
  std::string version = require_string(doc, "version");
  if (version != kSchemaVersion) {
    throw Error(ErrorCode::SchemaVersionUnsupported,
                "unsupported session schema '" + version + "', expected " +
                    std::string(kSchemaVersion));
  }
  std::string id = require_string(doc, "id");
  if (id.empty()) throw Error(ErrorCode::ParseError, "empty session id");
  std::int64_t scale_max = ScoreTable::kDefaultScaleMax;
  if (doc.contains("scale_max")) scale_max = require_integer(doc, "scale_max");
  Strategy strategy = Strategy::Lexicographic;
  if (doc.contains("strategy")) strategy = parse_strategy(require_string(doc, "strategy"));

  Session s(std::move(id), require_string(doc, "created_at"),
            CriterionSet(require_string_list(doc, "labels")), strategy, scale_max);

  const Json& answers = require_field(doc, "answers");
  if (!answers.is_array()) throw Error(ErrorCode::ParseError, "'answers' must be an array");
  std::size_t index = 0;
  for (const auto& a : answers) {
    auto winner = require_integer(a, "winner");
    auto loser = require_integer(a, "loser");
    if (winner < 0 || loser < 0) throw Error(ErrorCode::ParseError, "negative criterion index");
    Comparison c{static_cast<Criterion>(winner), static_cast<Criterion>(loser)};
    if (c.winner < s.criteria_.size() && s.relation_.prefers(c.winner, c.loser)) {
      throw Error(ErrorCode::ParseError,
                  "answer " + std::to_string(index) + " repeats an already decided pair");
    }
    s.log_.apply(s.relation_, c);
    ++index;
  }
  if (doc.contains("scores") && !doc.at("scores").is_null()) {
    s.set_scores(score_table_from_json(doc.at("scores"), scale_max));
  }
  return s;
}

}  // namespace kritwahl
