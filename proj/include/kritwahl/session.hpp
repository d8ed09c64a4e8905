#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kritwahl/codec.hpp"
#include "kritwahl/nutzwert.hpp"
#include "kritwahl/preference.hpp"
#include "kritwahl/weighting.hpp"

namespace kritwahl {

inline constexpr std::string_view kSchemaVersion = "kritwahl/1";

enum class Strategy { Lexicographic, MaxInference };
enum class SessionStatus { Eliciting, Weighted, Scored };

std::string_view to_string(Strategy s);
std::string_view to_string(SessionStatus s);
/// "lexicographic" or "max-inference"; anything else is InvalidArgument.
Strategy parse_strategy(std::string_view text);

/// One elicitation run: poses undecided pairs, records answers with their
/// implications, and carries an optional score table for evaluation.
/// Mutations on one Session must be serialized by the caller.
class Session {
 public:
  static Session create(std::vector<std::string> labels, Strategy strategy = Strategy::Lexicographic,
                        std::int64_t scale_max = ScoreTable::kDefaultScaleMax);

  const std::string& id() const noexcept { return id_; }
  const std::string& created_at() const noexcept { return created_at_; }
  const CriterionSet& criteria() const noexcept { return criteria_; }
  const PreferenceRelation& relation() const noexcept { return relation_; }
  const DecisionLog& log() const noexcept { return log_; }
  Strategy strategy() const noexcept { return strategy_; }
  std::int64_t scale_max() const noexcept { return scale_max_; }
  const std::optional<ScoreTable>& scores() const noexcept { return scores_; }
  SessionStatus status() const;

  /// Next pair to ask about, or nullopt once the relation is complete.
  /// Lexicographic picks the smallest undecided pair. Max-inference picks
  /// the pair whose less productive answer still decides the most pairs.
  std::optional<CriterionPair> next_question() const;

  /// Records `winner` as the more important member of `pair`. Fails with
  /// StalePair when the pair is already decided.
  std::vector<Comparison> answer(CriterionPair pair, Criterion winner);
  std::vector<Comparison> answer(Comparison c) {
    return answer(CriterionPair::of(c.winner, c.loser), c.winner);
  }

  void undo();

  /// Replaces the score table; its column count must equal the number of
  /// criteria. The table's scale becomes the session's scale.
  void set_scores(ScoreTable table);

  std::vector<Rational> weights() const;
  TheoremReport satz() const;
  UtilityResult result() const;
  std::vector<SwapReport> sensitivity() const;

  Json export_state() const;
  static Session import_state(const Json& document);
  static Session import_state(const std::string& text);

  friend bool operator==(const Session&, const Session&) = default;

 private:
  Session(std::string id, std::string created_at, CriterionSet criteria, Strategy strategy,
          std::int64_t scale_max);

  std::string id_;
  std::string created_at_;
  CriterionSet criteria_;
  PreferenceRelation relation_;
  DecisionLog log_;
  Strategy strategy_;
  std::int64_t scale_max_;
  std::optional<ScoreTable> scores_;
};

/// 32 lowercase hex digits from a non-deterministic source.
std::string generate_session_id();

/// Current UTC time as RFC 3339, e.g. "2026-10-15T07:56:00Z".
std::string utc_timestamp();

}  // namespace kritwahl
