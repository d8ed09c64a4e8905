#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kritwahl/preference.hpp"
#include "kritwahl/rational.hpp"

namespace kritwahl {

/// Scores of each alternative on each criterion, all within [0, scale_max].
class ScoreTable {
 public:
  static constexpr std::int64_t kDefaultScaleMax = 10;

  /// scores[a][i] is alternative a's score on criterion i.
  ScoreTable(std::vector<std::string> alternatives, std::vector<std::vector<Rational>> scores,
             std::int64_t scale_max = kDefaultScaleMax);

  std::size_t alternative_count() const noexcept { return alternatives_.size(); }
  std::size_t criterion_count() const noexcept { return criteria_; }
  std::int64_t scale_max() const noexcept { return scale_max_; }
  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<std::vector<Rational>>& scores() const noexcept { return scores_; }
  const Rational& score(std::size_t alternative, Criterion c) const {
    return scores_.at(alternative).at(c);
  }

  friend bool operator==(const ScoreTable&, const ScoreTable&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<std::vector<Rational>> scores_;
  std::size_t criteria_ = 0;
  std::int64_t scale_max_;
};

struct RankedAlternative {
  std::size_t alternative = 0;
  Rational utility;
  std::size_t place = 1;  // 1-based; tied alternatives share a place
  bool tied = false;
};

struct UtilityResult {
  std::vector<Rational> utilities;        // by alternative index
  std::vector<RankedAlternative> ranking; // descending utility, ties in input order
  std::vector<std::size_t> winners;       // every alternative sharing the top utility
};

/// U_a = sum_i w_i * s(a, i).
UtilityResult evaluate(const ScoreTable& scores, const std::vector<Rational>& weights);

struct SwapReport {
  std::size_t position = 0;  // swaps ranking[position] and ranking[position + 1]
  Criterion upper = 0;       // criterion ranked higher before the swap
  Criterion lower = 0;
  std::vector<Rational> weights;  // after the swap
  std::vector<std::size_t> winners_before;
  std::vector<std::size_t> winners_after;
  bool winner_changed = false;
};

/// Re-evaluates the table once per adjacent transposition of the criterion
/// ranking and reports whether the set of winning alternatives moves.
std::vector<SwapReport> sensitivity_adjacent_swap(const PreferenceRelation& rel,
                                                  const ScoreTable& scores);

}  // namespace kritwahl
