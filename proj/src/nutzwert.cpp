#include "kritwahl/nutzwert.hpp"

#include <algorithm>
#include <set>

#include "kritwahl/error.hpp"
#include "kritwahl/weighting.hpp"

namespace kritwahl {

ScoreTable::ScoreTable(std::vector<std::string> alternatives,
                       std::vector<std::vector<Rational>> scores, std::int64_t scale_max)
    : alternatives_(std::move(alternatives)), scores_(std::move(scores)), scale_max_(scale_max) {
  if (scale_max_ <= 0) throw Error(ErrorCode::InvalidArgument, "scale_max must be positive");
  if (alternatives_.empty()) throw Error(ErrorCode::InvalidArgument, "no alternatives given");
  std::set<std::string> seen;
  for (const auto& a : alternatives_) {
    if (a.empty()) throw Error(ErrorCode::InvalidLabel, "alternative labels must be non-empty");
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate alternative label '" + a + "'");
    }
  }
  if (scores_.size() != alternatives_.size()) {
    throw Error(ErrorCode::ShapeMismatch, std::to_string(alternatives_.size()) +
                                              " alternatives but " +
                                              std::to_string(scores_.size()) + " score rows");
  }
  criteria_ = scores_.front().size();
  for (std::size_t a = 0; a < scores_.size(); ++a) {
    if (scores_[a].size() != criteria_) {
      throw Error(ErrorCode::ShapeMismatch, "score rows differ in length");
    }
    for (std::size_t i = 0; i < criteria_; ++i) {
      const Rational& s = scores_[a][i];
      if (s < Rational(0) || s > Rational(scale_max_)) {
        throw Error(ErrorCode::ScoreOutOfRange,
                    "score " + s.to_string() + " of '" + alternatives_[a] + "' on criterion " +
                        std::to_string(i) + " outside [0, " + std::to_string(scale_max_) + "]");
      }
    }
  }
}

UtilityResult evaluate(const ScoreTable& scores, const std::vector<Rational>& weights) {
  if (scores.criterion_count() != weights.size()) {
    throw Error(ErrorCode::ShapeMismatch, "score table has " +
                                              std::to_string(scores.criterion_count()) +
                                              " criteria, weight vector has " +
                                              std::to_string(weights.size()));
  }
  UtilityResult r;
  for (std::size_t a = 0; a < scores.alternative_count(); ++a) {
    Rational u;
    for (Criterion i = 0; i < weights.size(); ++i) u += weights[i] * scores.score(a, i);
    r.utilities.push_back(u);
  }

  std::vector<std::size_t> order(r.utilities.size());
  for (std::size_t a = 0; a < order.size(); ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return r.utilities[a] > r.utilities[b]; });
  for (std::size_t p = 0; p < order.size(); ++p) {
    RankedAlternative entry{order[p], r.utilities[order[p]], p + 1, false};
    if (p > 0 && r.ranking.back().utility == entry.utility) {
      entry.place = r.ranking.back().place;
      entry.tied = true;
      r.ranking.back().tied = true;
    }
    r.ranking.push_back(entry);
  }
  for (const auto& e : r.ranking) {
    if (e.place == 1) r.winners.push_back(e.alternative);
  }
  return r;
}

std::vector<SwapReport> sensitivity_adjacent_swap(const PreferenceRelation& rel,
                                                  const ScoreTable& scores) {
  std::vector<Criterion> order = rel.ranking();
  auto baseline = evaluate(scores, compute_weights(rel));
  std::vector<SwapReport> out;
  for (std::size_t p = 0; p + 1 < order.size(); ++p) {
    std::vector<Criterion> swapped = order;
    std::swap(swapped[p], swapped[p + 1]);
    SwapReport report;
    report.position = p;
    report.upper = order[p];
    report.lower = order[p + 1];
    report.weights = compute_weights(relation_from_order(swapped));
    report.winners_before = baseline.winners;
    report.winners_after = evaluate(scores, report.weights).winners;
    report.winner_changed = report.winners_after != report.winners_before;
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace kritwahl
