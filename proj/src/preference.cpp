#include "kritwahl/preference.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "kritwahl/error.hpp"

namespace kritwahl {
namespace {

std::string trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

CriterionSet::CriterionSet(std::vector<std::string> labels) {
  if (labels.size() < 2) {
    throw Error(ErrorCode::DegenerateInstance,
                "at least two criteria are required, got " + std::to_string(labels.size()));
  }
  std::set<std::string> seen;
  for (auto& raw : labels) {
    std::string label = trim(raw);
    if (label.empty()) throw Error(ErrorCode::InvalidLabel, "criterion labels must be non-empty");
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate criterion label '" + label + "'");
    }
    labels_.push_back(std::move(label));
  }
}

Criterion CriterionSet::find(std::string_view label) const {
  std::string key = trim(label);
  auto it = std::find(labels_.begin(), labels_.end(), key);
  return static_cast<Criterion>(it - labels_.begin());
}

PreferenceRelation::PreferenceRelation(std::size_t k) : k_(k), cells_(k * k, Cell::Undecided) {
  if (k < 2) {
    throw Error(ErrorCode::DegenerateInstance,
                "at least two criteria are required, got " + std::to_string(k));
  }
}

void PreferenceRelation::check_index(Criterion i) const {
  if (i >= k_) {
    throw Error(ErrorCode::IndexOutOfRange, "criterion index " + std::to_string(i) +
                                                " out of range for k=" + std::to_string(k_));
  }
}

Cell PreferenceRelation::cell(Criterion i, Criterion j) const {
  check_index(i);
  check_index(j);
  return at(i, j);
}

std::size_t PreferenceRelation::wins(Criterion i) const {
  check_index(i);
  std::size_t n = 0;
  for (Criterion j = 0; j < k_; ++j) n += at(i, j) == Cell::Wins ? 1 : 0;
  return n;
}

// Longest chain from `from` down to `to` through the criteria lying between
// them. In a transitive relation a dominating criterion always has strictly
// more wins, so sorting by wins gives a topological order for the DP.
std::vector<Criterion> PreferenceRelation::witness_path(Criterion from, Criterion to) const {
  std::vector<Criterion> between;
  for (Criterion z = 0; z < k_; ++z) {
    bool after_from = z == from || at(from, z) == Cell::Wins;
    bool before_to = z == to || at(z, to) == Cell::Wins;
    if (after_from && before_to) between.push_back(z);
  }
  std::vector<std::size_t> win_count(k_);
  for (Criterion z : between) win_count[z] = wins(z);
  std::sort(between.begin(), between.end(),
            [&](Criterion a, Criterion b) { return win_count[a] > win_count[b]; });

  // length[z]: edges on the longest chain from z to `to`.
  std::vector<std::size_t> length(k_, 0);
  std::vector<Criterion> next(k_, to);
  for (auto it = between.rbegin(); it != between.rend(); ++it) {
    Criterion z = *it;
    for (Criterion y : between) {
      if (at(z, y) == Cell::Wins && length[y] + 1 > length[z]) {
        length[z] = length[y] + 1;
        next[z] = y;
      }
    }
  }
  std::vector<Criterion> path{from};
  for (Criterion z = from; z != to;) {
    z = next[z];
    path.push_back(z);
  }
  return path;
}

std::vector<Comparison> PreferenceRelation::assert_preference(Comparison c) {
  check_index(c.winner);
  check_index(c.loser);
  if (c.winner == c.loser) {
    throw Error(ErrorCode::SelfComparison,
                "criterion " + std::to_string(c.winner) + " cannot be compared with itself");
  }
  Cell current = at(c.winner, c.loser);
  if (current == Cell::Wins) return {};
  if (current == Cell::Loses) {
    auto path = witness_path(c.loser, c.winner);
    std::ostringstream msg;
    msg << c.winner << " > " << c.loser << " would close a cycle: already ";
    for (std::size_t i = 0; i < path.size(); ++i) msg << (i ? " > " : "") << path[i];
    throw ContradictionError(msg.str(), std::move(path));
  }

  // Everything at or above the winner now dominates everything at or
  // below the loser.
  std::vector<Criterion> above{c.winner};
  std::vector<Criterion> below{c.loser};
  for (Criterion x = 0; x < k_; ++x) {
    if (at(x, c.winner) == Cell::Wins) above.push_back(x);
    if (at(c.loser, x) == Cell::Wins) below.push_back(x);
  }
  std::sort(above.begin(), above.end());
  std::sort(below.begin(), below.end());

  std::vector<Comparison> implied;
  for (Criterion x : above) {
    for (Criterion y : below) {
      if (at(x, y) != Cell::Undecided) continue;
      at(x, y) = Cell::Wins;
      at(y, x) = Cell::Loses;
      ++decided_;
      if (x != c.winner || y != c.loser) implied.push_back({x, y});
    }
  }
  return implied;
}

std::size_t PreferenceRelation::forced_count(Comparison c) const {
  check_index(c.winner);
  check_index(c.loser);
  if (c.winner == c.loser || at(c.winner, c.loser) != Cell::Undecided) return 0;
  std::vector<Criterion> above{c.winner};
  std::vector<Criterion> below{c.loser};
  for (Criterion x = 0; x < k_; ++x) {
    if (at(x, c.winner) == Cell::Wins) above.push_back(x);
    if (at(c.loser, x) == Cell::Wins) below.push_back(x);
  }
  std::size_t n = 0;
  for (Criterion x : above) {
    for (Criterion y : below) n += at(x, y) == Cell::Undecided ? 1 : 0;
  }
  return n;
}

std::vector<CriterionPair> PreferenceRelation::undecided_pairs() const {
  std::vector<CriterionPair> out;
  for (Criterion i = 0; i < k_; ++i) {
    for (Criterion j = i + 1; j < k_; ++j) {
      if (at(i, j) == Cell::Undecided) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Criterion> PreferenceRelation::ranking() const {
  if (!complete()) {
    auto open = pair_count() - decided_;
    throw Error(ErrorCode::Incomplete, std::to_string(open) + (open == 1 ? " pair" : " pairs") +
                                           " undecided");
  }
  std::vector<Criterion> order(k_);
  for (Criterion i = 0; i < k_; ++i) order[k_ - 1 - wins(i)] = i;
  return order;
}

std::vector<std::string> PreferenceRelation::check_invariants() const {
  std::vector<std::string> out;
  std::size_t decided = 0;
  for (Criterion i = 0; i < k_; ++i) {
    if (at(i, i) != Cell::Undecided) out.push_back("diagonal cell " + std::to_string(i) + " decided");
    for (Criterion j = 0; j < k_; ++j) {
      if (i == j) continue;
      Cell a = at(i, j);
      Cell b = at(j, i);
      bool mirrored = (a == Cell::Undecided && b == Cell::Undecided) ||
                      (a == Cell::Wins && b == Cell::Loses) ||
                      (a == Cell::Loses && b == Cell::Wins);
      if (!mirrored) {
        out.push_back("asymmetry violated at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (i < j && a != Cell::Undecided) ++decided;
      if (a != Cell::Wins) continue;
      for (Criterion l = 0; l < k_; ++l) {
        if (at(j, l) == Cell::Wins && at(i, l) != Cell::Wins) {
          out.push_back("closure missing " + std::to_string(i) + " > " + std::to_string(l));
        }
      }
    }
  }
  // A closed relation has a cycle iff some criterion dominates itself,
  // which the diagonal check already covers; this catches non-closed ones.
  std::vector<std::size_t> indegree(k_, 0);
  for (Criterion i = 0; i < k_; ++i)
    for (Criterion j = 0; j < k_; ++j)
      if (i != j && at(i, j) == Cell::Wins) ++indegree[j];
  std::vector<Criterion> ready;
  for (Criterion i = 0; i < k_; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t visited = 0;
  while (!ready.empty()) {
    Criterion v = ready.back();
    ready.pop_back();
    ++visited;
    for (Criterion j = 0; j < k_; ++j)
      if (j != v && at(v, j) == Cell::Wins && --indegree[j] == 0) ready.push_back(j);
  }
  if (visited != k_) out.push_back("cycle among decided preferences");
  if (decided != decided_) {
    out.push_back("decided count " + std::to_string(decided_) + " but " + std::to_string(decided) +
                  " pairs decided");
  }
  return out;
}

PreferenceRelation relation_from_order(const std::vector<Criterion>& order) {
  PreferenceRelation rel(order.size());
  for (std::size_t p = 0; p + 1 < order.size(); ++p) {
    rel.assert_preference({order[p], order[p + 1]});
  }
  if (!rel.complete()) throw Error(ErrorCode::InvalidArgument, "order is not a permutation");
  return rel;
}

std::vector<Comparison> DecisionLog::entered() const {
  std::vector<Comparison> out;
  for (const auto& e : entries_)
    if (e.origin == Origin::Entered) out.push_back(e.comparison);
  return out;
}

std::size_t DecisionLog::entered_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const LogEntry& e) { return e.origin == Origin::Entered; }));
}

std::size_t DecisionLog::implied_count() const { return entries_.size() - entered_count(); }

std::vector<Comparison> DecisionLog::apply(PreferenceRelation& rel, Comparison c) {
  if (rel.prefers(c.winner, c.loser)) return {};
  auto implied = rel.assert_preference(c);
  entries_.push_back({c, Origin::Entered});
  for (const auto& i : implied) entries_.push_back({i, Origin::Implied});
  return implied;
}

std::pair<PreferenceRelation, DecisionLog> replay(std::size_t k,
                                                  const std::vector<Comparison>& entered) {
  PreferenceRelation rel(k);
  DecisionLog log;
  for (const auto& c : entered) log.apply(rel, c);
  return {std::move(rel), std::move(log)};
}

std::pair<PreferenceRelation, DecisionLog> retract_last(const PreferenceRelation& rel,
                                                        const DecisionLog& log) {
  auto entered = log.entered();
  if (entered.empty()) throw Error(ErrorCode::EmptyLog, "no entered comparison to retract");
  entered.pop_back();
  return replay(rel.size(), entered);
}

}  // namespace kritwahl
