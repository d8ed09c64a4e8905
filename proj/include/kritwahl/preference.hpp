#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kritwahl {

using Criterion = std::size_t;

/// Ordered, distinct, non-empty criterion labels. Index i names criterion i.
/// At least two criteria are required; a single one admits no comparison.
class CriterionSet {
 public:
  explicit CriterionSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Criterion i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Index of the label (after trimming), or size() when absent.
  Criterion find(std::string_view label) const;

  friend bool operator==(const CriterionSet&, const CriterionSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// winner is strictly more important than loser.
struct Comparison {
  Criterion winner = 0;
  Criterion loser = 0;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

/// Unordered pair normalized to first < second.
struct CriterionPair {
  Criterion first = 0;
  Criterion second = 0;

  static CriterionPair of(Criterion a, Criterion b) {
    return a < b ? CriterionPair{a, b} : CriterionPair{b, a};
  }
  bool contains(Criterion c) const noexcept { return c == first || c == second; }

  friend bool operator==(const CriterionPair&, const CriterionPair&) = default;
  friend auto operator<=>(const CriterionPair&, const CriterionPair&) = default;
};

enum class Cell : std::uint8_t { Undecided, Wins, Loses };

/// A strict partial order over k criteria that is kept transitively closed
/// and cycle-free at all times. Row i of the cell table is the set of
/// criteria i dominates; column i is the set dominating i.
class PreferenceRelation {
 public:
  explicit PreferenceRelation(std::size_t k);
  explicit PreferenceRelation(const CriterionSet& criteria)
      : PreferenceRelation(criteria.size()) {}

  std::size_t size() const noexcept { return k_; }
  Cell cell(Criterion i, Criterion j) const;
  bool prefers(Criterion i, Criterion j) const { return cell(i, j) == Cell::Wins; }
  bool decided(Criterion i, Criterion j) const { return cell(i, j) != Cell::Undecided; }

  std::size_t decided_count() const noexcept { return decided_; }
  std::size_t pair_count() const noexcept { return k_ * (k_ - 1) / 2; }
  bool complete() const noexcept { return decided_ == pair_count(); }

  /// Number of criteria i dominates.
  std::size_t wins(Criterion i) const;

  /// Records c.winner > c.loser and every comparison forced by
  /// transitivity. Returns the newly forced comparisons, excluding c.
  /// Re-asserting an existing comparison is a no-op. On error the relation
  /// is unchanged.
  std::vector<Comparison> assert_preference(Comparison c);

  /// Number of pairs that assert_preference(c) would newly decide,
  /// including c itself; 0 when c is already decided either way.
  std::size_t forced_count(Comparison c) const;

  /// Undecided pairs in ascending lexicographic order.
  std::vector<CriterionPair> undecided_pairs() const;

  /// Criteria from most to least important. Requires a complete relation.
  std::vector<Criterion> ranking() const;

  /// Empty when every structural invariant holds.
  std::vector<std::string> check_invariants() const;

  friend bool operator==(const PreferenceRelation&, const PreferenceRelation&) = default;

 private:
  void check_index(Criterion i) const;
  std::vector<Criterion> witness_path(Criterion from, Criterion to) const;
  Cell& at(Criterion i, Criterion j) { return cells_[i * k_ + j]; }
  Cell at(Criterion i, Criterion j) const { return cells_[i * k_ + j]; }

  std::size_t k_;
  std::size_t decided_ = 0;
  std::vector<Cell> cells_;
};

/// The total order listing `order` from most to least important.
PreferenceRelation relation_from_order(const std::vector<Criterion>& order);

enum class Origin : std::uint8_t { Entered, Implied };

struct LogEntry {
  Comparison comparison;
  Origin origin = Origin::Entered;

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

/// Chronological record of decisions. Replaying the entered entries
/// rebuilds the relation; implied entries are kept for reporting.
class DecisionLog {
 public:
  const std::vector<LogEntry>& entries() const noexcept { return entries_; }
  std::vector<Comparison> entered() const;
  std::size_t entered_count() const;
  std::size_t implied_count() const;
  bool empty() const noexcept { return entries_.empty(); }

  /// Asserts c on rel and logs it together with its implications.
  std::vector<Comparison> apply(PreferenceRelation& rel, Comparison c);

  friend bool operator==(const DecisionLog&, const DecisionLog&) = default;

 private:
  std::vector<LogEntry> entries_;
};

/// Rebuilds relation and log from entered comparisons, in order.
std::pair<PreferenceRelation, DecisionLog> replay(std::size_t k,
                                                  const std::vector<Comparison>& entered);

/// Drops the most recent entered comparison and everything it implied.
std::pair<PreferenceRelation, DecisionLog> retract_last(const PreferenceRelation& rel,
                                                        const DecisionLog& log);

}  // namespace kritwahl
