#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kritwahl/preference.hpp"
#include "kritwahl/rational.hpp"

namespace kritwahl {

/// Binary k x k importance matrix: a(i, j) = 1 iff criterion i is more
/// important than criterion j. The diagonal carries no entry.
class ComparisonMatrix {
 public:
  /// Requires a complete relation (ErrorCode::Incomplete otherwise).
  static ComparisonMatrix from_relation(const PreferenceRelation& rel);

  /// Takes the row-major cells as given without any validation. Only for
  /// exercising the theorem checks against malformed input.
  static ComparisonMatrix from_cells_unchecked(std::size_t k, std::vector<std::uint8_t> cells);

  std::size_t size() const noexcept { return k_; }
  int at(Criterion i, Criterion j) const;
  std::int64_t row_sum(Criterion i) const;
  std::int64_t total() const;

  /// Structural problems: off-diagonal pairs that are not exactly one-sided,
  /// diagonal entries, non-binary cells, and cycles.
  std::vector<std::string> violations() const;

 private:
  ComparisonMatrix(std::size_t k, std::vector<std::uint8_t> cells)
      : k_(k), cells_(std::move(cells)) {}

  std::size_t k_;
  std::vector<std::uint8_t> cells_;
};

/// w_i = row_sum(i) / total(). ErrorCode::DegenerateInstance for k < 2 or
/// an all-zero matrix.
std::vector<Rational> compute_weights(const ComparisonMatrix& matrix);

/// Convenience: weights of a complete relation.
std::vector<Rational> compute_weights(const PreferenceRelation& rel);

/// Number of ones in any complete k x k comparison matrix: (k - 1) k / 2.
std::int64_t pair_total(std::size_t k);

struct TheoremReport {
  std::size_t k = 0;
  Rational max_weight;
  Rational step;
  std::vector<Rational> ladder;  // ascending: ladder[i] = 2i / ((k - 1) k)
  std::vector<Rational> observed;  // sorted weights; empty for closed-form reports
  bool holds = true;
  std::vector<std::string> violations;
};

/// Closed-form weight ladder, maximum 2/k and spacing 2/((k - 1) k).
TheoremReport theorem_ladder(std::size_t k);

/// Checks the matrix's weights against theorem_ladder(k): sorted weights
/// must equal the ladder, the maximum must be 2/k and each adjacent gap
/// must equal the step. Structural defects of the matrix are reported too.
TheoremReport verify_satz(const ComparisonMatrix& matrix);

}  // namespace kritwahl
