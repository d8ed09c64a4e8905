#include "kritwahl/weighting.hpp"

#include <algorithm>

#include "kritwahl/error.hpp"

namespace kritwahl {

ComparisonMatrix ComparisonMatrix::from_relation(const PreferenceRelation& rel) {
  if (!rel.complete()) {
    auto open = rel.pair_count() - rel.decided_count();
    throw Error(ErrorCode::Incomplete,
                std::to_string(open) + (open == 1 ? " pair" : " pairs") + " undecided");
  }
  std::size_t k = rel.size();
  std::vector<std::uint8_t> cells(k * k, 0);
  for (Criterion i = 0; i < k; ++i)
    for (Criterion j = 0; j < k; ++j)
      if (i != j && rel.prefers(i, j)) cells[i * k + j] = 1;
  return ComparisonMatrix(k, std::move(cells));
}

ComparisonMatrix ComparisonMatrix::from_cells_unchecked(std::size_t k,
                                                        std::vector<std::uint8_t> cells) {
  if (cells.size() != k * k) throw Error(ErrorCode::ShapeMismatch, "cell count must be k*k");
  return ComparisonMatrix(k, std::move(cells));
}

int ComparisonMatrix::at(Criterion i, Criterion j) const {
  if (i >= k_ || j >= k_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return cells_[i * k_ + j];
}

std::int64_t ComparisonMatrix::row_sum(Criterion i) const {
  std::int64_t sum = 0;
  for (Criterion j = 0; j < k_; ++j)
    if (j != i) sum += at(i, j);
  return sum;
}

std::int64_t ComparisonMatrix::total() const {
  std::int64_t sum = 0;
  for (Criterion i = 0; i < k_; ++i) sum += row_sum(i);
  return sum;
}

std::vector<std::string> ComparisonMatrix::violations() const {
  std::vector<std::string> out;
  auto pair_name = [](Criterion i, Criterion j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (Criterion i = 0; i < k_; ++i) {
    if (cells_[i * k_ + i] != 0) out.push_back("diagonal entry at " + pair_name(i, i));
    for (Criterion j = 0; j < k_; ++j) {
      if (cells_[i * k_ + j] > 1) out.push_back("non-binary entry at " + pair_name(i, j));
    }
    for (Criterion j = i + 1; j < k_; ++j) {
      if (cells_[i * k_ + j] + cells_[j * k_ + i] != 1) {
        out.push_back("asymmetry violated: a" + pair_name(i, j) + " + a" + pair_name(j, i) +
                      " != 1");
      }
    }
  }
  // Kahn's algorithm over the one-entries.
  std::vector<std::size_t> indegree(k_, 0);
  for (Criterion i = 0; i < k_; ++i)
    for (Criterion j = 0; j < k_; ++j)
      if (i != j && cells_[i * k_ + j] != 0) ++indegree[j];
  std::vector<Criterion> ready;
  for (Criterion i = 0; i < k_; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t visited = 0;
  while (!ready.empty()) {
    Criterion v = ready.back();
    ready.pop_back();
    ++visited;
    for (Criterion j = 0; j < k_; ++j)
      if (j != v && cells_[v * k_ + j] != 0 && --indegree[j] == 0) ready.push_back(j);
  }
  if (visited != k_) out.push_back("cycle among preferences");
  return out;
}

std::int64_t pair_total(std::size_t k) {
  auto n = static_cast<std::int64_t>(k);
  return (n - 1) * n / 2;
}

std::vector<Rational> compute_weights(const ComparisonMatrix& matrix) {
  if (matrix.size() < 2) throw Error(ErrorCode::DegenerateInstance, "need at least two criteria");
  std::int64_t total = matrix.total();
  if (total == 0) throw Error(ErrorCode::DegenerateInstance, "matrix has no entries");
  std::vector<Rational> w;
  w.reserve(matrix.size());
  for (Criterion i = 0; i < matrix.size(); ++i) w.emplace_back(matrix.row_sum(i), total);
  return w;
}

std::vector<Rational> compute_weights(const PreferenceRelation& rel) {
  return compute_weights(ComparisonMatrix::from_relation(rel));
}

TheoremReport theorem_ladder(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::DegenerateInstance, "need at least two criteria");
  auto n = static_cast<std::int64_t>(k);
  TheoremReport r;
  r.k = k;
  r.max_weight = Rational(2, n);
  r.step = Rational(2, (n - 1) * n);
  for (std::int64_t i = 0; i < n; ++i) r.ladder.emplace_back(2 * i, (n - 1) * n);
  return r;
}

TheoremReport verify_satz(const ComparisonMatrix& matrix) {
  TheoremReport r = theorem_ladder(matrix.size());
  r.violations = matrix.violations();

  std::int64_t expected_total = pair_total(matrix.size());
  if (matrix.total() != expected_total) {
    r.violations.push_back("entry total " + std::to_string(matrix.total()) + " != " +
                           std::to_string(expected_total));
  }

  r.observed = compute_weights(matrix);
  std::sort(r.observed.begin(), r.observed.end());
  for (std::size_t i = 0; i < r.ladder.size(); ++i) {
    if (r.observed[i] != r.ladder[i]) {
      r.violations.push_back("sorted weight " + std::to_string(i) + " is " +
                             r.observed[i].to_string() + ", ladder says " +
                             r.ladder[i].to_string());
    }
  }
  if (r.observed.back() != r.max_weight) {
    r.violations.push_back("maximum weight " + r.observed.back().to_string() + " != " +
                           r.max_weight.to_string());
  }
  for (std::size_t i = 1; i < r.observed.size(); ++i) {
    Rational gap = r.observed[i] - r.observed[i - 1];
    if (gap != r.step) {
      r.violations.push_back("gap between sorted weights " + std::to_string(i - 1) + " and " +
                             std::to_string(i) + " is " + gap.to_string() + ", expected " +
                             r.step.to_string());
    }
  }
  r.holds = r.violations.empty();
  return r;
}

}  // namespace kritwahl
