#pragma once

// Independent reference computations for the tests. Nothing here touches
// the library's Rational, closure or weighting code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

// Unreduced fraction num/den with den > 0.
struct Frac {
  std::int64_t num;
  std::int64_t den;
};

inline bool same_value(std::int64_t a_num, std::int64_t a_den, Frac b) {
  return a_num * b.den == b.num * a_den;
}

// a[i][j] = 1 iff i comes before j in `order` (order[0] most important).
inline std::vector<std::vector<int>> order_matrix(const std::vector<std::size_t>& order) {
  std::size_t k = order.size();
  std::vector<std::size_t> pos(k);
  for (std::size_t p = 0; p < k; ++p) pos[order[p]] = p;
  std::vector<std::vector<int>> a(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && pos[i] < pos[j]) a[i][j] = 1;
  return a;
}

// Row sum over the grand total of the matrix, per criterion.
inline std::vector<Frac> row_sum_weights(const std::vector<std::vector<int>>& a) {
  std::int64_t total = 0;
  std::vector<std::int64_t> rows(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) rows[i] += a[i][j];
  for (auto r : rows) total += r;
  std::vector<Frac> w;
  for (auto r : rows) w.push_back({r, total});
  return w;
}

inline std::int64_t matrix_total(const std::vector<std::vector<int>>& a) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) total += a[i][j];
  return total;
}

// Closed-form ladder rung: 2i / ((k - 1) k).
inline Frac ladder(std::size_t k, std::size_t i) {
  auto n = static_cast<std::int64_t>(k);
  return {2 * static_cast<std::int64_t>(i), (n - 1) * n};
}

inline std::vector<std::vector<std::size_t>> all_orders(std::size_t k) {
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(order);
  while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline std::vector<std::size_t> random_order(std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// Three-colour DFS cycle search over edges[i][j] != 0.
inline bool has_cycle(const std::vector<std::vector<int>>& edges) {
  std::size_t k = edges.size();
  std::vector<int> colour(k, 0);
  std::function<bool(std::size_t)> visit = [&](std::size_t v) {
    colour[v] = 1;
    for (std::size_t w = 0; w < k; ++w) {
      if (w == v || !edges[v][w]) continue;
      if (colour[w] == 1) return true;
      if (colour[w] == 0 && visit(w)) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < k; ++v)
    if (colour[v] == 0 && visit(v)) return true;
  return false;
}

// Warshall transitive closure.
inline std::vector<std::vector<int>> closure(std::vector<std::vector<int>> r) {
  std::size_t k = r.size();
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (r[i][m] && r[m][j]) r[i][j] = 1;
  return r;
}

}  // namespace oracle
