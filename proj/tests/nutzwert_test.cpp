#include <algorithm>
#include <array>
#include <optional>
#include <random>

#include "doctest.h"
#include "kritwahl/error.hpp"
#include "kritwahl/nutzwert.hpp"
#include "kritwahl/weighting.hpp"
#include "oracle.hpp"

using namespace kritwahl;

namespace {

ScoreTable table(std::vector<std::string> alts, std::vector<std::vector<std::int64_t>> raw,
                 std::int64_t scale_max = 10) {
  std::vector<std::vector<Rational>> scores;
  for (const auto& row : raw) scores.emplace_back(row.begin(), row.end());
  return ScoreTable(std::move(alts), std::move(scores), scale_max);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::NotFound;
}

}  // namespace

TEST_CASE("score tables validate shape, range and labels") {
  CHECK(code_of([] { table({"A", "B"}, {{1, 2}}); }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([] { table({"A", "B"}, {{1, 2}, {1}}); }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([] { table({"A"}, {{11, 2}}); }) == ErrorCode::ScoreOutOfRange);
  CHECK(code_of([] { table({"A"}, {{-1, 2}}); }) == ErrorCode::ScoreOutOfRange);
  CHECK(code_of([] { table({"A"}, {{5, 2}}, 4); }) == ErrorCode::ScoreOutOfRange);
  CHECK(code_of([] { table({"A", "A"}, {{1}, {2}}); }) == ErrorCode::DuplicateLabel);
  CHECK(code_of([] { table({"A"}, {{1}}, 0); }) == ErrorCode::InvalidArgument);
  CHECK(table({"A"}, {{5, 2}}, 5).scale_max() == 5);
}

TEST_CASE("weighted sum utilities") {
  std::vector<Rational> w{Rational(2, 3), Rational(1, 3), Rational(0)};
  auto r = evaluate(table({"A"}, {{9, 6, 0}}), w);
  CHECK(r.utilities[0] == Rational(8));  // 2/3*9 + 1/3*6

  auto flat = evaluate(table({"A", "B"}, {{7, 7, 7}, {3, 3, 3}}), w);
  CHECK(flat.utilities == std::vector<Rational>{7, 3});

  auto two = evaluate(table({"A", "B"}, {{3, 10}, {4, 0}}), {Rational(1), Rational(0)});
  CHECK(two.winners == std::vector<std::size_t>{1});
  CHECK(two.utilities[1] == Rational(4));
  CHECK(two.ranking[0].alternative == 1);
  CHECK(two.ranking[1].place == 2);

  CHECK(code_of([&] { evaluate(table({"A"}, {{1, 2}}), w); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("ties are reported and keep input order") {
  std::vector<Rational> w{Rational(1, 2), Rational(1, 2)};
  auto r = evaluate(table({"A", "B", "C"}, {{1, 3}, {6, 0}, {4, 2}}), w);
  CHECK(r.winners == std::vector<std::size_t>{1, 2});
  REQUIRE(r.ranking.size() == 3);
  CHECK(r.ranking[0].alternative == 1);
  CHECK(r.ranking[1].alternative == 2);
  CHECK(r.ranking[0].tied);
  CHECK(r.ranking[1].tied);
  CHECK(r.ranking[1].place == 1);
  CHECK(r.ranking[2].place == 3);
  CHECK_FALSE(r.ranking[2].tied);
}

TEST_CASE("sensitivity: trivial cases change nothing") {
  auto one = sensitivity_adjacent_swap(relation_from_order({0, 1}), table({"A"}, {{3, 9}}));
  REQUIRE(one.size() == 1);
  CHECK_FALSE(one[0].winner_changed);

  auto same = sensitivity_adjacent_swap(relation_from_order({0, 1, 2}),
                                        table({"A", "B"}, {{4, 8, 1}, {4, 8, 1}}));
  REQUIRE(same.size() == 2);
  for (const auto& s : same) CHECK_FALSE(s.winner_changed);

  PreferenceRelation partial(3);
  partial.assert_preference({0, 1});
  CHECK(code_of([&] { sensitivity_adjacent_swap(partial, table({"A"}, {{1, 2, 3}})); }) ==
        ErrorCode::Incomplete);
}

TEST_CASE("sensitivity: an instance where only the top swap flips the winner") {
  // Brute-force search, with the oracle's integer arithmetic, for two
  // alternatives on 0..4 scores such that under 0>1>2 (weights 2/3,1/3,0,
  // i.e. 3U = 2s0 + s1) A wins, swapping the top pair makes B win, and
  // swapping the lower pair keeps A.
  auto three_u = [](const std::array<int, 3>& s, int w0, int w1, int w2) {
    return w0 * s[0] + w1 * s[1] + w2 * s[2];
  };
  std::optional<std::pair<std::array<int, 3>, std::array<int, 3>>> found;
  for (int code = 0; code < 15625 && !found; ++code) {
    int c = code;
    std::array<int, 3> a{}, b{};
    for (auto& v : a) { v = c % 5; c /= 5; }
    for (auto& v : b) { v = c % 5; c /= 5; }
    bool base = three_u(a, 2, 1, 0) > three_u(b, 2, 1, 0);
    bool top = three_u(a, 1, 2, 0) < three_u(b, 1, 2, 0);
    bool low = three_u(a, 2, 0, 1) > three_u(b, 2, 0, 1);
    if (base && top && low) found = std::make_pair(a, b);
  }
  REQUIRE(found);
  auto [a, b] = *found;
  auto t = table({"A", "B"}, {{a[0], a[1], a[2]}, {b[0], b[1], b[2]}});
  auto reports = sensitivity_adjacent_swap(relation_from_order({0, 1, 2}), t);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].winner_changed);
  CHECK(reports[0].upper == 0);
  CHECK(reports[0].lower == 1);
  CHECK(reports[0].winners_before == std::vector<std::size_t>{0});
  CHECK(reports[0].winners_after == std::vector<std::size_t>{1});
  CHECK_FALSE(reports[1].winner_changed);

  // A hand-built instance of the same shape.
  auto hand = sensitivity_adjacent_swap(relation_from_order({0, 1, 2}),
                                        table({"A", "B"}, {{9, 3, 0}, {3, 9, 0}}));
  CHECK(hand[0].winner_changed);
  CHECK_FALSE(hand[1].winner_changed);
  CHECK(hand[0].weights == std::vector<Rational>{Rational(1, 3), Rational(2, 3), Rational(0)});
}

TEST_CASE("property: utilities stay between score extremes and scale linearly") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> score(0, 10);
  for (int round = 0; round < 200; ++round) {
    std::size_t k = 2 + round % 7;
    std::size_t n = 1 + round % 4;
    auto order = oracle::random_order(k, rng);
    auto rel = relation_from_order(order);
    auto w = compute_weights(rel);
    std::vector<std::string> alts;
    std::vector<std::vector<Rational>> raw;
    for (std::size_t a = 0; a < n; ++a) {
      alts.push_back("alt" + std::to_string(a));
      std::vector<Rational> row;
      for (std::size_t i = 0; i < k; ++i) row.emplace_back(score(rng));
      raw.push_back(row);
    }
    auto r = evaluate(ScoreTable(alts, raw), w);
    for (std::size_t a = 0; a < n; ++a) {
      auto [lo, hi] = std::minmax_element(raw[a].begin(), raw[a].end());
      CHECK(*lo <= r.utilities[a]);
      CHECK(r.utilities[a] <= *hi);
    }

    // scale by c = 3/7 with the scale widened accordingly
    Rational c(3, 7);
    auto scaled = raw;
    for (auto& row : scaled)
      for (auto& s : row) s *= c;
    auto rs = evaluate(ScoreTable(alts, scaled), w);
    for (std::size_t a = 0; a < n; ++a) CHECK(rs.utilities[a] == r.utilities[a] * c);
    CHECK(rs.winners == r.winners);

    // the least important criterion has weight 0; its scores never matter
    Criterion last = order.back();
    auto changed = raw;
    for (auto& row : changed) row[last] = Rational(score(rng));
    auto rz = evaluate(ScoreTable(alts, changed), w);
    CHECK(rz.utilities == r.utilities);

    // every adjacent swap of the ranking is itself a valid total order
    for (std::size_t p = 0; p + 1 < k; ++p) {
      auto swapped = order;
      std::swap(swapped[p], swapped[p + 1]);
      auto srel = relation_from_order(swapped);
      CHECK(srel.check_invariants().empty());
      CHECK(srel.complete());
    }
    auto reports = sensitivity_adjacent_swap(rel, ScoreTable(alts, raw));
    CHECK(reports.size() == k - 1);
  }
}
