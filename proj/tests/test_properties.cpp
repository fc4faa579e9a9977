#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace lvb;
using lvb::test::step_x;

namespace {
ETransformedDiagram ex_of(std::size_t k) { return e_transform(step_x(k)); }
}  // namespace

TEST_CASE("q~5 is zero at r = 1") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const auto ex = e_transform(test::random_diagram(rng, 12, -9, 9));
    for (std::size_t i = 0; i < ex.rows().size(); ++i) CHECK(q_tilde_5(ex, i, 1) == 0);
  }
}

TEST_CASE("q~5 on golden values") {
  // 1-based (2, 3) and (1, 2).
  CHECK(q_tilde_5(ex_of(8), 1, 3) == 1);
  CHECK(q_tilde_5(ex_of(1), 0, 2) == 4);
  CHECK_THROWS_AS(q_tilde_5(ex_of(1), 3, 3), DomainError);
  CHECK_THROWS_AS(q_tilde_5(ex_of(1), 0, 0), DomainError);
}

TEST_CASE("conventions at levels 0 and 1") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10000; ++t) {
    const auto ex = e_transform(test::random_diagram(rng, 8, -5, 5));
    for (auto kind : {PropertyKind::P1, PropertyKind::P2, PropertyKind::P3, PropertyKind::P4})
      CHECK(property(ex, kind, 0));
    CHECK(property(ex, PropertyKind::P1, 1));
    CHECK(property(ex, PropertyKind::P2, 1));
    CHECK(property(ex, PropertyKind::P3, 1));
  }
}

TEST_CASE("P4(1) is column-1 monotonicity") {
  CHECK_FALSE(property(ex_of(1), PropertyKind::P4, 1));
  CHECK_FALSE(row_property(ex_of(1), PropertyKind::P4, 2, 1));
  CHECK(row_property(ex_of(1), PropertyKind::P4, 0, 1));
  CHECK(property(ex_of(3), PropertyKind::P4, 1));
}

TEST_CASE("uppercase property is the conjunction of row properties") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 500; ++t) {
    const auto ex = e_transform(test::random_diagram(rng, 9, -4, 4));
    for (std::size_t r = 1; r <= ex.source().max_row_length(); ++r) {
      for (auto kind : {PropertyKind::P1, PropertyKind::P2, PropertyKind::P3, PropertyKind::P4}) {
        bool all = true;
        for (std::size_t i = 0; i < ex.rows().size(); ++i)
          all = all && row_property(ex, kind, i, r);
        CHECK(all == property(ex, kind, r));
      }
    }
  }
}

TEST_CASE("is_distinguished along the golden run") {
  for (std::size_t k = 1; k <= 8; ++k) {
    CAPTURE(k);
    CHECK_FALSE(is_distinguished(step_x(k)));
  }
  CHECK(is_distinguished(step_x(9)));
  CHECK(is_distinguished(WeightDiagram({{4}})));
}

TEST_CASE("statistics on golden steps") {
  const auto s1 = statistics(step_x(1));
  CHECK(s1 == StatisticsVector{290, 0, 0, 0, 0, 22});
  CHECK(s1.r() == 1);
  CHECK(statistics(step_x(2)).q6 == 8);
  const auto s9 = statistics(step_x(9));
  CHECK(s9 == StatisticsVector{238, -1, -1, -3, 0, 0});
  CHECK(s9.r() == 4);
  CHECK(frontier(ex_of(9)) == 4);
}

TEST_CASE("single row has no q6 contribution at r = 1") {
  CHECK(q_tilde_6(WeightDiagram({{3, -2, 5}}), 0, 1) == 0);
  CHECK(statistics(WeightDiagram({{3, -2, 5}})).q6 == 0);
}

TEST_CASE("q~6 counts weighted inversions inside a block") {
  const auto& x = step_x(1);  // column 1: 5 0 -3 4 -6
  CHECK(q_tilde_6(x, 2, 1) == 7);
  CHECK(q_tilde_6(x, 3, 1) == 11);
  CHECK(q_tilde_6(x, 0, 1) == 0);
  Entry total = 0;
  for (std::size_t j = 0; j < x.row_count(); ++j) total += q_tilde_6(x, j, 1);
  CHECK(total == 22);
}

TEST_CASE("q1..q3 depend only on column multisets") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const auto x = test::random_diagram(rng, 10, -5, 5);
    auto rows = x.rows();
    std::shuffle(rows.begin(), rows.end(), rng);
    const auto a = statistics(x), b = statistics(WeightDiagram(rows));
    CHECK(a.q1 == b.q1);
    CHECK(a.q2 == b.q2);
    CHECK(a.q3 == b.q3);
  }
}

TEST_CASE("transfer deltas match recomputed statistics") {
  std::mt19937_64 rng(17);
  int seen = 0;
  for (int t = 0; t < 400; ++t) {
    const auto x = test::random_diagram(rng, 10, -5, 5);
    const auto ex = e_transform(x);
    for (std::size_t r = 2; r <= x.max_row_length(); ++r) {
      for (const auto& tr : improving_transfers(ex, r)) {
        ++seen;
        auto rows = x.rows();
        const Entry sign = tr.move.kind == MoveKind::A ? 1 : -1;
        for (auto i : tr.move.rows) {
          rows[i][tr.move.s - 1] -= sign;
          rows[i][tr.move.r - 1] += sign;
        }
        const auto before = statistics(ex), after = statistics(WeightDiagram(rows));
        CHECK(after.q1 - before.q1 == tr.dq1);
        CHECK(after.q2 - before.q2 == tr.dq2);
        CHECK(after.q3 - before.q3 == tr.dq3);
      }
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("find_transfer prefers the q1 class") {
  // Golden step 3 -> 4 starts with an A at s = 1, r = 2 on row 1.
  const auto t = find_transfer(ex_of(3), 2);
  REQUIRE(t);
  CHECK(t->improvement == 0);
  CHECK(t->move.kind == MoveKind::A);
  CHECK(t->move.rows == std::vector<std::size_t>{0});
  CHECK_FALSE(find_transfer(ex_of(9), 2));
  CHECK_FALSE(find_transfer(ex_of(9), 3));
}

TEST_CASE("q~3 counts columns with an improving transfer through the row") {
  CHECK(q_tilde_3(ex_of(3), 0, 2) == 1);
  CHECK(q_tilde_3(ex_of(9), 1, 3) == 0);
  CHECK(q_tilde_3(ex_of(3), 0, 1) == 0);
}

TEST_CASE("blocks") {
  const auto& x = step_x(7);  // rows 1 and 2 agree in the first two entries
  CHECK(block_successor(x, 0, 3) == std::optional<std::size_t>{1});
  CHECK(block_predecessor(x, 1, 3) == std::optional<std::size_t>{0});
  CHECK_FALSE(block_successor(x, 1, 3));
  CHECK(block_successor(x, 2, 1) == std::optional<std::size_t>{3});
}

TEST_CASE("lowerable and raisable") {
  const WeightDiagram x({{2}, {2}, {1}});
  CHECK_FALSE(lowerable(x, 0, 1));  // row 2 below holds the same value
  CHECK(lowerable(x, 1, 1));
  CHECK(raisable(x, 0, 1));
  CHECK_FALSE(raisable(x, 1, 1));
  CHECK(raisable(x, 2, 1));
  CHECK_THROWS_AS(lowerable(x, 0, 2), DomainError);
}
