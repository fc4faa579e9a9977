#include "doctest.h"
#include "support.hpp"

using namespace lvb;
using lvb::test::step_x;

namespace {

MoveContext transfer(MoveKind kind, std::vector<std::size_t> rows, std::size_t s, std::size_t r,
                     std::size_t count = 1) {
  return {kind, std::move(rows), s, r, count};
}
MoveContext pair_move(MoveKind kind, std::size_t i, std::size_t ip, std::size_t r) {
  return {kind, {i, ip}, 0, r, 1};
}

}  // namespace

TEST_CASE("apply_move reproduces the golden single moves") {
  CHECK(apply_move(step_x(1), pair_move(MoveKind::C, 2, 3, 1)) == step_x(2));
  CHECK(apply_move(step_x(2), pair_move(MoveKind::C, 1, 2, 1)) == step_x(3));
  CHECK(apply_move(step_x(5), transfer(MoveKind::A, {0}, 1, 3)) == step_x(6));
  CHECK(apply_move(step_x(6), transfer(MoveKind::AInverse, {3}, 2, 3)) == step_x(7));
  CHECK(apply_move(step_x(7), pair_move(MoveKind::B, 0, 1, 3)) == step_x(8));
  CHECK(apply_move(step_x(8), transfer(MoveKind::A, {1}, 2, 3)) == step_x(9));
}

TEST_CASE("repeated transfers give the golden net effect") {
  auto x = step_x(3);
  for (std::size_t i : {0, 1, 0, 1}) x = apply_move(x, transfer(MoveKind::A, {i}, 1, 2));
  CHECK(x == step_x(4));
  for (std::size_t i : {4, 3, 4, 4, 3}) x = apply_move(x, transfer(MoveKind::AInverse, {i}, 1, 2));
  CHECK(x == step_x(5));
  CHECK(apply_move(WeightDiagram({{3, 0}}), transfer(MoveKind::A, {0}, 1, 2, 3)) ==
        WeightDiagram({{0, 3}}));
}

TEST_CASE("chains move every row of the chain") {
  const WeightDiagram x({{1, 0}, {5}, {1, 0}});
  CHECK(apply_move(x, transfer(MoveKind::A, {0, 2}, 1, 2)) == WeightDiagram({{0, 1}, {5}, {0, 1}}));
  CHECK_THROWS_AS(apply_move(WeightDiagram({{1, 0}, {1, 1}}), transfer(MoveKind::A, {0, 1}, 1, 2)),
                  PreconditionError);
}

TEST_CASE("involutions and inverses") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const auto x = test::random_diagram(rng, 10, -5, 5);
    for (std::size_t i = 0; i + 1 < x.row_count(); ++i) {
      const auto c = pair_move(MoveKind::C, i, i + 1, 1);
      CHECK(apply_move(apply_move(x, c), c) == x);
    }
    for (std::size_t i = 0; i < x.row_count(); ++i) {
      if (x.row_length(i) < 2) continue;
      const auto y = apply_move(x, transfer(MoveKind::A, {i}, 1, 2));
      CHECK(apply_move(y, transfer(MoveKind::AInverse, {i}, 1, 2)) == x);
    }
  }
  const auto y = apply_move(step_x(7), pair_move(MoveKind::B, 0, 1, 3));
  CHECK(apply_move(y, pair_move(MoveKind::BInverse, 1, 0, 3)) == step_x(7));
}

TEST_CASE("moves preserve kappa and shape") {
  std::mt19937_64 rng(23);
  int applied = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto x = test::random_diagram(rng, 10, -4, 4);
    std::uniform_int_distribution<std::size_t> row(0, x.row_count() - 1);
    const std::size_t i = row(rng), ip = row(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t s = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const MoveContext candidates[] = {
        transfer(MoveKind::A, {i}, s, r), transfer(MoveKind::AInverse, {i}, s, r),
        pair_move(MoveKind::B, i, ip, r), pair_move(MoveKind::BInverse, i, ip, r),
        pair_move(MoveKind::C, std::min(i, ip), std::max(i, ip), r)};
    for (const auto& ctx : candidates) {
      try {
        const auto y = apply_move(x, ctx);
        ++applied;
        CHECK(kappa(y) == kappa(x));
        if (ctx.kind == MoveKind::A || ctx.kind == MoveKind::AInverse)
          for (std::size_t k = 0; k < x.row_count(); ++k)
            CHECK(row_sum(y.rows()[k]) == row_sum(x.rows()[k]));
      } catch (const PreconditionError&) {
      }
    }
  }
  CHECK(applied > 2000);
}

TEST_CASE("precondition errors name the condition") {
  const auto& x = step_x(1);
  CHECK_THROWS_WITH_AS(apply_move(x, pair_move(MoveKind::C, 0, 2, 1)),
                       "row 3 is not the block successor of row 1", PreconditionError);
  CHECK_THROWS_WITH_AS(apply_move(x, transfer(MoveKind::A, {3}, 1, 3)), "row 4 is shorter than r",
                       PreconditionError);
  CHECK_THROWS_AS(apply_move(x, transfer(MoveKind::A, {0}, 2, 2)), PreconditionError);
  CHECK_THROWS_AS(apply_move(x, transfer(MoveKind::A, {0}, 1, 2, 0)), PreconditionError);
  CHECK_THROWS_AS(apply_move(x, pair_move(MoveKind::B, 0, 1, 3)), PreconditionError);
  CHECK_THROWS_AS(apply_move(x, pair_move(MoveKind::B, 0, 9, 3)), PreconditionError);
}

TEST_CASE("dispatch on golden steps") {
  const auto d1 = dispatch(step_x(1));
  CHECK(d1.row == TableRow::FirstColumnSwap);
  CHECK(d1.move == pair_move(MoveKind::C, 2, 3, 1));
  CHECK(d1.order == 4);
  const auto d2 = dispatch(step_x(2));
  CHECK(d2.row == TableRow::FirstColumnSwap);
  CHECK(d2.move == pair_move(MoveKind::C, 1, 2, 1));
  CHECK_THROWS_AS(dispatch(step_x(9)), PreconditionError);
}

TEST_CASE("disabling the first-column swap reproduces the gap") {
  DispatchOptions off;
  off.first_column_swap = false;
  CHECK_THROWS_AS(dispatch(step_x(1), off), DispatchIncompleteError);
  CHECK_THROWS_AS(dispatch(step_x(2), off), DispatchIncompleteError);
  CHECK_NOTHROW(dispatch(step_x(3), off));
}

TEST_CASE("verify_well_behaved") {
  CHECK(verify_well_behaved(step_x(1), step_x(2), 4));
  CHECK(verify_well_behaved(step_x(2), step_x(3), 4));
  CHECK_FALSE(verify_well_behaved(step_x(1), step_x(1), 1));
  CHECK_FALSE(verify_well_behaved(step_x(1), step_x(1), 6));
  CHECK(statistics(step_x(2)).q6 < statistics(step_x(1)).q6);
  CHECK(statistics(step_x(3)).q6 < statistics(step_x(2)).q6);
  // Order k requires q1..q(k-1) to be unchanged.
  const StatisticsVector a{10, 0, 0, 0, 0, 5}, b{9, 0, 0, 0, 0, 9};
  CHECK(verify_well_behaved(a, b, 1));
  CHECK_FALSE(verify_well_behaved(a, b, 4));
  CHECK_FALSE(verify_well_behaved(a, a, 3));
}

TEST_CASE("q6 update law for the first-column swap") {
  CHECK(q6_update_check(step_x(1), 2));
  CHECK(q6_update_check(step_x(2), 1));
  CHECK_THROWS_AS(q6_update_check(step_x(1), 0), DomainError);
  CHECK_THROWS_AS(q6_update_check(step_x(1), 4), DomainError);
}

TEST_CASE("dispatch is total and well-behaved on random states") {
  std::mt19937_64 rng(29);
  int dispatched = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto x = test::random_diagram(rng, 9, -5, 5);
    if (is_distinguished(x)) continue;
    DispatchDecision d;
    REQUIRE_NOTHROW(d = dispatch(x));
    const auto y = apply_move(x, d.move);
    CHECK(kappa(y) == kappa(x));
    CHECK(verify_well_behaved(x, y, d.order));
    if (d.row == TableRow::FirstColumnSwap) {
      const auto a = statistics(x), b = statistics(y);
      // Leaving level 1 means no inversions remain in column 1.
      Entry level1 = 0;
      for (std::size_t j = 0; j < y.row_count(); ++j) level1 += q_tilde_6(y, j, 1);
      const bool leaves_level = b.q4 < a.q4 && level1 == 0;
      const bool same_level = b.q4 == a.q4 && b.q5 == a.q5 && b.q6 < a.q6;
      CHECK((leaves_level || same_level));
    }
    ++dispatched;
  }
  CHECK(dispatched > 1000);
}
