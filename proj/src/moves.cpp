#include "lvb/moves.hpp"

#include <algorithm>
#include <set>

namespace lvb {

std::string to_string(TableRow row) {
  switch (row) {
    case TableRow::TransferLowersNorm: return "transfer-lowers-norm";
    case TableRow::TailRepair: return "tail-repair";
    case TableRow::TransferTieBreak: return "transfer-tie-break";
    case TableRow::FirstColumnSwap: return "first-column-swap";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw PreconditionError(what); }

std::string row_name(std::size_t i) { return "row " + std::to_string(i + 1); }

void check_transfer(const WeightDiagram& x, const MoveContext& ctx) {
  if (ctx.s == 0 || ctx.s >= ctx.r) fail("A-type move needs 1 <= s < r");
  if (ctx.rows.empty()) fail("A-type move needs at least one row");
  if (std::set<std::size_t>(ctx.rows.begin(), ctx.rows.end()).size() != ctx.rows.size())
    fail("A-type chain repeats a row");
  for (std::size_t i : ctx.rows) {
    if (i >= x.row_count()) fail(row_name(i) + " does not exist");
    if (x.row_length(i) < ctx.r) fail(row_name(i) + " is shorter than r");
  }
  const std::size_t first = ctx.rows.front();
  for (std::size_t i : ctx.rows) {
    if (x.at(i, ctx.s - 1) != x.at(first, ctx.s - 1) ||
        x.at(i, ctx.r - 1) != x.at(first, ctx.r - 1))
      fail("A-type chain rows must agree in columns s and r");
  }
}

void check_pair(const WeightDiagram& x, const MoveContext& ctx) {
  if (ctx.rows.size() != 2) fail(to_string(ctx.kind) + " needs exactly two rows");
  if (ctx.r == 0) fail("level r must be positive");
  for (std::size_t i : ctx.rows)
    if (i >= x.row_count()) fail(row_name(i) + " does not exist");
}

WeightDiagram swap_tails(const WeightDiagram& x, std::size_t a, std::size_t b, std::size_t r) {
  auto rows = x.rows();
  Row tail_a(rows[a].begin() + static_cast<std::ptrdiff_t>(r - 1), rows[a].end());
  Row tail_b(rows[b].begin() + static_cast<std::ptrdiff_t>(r - 1), rows[b].end());
  rows[a].resize(r - 1);
  rows[b].resize(r - 1);
  rows[a].insert(rows[a].end(), tail_b.begin(), tail_b.end());
  rows[b].insert(rows[b].end(), tail_a.begin(), tail_a.end());
  return WeightDiagram(std::move(rows));
}

WeightDiagram apply_once(const WeightDiagram& x, const MoveContext& ctx) {
  switch (ctx.kind) {
    case MoveKind::A:
    case MoveKind::AInverse: {
      check_transfer(x, ctx);
      const Entry sign = ctx.kind == MoveKind::A ? 1 : -1;
      auto rows = x.rows();
      for (std::size_t i : ctx.rows) {
        rows[i][ctx.s - 1] = checked_sub(rows[i][ctx.s - 1], sign);
        rows[i][ctx.r - 1] = checked_add(rows[i][ctx.r - 1], sign);
      }
      return WeightDiagram(std::move(rows));
    }
    case MoveKind::B:
    case MoveKind::BInverse: {
      check_pair(x, ctx);
      const std::size_t i = ctx.rows[0], ip = ctx.rows[1];
      if (ctx.r < 2) fail(to_string(ctx.kind) + " needs r >= 2");
      if (x.row_length(i) < ctx.r) fail(row_name(i) + " is shorter than r");
      if (x.row_length(ip) != ctx.r - 1) fail(row_name(ip) + " must have length r - 1");
      const auto neighbour = ctx.kind == MoveKind::B ? block_successor(x, i, ctx.r)
                                                     : block_predecessor(x, i, ctx.r);
      if (neighbour != ip)
        fail(row_name(ip) + " is not the block " +
             (ctx.kind == MoveKind::B ? "successor" : "predecessor") + " of " + row_name(i));
      return swap_tails(x, i, ip, ctx.r);
    }
    case MoveKind::C: {
      check_pair(x, ctx);
      const std::size_t i = ctx.rows[0], ip = ctx.rows[1];
      if (x.row_length(i) < ctx.r || x.row_length(ip) < ctx.r)
        fail("C needs both rows to reach column r");
      if (block_successor(x, i, ctx.r) != ip)
        fail(row_name(ip) + " is not the block successor of " + row_name(i));
      return swap_tails(x, i, ip, ctx.r);
    }
  }
  fail("unknown move kind");
}

}  // namespace

WeightDiagram apply_move(const WeightDiagram& x, const MoveContext& ctx) {
  if (ctx.count == 0) fail("move count must be positive");
  WeightDiagram y = x;
  for (std::size_t k = 0; k < ctx.count; ++k) y = apply_once(y, ctx);
  return y;
}

DispatchDecision dispatch(const WeightDiagram& x, const DispatchOptions& options) {
  const auto ex = e_transform(x);
  const std::size_t r = frontier(ex);
  if (r > x.max_row_length()) throw PreconditionError("dispatch called on a distinguished diagram");

  const auto transfer = find_transfer(ex, r);
  if (transfer && transfer->improvement == 0)
    return {TableRow::TransferLowersNorm, transfer->move, 1};

  if (!property(ex, PropertyKind::P3, r)) {
    for (std::size_t i = 0; i < x.row_count(); ++i) {
      if (x.row_length(i) < r || q_tilde_5(ex, i, r) == 0) continue;
      if (ex.at(i, r - 2) > ex.at(i, r - 1)) {
        if (auto ip = block_successor(x, i, r)) {
          if (x.row_length(*ip) == r - 1)
            return {TableRow::TailRepair, {MoveKind::B, {i, *ip}, 0, r, 1}, 4};
          if (x.at(i, r - 1) < x.at(*ip, r - 1))
            return {TableRow::TailRepair, {MoveKind::C, {i, *ip}, 0, r, 1}, 4};
        }
      } else if (auto ip = block_predecessor(x, i, r)) {
        if (x.row_length(*ip) == r - 1)
          return {TableRow::TailRepair, {MoveKind::BInverse, {i, *ip}, 0, r, 1}, 4};
        if (x.at(*ip, r - 1) < x.at(i, r - 1))
          return {TableRow::TailRepair, {MoveKind::C, {*ip, i}, 0, r, 1}, 4};
      }
    }
  }

  if (transfer) return {TableRow::TransferTieBreak, transfer->move, 1};

  if (r == 1 && options.first_column_swap) {
    for (std::size_t i = 0; i + 1 < x.row_count(); ++i)
      if (x.at(i, 0) < x.at(i + 1, 0))
        return {TableRow::FirstColumnSwap, {MoveKind::C, {i, i + 1}, 0, 1, 1}, 4};
  }
  throw DispatchIncompleteError("no move table row applies at level " + std::to_string(r));
}

bool verify_well_behaved(const StatisticsVector& before, const StatisticsVector& after,
                         int order) {
  if (order < 1 || order > 6) return false;
  const Entry b[6] = {before.q1, before.q2, before.q3, before.q4, before.q5, before.q6};
  const Entry a[6] = {after.q1, after.q2, after.q3, after.q4, after.q5, after.q6};
  for (int k = 0; k < order - 1; ++k)
    if (a[k] != b[k]) return false;
  for (int k = order - 1; k < 6; ++k) {
    if (a[k] < b[k]) return true;
    if (a[k] > b[k]) return false;
  }
  return false;
}

bool verify_well_behaved(const WeightDiagram& x, const WeightDiagram& y, int order) {
  return verify_well_behaved(statistics(x), statistics(y), order);
}

bool q6_update_check(const WeightDiagram& x, std::size_t i) {
  if (i + 1 >= x.row_count()) throw DomainError("row i has no successor");
  const Entry gap = x.at(i + 1, 0) - x.at(i, 0);
  if (gap <= 0) throw DomainError("q6 update needs an ascent X_{i,1} < X_{i+1,1}");
  const auto y = apply_move(x, {MoveKind::C, {i, i + 1}, 0, 1, 1});
  for (std::size_t j = 0; j < x.row_count(); ++j) {
    // Row j of x sits at position j of y unless it was one of the swapped pair.
    const std::size_t moved = j == i ? i + 1 : j == i + 1 ? i : j;
    const Entry expected = q_tilde_6(x, j, 1) - (moved == j ? 0 : gap);
    if (q_tilde_6(y, moved, 1) != expected) return false;
  }
  return true;
}

}  // namespace lvb
