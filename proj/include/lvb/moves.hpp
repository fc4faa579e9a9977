#pragma once

#include <string>

#include "lvb/properties.hpp"

namespace lvb {

/// Applies ctx.count elementary moves, checking preconditions before each.
/// Throws PreconditionError naming the violated condition.
WeightDiagram apply_move(const WeightDiagram& x, const MoveContext& ctx);

/// Rows of the move table, in the order dispatch tries them.
enum class TableRow {
  TransferLowersNorm,  // A-type chain lowering q1
  TailRepair,          // B, B^-1 or C at a row with q~5 > 0
  TransferTieBreak,    // A-type chain keeping q1, lowering (q2, q3)
  FirstColumnSwap,     // C at r = 1 on an ascent in column 1
};

std::string to_string(TableRow row);

struct DispatchDecision {
  TableRow row = TableRow::TransferLowersNorm;
  MoveContext move;
  /// The move keeps q1..q_{order-1} and lowers the tail lexicographically.
  int order = 1;
};

struct DispatchOptions {
  /// Test-only switch; turning it off reproduces the r = 1 dispatch gap.
  bool first_column_swap = true;
};

/// Throws PreconditionError if x is distinguished and DispatchIncompleteError
/// if no row applies.
DispatchDecision dispatch(const WeightDiagram& x, const DispatchOptions& options = {});

bool verify_well_behaved(const StatisticsVector& before, const StatisticsVector& after,
                         int order);
bool verify_well_behaved(const WeightDiagram& x, const WeightDiagram& y, int order);

/// Checks the q~6 update law for C at r = 1 on rows i, i+1, tracking each
/// row through the swap. Requires X_{i,1} < X_{i+1,1} (DomainError otherwise).
bool q6_update_check(const WeightDiagram& x, std::size_t i);

}  // namespace lvb
