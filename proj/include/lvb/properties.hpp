#pragma once

// Property predicates and termination statistics.
//
// Row indices are 0-based. Levels and columns in this header are 1-based, so
// that level r refers to column r and level 0 is the vacuous level.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lvb/diagram.hpp"

namespace lvb {

enum class PropertyKind { P1, P2, P3, P4 };

enum class MoveKind { A, AInverse, B, BInverse, C };

std::string to_string(PropertyKind kind);
std::string to_string(MoveKind kind);

/// One move. A-type moves act on `rows` (a chain sharing the pair
/// (X_s, X_r)) between columns s < r. B/C moves act on rows = {i, i'} at
/// level r and leave s = 0. `count` repeats the elementary move.
struct MoveContext {
  MoveKind kind = MoveKind::A;
  std::vector<std::size_t> rows;
  std::size_t s = 0;
  std::size_t r = 1;
  std::size_t count = 1;

  friend bool operator==(const MoveContext&, const MoveContext&) = default;
};

struct StatisticsVector {
  Entry q1 = 0, q2 = 0, q3 = 0, q4 = 0, q5 = 0, q6 = 0;

  /// Level the tail statistics are evaluated at.
  std::size_t r() const { return static_cast<std::size_t>(-q4) + 1; }

  friend bool operator==(const StatisticsVector&, const StatisticsVector&) = default;
  friend auto operator<=>(const StatisticsVector&, const StatisticsVector&) = default;
};

/// Uppercase property at level r: the row property holds for every row.
bool property(const ETransformedDiagram& ex, PropertyKind kind, std::size_t r);

/// Lowercase property of row i at level r. Rows shorter than r satisfy it.
bool row_property(const ETransformedDiagram& ex, PropertyKind kind, std::size_t i,
                  std::size_t r);

/// Zigzag defect of row i between columns r-1 and r. Zero at r = 1.
/// Throws DomainError if the entry is missing.
Entry q_tilde_5(const ETransformedDiagram& ex, std::size_t i, std::size_t r);

/// Weighted inversion count of row j inside its level-r block. Zero for rows
/// shorter than r.
Entry q_tilde_6(const WeightDiagram& x, std::size_t j, std::size_t r);

/// Number of columns s < r at which an improving A-type chain uses row i.
Entry q_tilde_3(const ETransformedDiagram& ex, std::size_t i, std::size_t r);

/// First level at which some property fails; longest row + 1 if none does.
std::size_t frontier(const ETransformedDiagram& ex);

StatisticsVector statistics(const WeightDiagram& x);
StatisticsVector statistics(const ETransformedDiagram& ex);

bool is_distinguished(const WeightDiagram& x);

/// Level-r blocks: consecutive rows of length >= r-1 that agree in their
/// first r-1 entries. Returns the next (or previous) member of i's block.
std::optional<std::size_t> block_successor(const WeightDiagram& x, std::size_t i,
                                           std::size_t r);
std::optional<std::size_t> block_predecessor(const WeightDiagram& x, std::size_t i,
                                             std::size_t r);

/// Lowering (raising) X_{ic} by one keeps the rank order of column c.
/// Column c is 1-based.
bool lowerable(const WeightDiagram& x, std::size_t i, std::size_t c);
bool raisable(const WeightDiagram& x, std::size_t i, std::size_t c);

/// An improving A-type chain at level r.
/// improvement: 0 lowers q1; 1 keeps q1, lowers q2; 2 keeps q1, q2, lowers q3.
struct Transfer {
  MoveContext move;
  int improvement = 0;
  Entry dq1 = 0, dq2 = 0, dq3 = 0;
};

/// Scans chains at level r (s ascending, value classes in order of first
/// row, chain length ascending, A before A^-1) and returns the first one of
/// the best improvement class.
std::optional<Transfer> find_transfer(const ETransformedDiagram& ex, std::size_t r);

/// Every improving chain at level r, in scan order.
std::vector<Transfer> improving_transfers(const ETransformedDiagram& ex, std::size_t r);

}  // namespace lvb
