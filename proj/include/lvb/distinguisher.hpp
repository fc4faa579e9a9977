#pragma once

#include <optional>
#include <utility>

#include "lvb/moves.hpp"

namespace lvb {

/// One trace entry. Identical consecutive dispatched moves are merged into a
/// single record whose move.count says how often it was applied.
struct MoveRecord {
  DispatchDecision decision;
  StatisticsVector before;
  StatisticsVector after;
  WeightDiagram x;        // state after the move
  std::vector<Row> ex;    // E-transform of that state
};

struct Trace {
  WeightDiagram initial;
  std::vector<MoveRecord> records;
  WeightDiagram final;
  DominantWeight weight;

  std::size_t elementary_moves() const;
};

struct DistinguishOptions {
  /// Elementary move cap; defaults to default_step_cap(x).
  std::optional<std::size_t> max_steps;
  DispatchOptions dispatch;
};

class NonterminationError : public Error {
 public:
  NonterminationError(const std::string& what, Trace partial)
      : Error(what), partial_(std::move(partial)) {}
  const Trace& partial() const noexcept { return partial_; }

 private:
  Trace partial_;
};

/// 10 * n * (1 + max |entry|).
std::size_t default_step_cap(const WeightDiagram& x);

/// Rows ordered by decreasing part, then decreasing weight; weight in column 1,
/// zeros elsewhere.
WeightDiagram canonical_seed(const OrbitBundlePair& pair);

/// Dispatches and applies moves until x is distinguished. Each elementary move
/// is checked for kappa preservation and well-behavedness (InvariantError).
Trace distinguish(const WeightDiagram& x, const DistinguishOptions& options = {});

std::pair<DominantWeight, Trace> gamma(const OrbitBundlePair& pair,
                                       const DistinguishOptions& options = {});

/// Reapplies the recorded moves to trace.initial.
WeightDiagram replay(const Trace& trace);

}  // namespace lvb
