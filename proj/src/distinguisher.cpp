#include "lvb/distinguisher.hpp"

#include <algorithm>

namespace lvb {

std::size_t Trace::elementary_moves() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.decision.move.count;
  return n;
}

std::size_t default_step_cap(const WeightDiagram& x) {
  Entry largest = 0;
  for (const auto& row : x.rows())
    for (Entry v : row) largest = std::max(largest, v < 0 ? checked_sub(0, v) : v);
  const auto n = static_cast<Entry>(x.box_count());
  return static_cast<std::size_t>(checked_mul(checked_mul(10, n), checked_add(1, largest)));
}

WeightDiagram canonical_seed(const OrbitBundlePair& pair) {
  validate(pair);
  std::vector<Row> rows;
  // bundle is keyed ascending; walk it backwards for decreasing parts.
  for (auto it = pair.bundle.rbegin(); it != pair.bundle.rend(); ++it) {
    for (Entry w : it->second) {
      Row row(it->first, 0);
      row[0] = w;
      rows.push_back(std::move(row));
    }
  }
  return WeightDiagram(std::move(rows));
}

Trace distinguish(const WeightDiagram& x, const DistinguishOptions& options) {
  const std::size_t cap = options.max_steps.value_or(default_step_cap(x));
  const auto kappa0 = kappa(x);
  Trace trace{x, {}, x, tau(x)};
  WeightDiagram current = x;
  StatisticsVector stats = statistics(current);
  std::size_t steps = 0;

  while (stats.r() <= current.max_row_length()) {
    if (steps == cap) {
      trace.final = current;
      trace.weight = tau(current);
      throw NonterminationError("step cap of " + std::to_string(cap) + " reached", trace);
    }
    const auto decision = dispatch(current, options.dispatch);
    WeightDiagram next = apply_move(current, decision.move);
    const auto after = statistics(next);
    if (kappa(next) != kappa0) throw InvariantError("move changed kappa");
    if (!verify_well_behaved(stats, after, decision.order))
      throw InvariantError(to_string(decision.move.kind) + " move was not well-behaved of order " +
                           std::to_string(decision.order));
    ++steps;

    auto ex = e_transform(next).rows();
    if (!trace.records.empty()) {
      auto& last = trace.records.back();
      MoveContext prev = last.decision.move;
      prev.count = 1;
      if (prev == decision.move && last.decision.row == decision.row) {
        ++last.decision.move.count;
        last.after = after;
        last.x = next;
        last.ex = std::move(ex);
        current = std::move(next);
        stats = after;
        continue;
      }
    }
    trace.records.push_back({decision, stats, after, next, std::move(ex)});
    current = std::move(next);
    stats = after;
  }
  trace.final = current;
  trace.weight = tau(current);
  return trace;
}

std::pair<DominantWeight, Trace> gamma(const OrbitBundlePair& pair,
                                       const DistinguishOptions& options) {
  auto trace = distinguish(canonical_seed(pair), options);
  auto weight = trace.weight;
  return {std::move(weight), std::move(trace)};
}

WeightDiagram replay(const Trace& trace) {
  WeightDiagram x = trace.initial;
  for (const auto& r : trace.records) x = apply_move(x, r.decision.move);
  return x;
}

}  // namespace lvb
