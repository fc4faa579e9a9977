#pragma once

#include <random>

#include "lvb/golden.hpp"

namespace lvb::test {

inline const WeightDiagram& step_x(std::size_t k) { return golden_steps().at(k - 1).x; }
inline const std::vector<Row>& step_ex(std::size_t k) { return golden_steps().at(k - 1).ex; }

// Random diagram with at most max_boxes boxes and entries in [lo, hi].
inline WeightDiagram random_diagram(std::mt19937_64& rng, std::size_t max_boxes, Entry lo,
                                    Entry hi) {
  std::uniform_int_distribution<std::size_t> total(1, max_boxes);
  std::uniform_int_distribution<Entry> entry(lo, hi);
  std::size_t left = total(rng);
  std::vector<Row> rows;
  while (left > 0) {
    std::uniform_int_distribution<std::size_t> len(1, std::min<std::size_t>(left, 4));
    Row row(len(rng));
    for (auto& v : row) v = entry(rng);
    left -= row.size();
    rows.push_back(std::move(row));
  }
  return WeightDiagram(std::move(rows));
}

}  // namespace lvb::test
