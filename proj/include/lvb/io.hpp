#pragma once

// Text and JSON formats. Everything user-facing is 1-based.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lvb/distinguisher.hpp"

namespace lvb {

/// One row per line, entries separated by single spaces, ended by a blank
/// line or end of input. Throws ParseError with the offending position.
WeightDiagram parse_diagram(std::string_view text);

/// Several diagrams separated by blank lines. Lines starting with '#' are
/// skipped between diagrams.
std::vector<WeightDiagram> parse_diagrams(std::string_view text);

/// Inverse of parse_diagram, newline-terminated, without the blank line.
std::string render_diagram(const WeightDiagram& x);
std::string render_rows(const std::vector<Row>& rows);

/// Compact one-line form, e.g. [[5,0,0],[4,0]].
std::string render_diagram_inline(const WeightDiagram& x);

/// {"orbit": [...], "bundle": {"<part>": [...]}}; validated, unknown fields
/// rejected.
OrbitBundlePair parse_pair_json(std::string_view text);
nlohmann::json to_json(const OrbitBundlePair& pair);

/// {"weight": [...]}; must be dominant.
DominantWeight parse_weight_json(std::string_view text);
nlohmann::json to_json(const DominantWeight& weight);

nlohmann::json to_json(const WeightDiagram& x);
nlohmann::json to_json(const StatisticsVector& q);
nlohmann::json to_json(const Trace& trace);

/// Consecutive records with the same move kind and columns, merged.
struct TraceStep {
  MoveKind kind = MoveKind::A;
  std::size_t s = 0;
  std::size_t r = 1;
  std::vector<std::size_t> rows;  // sorted, 0-based
  std::size_t count = 0;
  WeightDiagram x{{Row{0}}};
  std::vector<Row> ex;
};

std::vector<TraceStep> group_steps(const Trace& trace);

/// E.g. "Perform A four times with s = 1, r = 2, on rows 1 and 2."
std::string describe(const TraceStep& step);

/// Numbered steps: a description line, then X and E X side by side.
std::string render_trace(const Trace& trace);

std::string render_weight(const DominantWeight& weight);

}  // namespace lvb
