#pragma once

// The embedded nine-step worked example and the check suite built on it.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lvb/io.hpp"

namespace lvb {

struct GoldenStep {
  std::size_t number = 0;
  std::optional<TraceStep> move;  // move leading into this step (x/ex unused)
  WeightDiagram x{{Row{0}}};
  std::vector<Row> ex;
};

/// Raw text of data/vogan_steps.txt, compiled in.
std::string_view golden_corpus_text();

/// Parses the corpus format. Throws ParseError.
std::vector<GoldenStep> parse_golden(std::string_view text);

const std::vector<GoldenStep>& golden_steps();

/// ([3,3,3,2,2]; {3: (5,0,-3), 2: (4,-6)}).
OrbitBundlePair vogan_pair();

struct CheckHooks {
  std::function<std::vector<Row>(const WeightDiagram&)> transform =
      [](const WeightDiagram& x) { return e_transform(x).rows(); };
  DispatchOptions dispatch;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // diff on failure
};

/// E X conformance for all steps, dispatch on steps 1-3, and gamma end to end.
std::vector<CheckResult> run_golden_checks(const CheckHooks& hooks = {});

}  // namespace lvb
