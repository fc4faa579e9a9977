#include "lvb/golden.hpp"

#include <algorithm>
#include <sstream>

#include "lvb_golden_data.hpp"

namespace lvb {

std::string_view golden_corpus_text() { return kGoldenCorpus; }

namespace {

MoveKind parse_kind(const std::string& s, std::size_t line) {
  if (s == "A") return MoveKind::A;
  if (s == "A^-1") return MoveKind::AInverse;
  if (s == "B") return MoveKind::B;
  if (s == "B^-1") return MoveKind::BInverse;
  if (s == "C") return MoveKind::C;
  throw ParseError("unknown move '" + s + "'", line);
}

TraceStep parse_move(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  std::string word;
  in >> word;  // "move"
  in >> word;
  TraceStep step;
  step.kind = parse_kind(word, line);
  std::string key;
  while (in >> key) {
    if (key == "rows") {
      std::size_t v;
      while (in >> v) step.rows.push_back(v - 1);
      in.clear();
    } else {
      std::size_t v;
      if (!(in >> v)) throw ParseError("missing value after '" + key + "'", line);
      if (key == "s") step.s = v;
      else if (key == "r") step.r = v;
      else if (key == "count") step.count = v;
      else throw ParseError("unknown move field '" + key + "'", line);
    }
  }
  return step;
}

std::string diff(const std::vector<Row>& expected, const std::vector<Row>& actual) {
  return "expected\n" + render_rows(expected) + "got\n" + render_rows(actual);
}

}  // namespace

std::vector<GoldenStep> parse_golden(std::string_view text) {
  std::vector<GoldenStep> steps;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  auto read_block = [&](std::size_t start) {
    std::string body;
    while (std::getline(in, line)) {
      ++number;
      if (line.empty()) break;
      body += line + '\n';
    }
    try {
      return parse_diagram(body);
    } catch (const ParseError& e) {
      throw ParseError(std::string("golden block: ") + e.what(), start);
    }
  };
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("step ", 0) == 0) {
      steps.emplace_back();
      steps.back().number = std::stoul(line.substr(5));
    } else if (steps.empty()) {
      throw ParseError("expected 'step N'", number);
    } else if (line.rfind("move ", 0) == 0) {
      steps.back().move = parse_move(line, number);
    } else if (line == "X") {
      steps.back().x = read_block(number);
    } else if (line == "EX") {
      steps.back().ex = read_block(number).rows();
    } else {
      throw ParseError("unexpected line '" + line + "'", number);
    }
  }
  return steps;
}

const std::vector<GoldenStep>& golden_steps() {
  static const std::vector<GoldenStep> steps = parse_golden(golden_corpus_text());
  return steps;
}

OrbitBundlePair vogan_pair() { return {{3, 3, 3, 2, 2}, {{3, {5, 0, -3}}, {2, {4, -6}}}}; }

std::vector<CheckResult> run_golden_checks(const CheckHooks& hooks) {
  std::vector<CheckResult> results;
  const auto& steps = golden_steps();

  for (const auto& step : steps) {
    CheckResult r{"etransform step " + std::to_string(step.number), false, {}};
    try {
      const auto got = hooks.transform(step.x);
      r.passed = got == step.ex;
      if (!r.passed) r.detail = diff(step.ex, got);
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }

  // Dispatch on steps 1-3 must pick the move that leads to the next step.
  for (std::size_t k = 0; k < 3 && k + 1 < steps.size(); ++k) {
    const auto& want = *steps[k + 1].move;
    CheckResult r{"dispatch step " + std::to_string(steps[k].number), false, {}};
    try {
      const auto d = dispatch(steps[k].x, hooks.dispatch);
      const auto& m = d.move;
      const bool rows_ok =
          m.kind == MoveKind::C
              ? m.rows == want.rows
              : std::all_of(m.rows.begin(), m.rows.end(), [&](std::size_t i) {
                  return std::find(want.rows.begin(), want.rows.end(), i) != want.rows.end();
                });
      r.passed = m.kind == want.kind && m.s == want.s && m.r == want.r && rows_ok;
      if (!r.passed)
        r.detail = "expected " + describe(want) + " got " +
                   describe({m.kind, m.s, m.r, m.rows, m.count, steps[k].x, {}});
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }

  CheckResult end{"gamma end to end", false, {}};
  CheckResult listing{"trace matches step listing", false, {}};
  try {
    DistinguishOptions options;
    options.dispatch = hooks.dispatch;
    const auto [weight, trace] = gamma(vogan_pair(), options);
    const auto& last = steps.back();
    DominantWeight want;
    for (const auto& row : last.ex) want.entries.insert(want.entries.end(), row.begin(), row.end());
    std::sort(want.entries.begin(), want.entries.end(), std::greater<>());
    end.passed = trace.final == last.x && weight == want;
    if (!end.passed)
      end.detail = diff(last.x.rows(), trace.final.rows()) + "weight " + render_weight(weight) +
                   " expected " + render_weight(want);

    const auto grouped = group_steps(trace);
    listing.passed = trace.initial == steps.front().x && grouped.size() + 1 == steps.size();
    for (std::size_t k = 0; listing.passed && k < grouped.size(); ++k) {
      const auto& g = grouped[k];
      const auto& s = steps[k + 1];
      const auto& m = *s.move;
      if (g.kind != m.kind || g.s != m.s || g.r != m.r || g.rows != m.rows || g.count != m.count ||
          g.x != s.x || g.ex != s.ex) {
        listing.passed = false;
        listing.detail = "step " + std::to_string(s.number) + ": expected " + describe(m) +
                         " got " + describe(g);
      }
    }
    if (!listing.passed && listing.detail.empty())
      listing.detail = "got " + std::to_string(grouped.size() + 1) + " steps";
  } catch (const std::exception& e) {
    end.detail = listing.detail = e.what();
  }
  results.push_back(std::move(end));
  results.push_back(std::move(listing));
  return results;
}

}  // namespace lvb
