#include "lvb/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace lvb {

using nlohmann::json;

namespace {

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

Row parse_row(const Line& line) {
  Row row;
  std::size_t pos = 0;
  const auto& t = line.text;
  while (true) {
    const std::size_t end = std::min(t.find(' ', pos), t.size());
    if (end == pos)
      throw ParseError("expected an integer (entries are separated by single spaces)",
                       line.number, pos + 1);
    Entry v = 0;
    const auto [ptr, ec] = std::from_chars(t.data() + pos, t.data() + end, v);
    if (ec == std::errc::result_out_of_range)
      throw ParseError("integer out of range", line.number, pos + 1);
    if (ec != std::errc() || ptr != t.data() + end)
      throw ParseError("not an integer: '" + std::string(t.substr(pos, end - pos)) + "'",
                       line.number, pos + 1);
    row.push_back(v);
    if (end == t.size()) break;
    pos = end + 1;
  }
  return row;
}

}  // namespace

WeightDiagram parse_diagram(std::string_view text) {
  std::vector<Row> rows;
  for (const auto& line : split_lines(text)) {
    if (line.text.empty()) break;
    rows.push_back(parse_row(line));
  }
  if (rows.empty()) throw ParseError("empty diagram", 1, 1);
  return WeightDiagram(std::move(rows));
}

std::vector<WeightDiagram> parse_diagrams(std::string_view text) {
  std::vector<WeightDiagram> out;
  std::vector<Row> rows;
  auto flush = [&] {
    if (!rows.empty()) out.emplace_back(std::move(rows));
    rows.clear();
  };
  for (const auto& line : split_lines(text)) {
    if (line.text.empty()) {
      flush();
    } else if (line.text.front() == '#') {
      if (!rows.empty()) throw ParseError("comment inside a diagram", line.number, 1);
    } else {
      rows.push_back(parse_row(line));
    }
  }
  flush();
  return out;
}

std::string render_rows(const std::vector<Row>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_diagram(const WeightDiagram& x) { return render_rows(x.rows()); }

std::string render_diagram_inline(const WeightDiagram& x) { return to_json(x).dump(); }

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError("unknown field '" + key + "'");
}

std::vector<Entry> integer_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of integers");
  std::vector<Entry> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(what + " must be an array of integers");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      throw ParseError(what + " has an integer out of range");
    out.push_back(v.get<Entry>());
  }
  return out;
}

std::size_t parse_part(const std::string& key) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (ec != std::errc() || ptr != key.data() + key.size() || v == 0)
    throw ParseError("bundle key '" + key + "' is not a positive part size");
  return v;
}

}  // namespace

OrbitBundlePair parse_pair_json(std::string_view text) {
  const json j = parse_json(text);
  reject_unknown(j, {"orbit", "bundle"});
  if (!j.contains("orbit") || !j.contains("bundle"))
    throw ParseError("pair needs both 'orbit' and 'bundle'");
  OrbitBundlePair pair;
  for (Entry v : integer_list(j["orbit"], "orbit")) {
    if (v <= 0) throw DomainError("orbit parts must be positive");
    pair.orbit.push_back(static_cast<std::size_t>(v));
  }
  if (!j["bundle"].is_object()) throw ParseError("bundle must be an object");
  for (const auto& [key, value] : j["bundle"].items())
    pair.bundle[parse_part(key)] = integer_list(value, "bundle tuple");
  validate(pair);
  return pair;
}

json to_json(const OrbitBundlePair& pair) {
  json bundle = json::object();
  for (const auto& [part, tuple] : pair.bundle) bundle[std::to_string(part)] = tuple;
  return {{"orbit", pair.orbit}, {"bundle", bundle}};
}

DominantWeight parse_weight_json(std::string_view text) {
  const json j = parse_json(text);
  reject_unknown(j, {"weight"});
  if (!j.contains("weight")) throw ParseError("missing 'weight'");
  DominantWeight w{integer_list(j["weight"], "weight")};
  validate(w);
  return w;
}

json to_json(const DominantWeight& weight) { return {{"weight", weight.entries}}; }

json to_json(const WeightDiagram& x) { return x.rows(); }

json to_json(const StatisticsVector& q) {
  return json::array({q.q1, q.q2, q.q3, q.q4, q.q5, q.q6});
}

namespace {

json one_based(const std::vector<std::size_t>& rows) {
  json out = json::array();
  for (auto i : rows) out.push_back(i + 1);
  return out;
}

}  // namespace

json to_json(const Trace& trace) {
  json steps = json::array();
  for (const auto& rec : trace.records) {
    const auto& m = rec.decision.move;
    json step = {{"move", to_string(m.kind)},
                 {"table_row", to_string(rec.decision.row)},
                 {"order", rec.decision.order},
                 {"rows", one_based(m.rows)},
                 {"r", m.r},
                 {"count", m.count},
                 {"before", to_json(rec.before)},
                 {"after", to_json(rec.after)},
                 {"X", to_json(rec.x)},
                 {"EX", rec.ex}};
    if (m.kind == MoveKind::A || m.kind == MoveKind::AInverse) step["s"] = m.s;
    steps.push_back(std::move(step));
  }
  return {{"initial", to_json(trace.initial)},
          {"steps", std::move(steps)},
          {"final", to_json(trace.final)},
          {"weight", trace.weight.entries}};
}

std::vector<TraceStep> group_steps(const Trace& trace) {
  std::vector<TraceStep> steps;
  for (const auto& rec : trace.records) {
    const auto& m = rec.decision.move;
    const bool transfer = m.kind == MoveKind::A || m.kind == MoveKind::AInverse;
    std::vector<std::size_t> rows = m.rows;
    if (transfer) std::sort(rows.begin(), rows.end());
    if (!steps.empty()) {
      auto& last = steps.back();
      if (last.kind == m.kind && last.s == m.s && last.r == m.r && (transfer || last.rows == rows)) {
        std::set<std::size_t> merged(last.rows.begin(), last.rows.end());
        merged.insert(rows.begin(), rows.end());
        if (transfer) last.rows.assign(merged.begin(), merged.end());
        last.count += m.count;
        last.x = rec.x;
        last.ex = rec.ex;
        continue;
      }
    }
    steps.push_back({m.kind, m.s, m.r, rows, m.count, rec.x, rec.ex});
  }
  return steps;
}

namespace {

std::string times(std::size_t count) {
  static const char* words[] = {"", "", " twice", " three times", " four times", " five times",
                                " six times", " seven times", " eight times", " nine times",
                                " ten times"};
  if (count < std::size(words)) return words[count];
  return " " + std::to_string(count) + " times";
}

std::string row_list(const std::vector<std::size_t>& rows) {
  std::string out = rows.size() == 1 ? "row " : "rows ";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k) out += k + 1 == rows.size() ? " and " : ", ";
    out += std::to_string(rows[k] + 1);
  }
  return out;
}

std::vector<std::string> block(const std::vector<Row>& rows) {
  std::size_t width = 1;
  for (const auto& row : rows)
    for (Entry v : row) width = std::max(width, std::to_string(v).size());
  std::vector<std::string> out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto s = std::to_string(row[c]);
      if (c) line += ' ';
      line += std::string(width - s.size(), ' ') + s;
    }
    out.push_back(line);
  }
  return out;
}

std::string side_by_side(const WeightDiagram& x, const std::vector<Row>& ex) {
  auto left = block(x.rows());
  auto right = block(ex);
  left.insert(left.begin(), "X");
  right.insert(right.begin(), "E X");
  std::size_t width = 0;
  for (const auto& l : left) width = std::max(width, l.size());
  std::string out;
  for (std::size_t k = 0; k < left.size(); ++k) {
    out += left[k] + std::string(width - left[k].size() + 4, ' ') + right[k];
    out += '\n';
  }
  return out;
}

}  // namespace

std::string describe(const TraceStep& step) {
  const std::string name = to_string(step.kind);
  switch (step.kind) {
    case MoveKind::A:
    case MoveKind::AInverse:
      return "Perform " + name + times(step.count) + " with s = " + std::to_string(step.s) +
             ", r = " + std::to_string(step.r) + ", on " + row_list(step.rows) + ".";
    case MoveKind::B:
    case MoveKind::BInverse:
      return "Perform " + name + times(step.count) + " with r = " + std::to_string(step.r) +
             " on rows " + std::to_string(step.rows[0] + 1) + " and " +
             std::to_string(step.rows[1] + 1) + ".";
    case MoveKind::C:
      return "Perform C" + times(step.count) + " with r = " + std::to_string(step.r) +
             ", i = " + std::to_string(step.rows[0] + 1) +
             ", and i' = " + std::to_string(step.rows[1] + 1) + ".";
  }
  return {};
}

std::string render_trace(const Trace& trace) {
  std::ostringstream out;
  out << "Step 1. Initial diagram.\n"
      << side_by_side(trace.initial, e_transform(trace.initial).rows());
  std::size_t number = 2;
  for (const auto& step : group_steps(trace))
    out << "\nStep " << number++ << ". " << describe(step) << '\n' << side_by_side(step.x, step.ex);
  out << "\ntau = " << render_weight(trace.weight) << '\n';
  return out.str();
}

std::string render_weight(const DominantWeight& weight) {
  std::string out = "(";
  for (std::size_t k = 0; k < weight.entries.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(weight.entries[k]);
  }
  return out + ")";
}

}  // namespace lvb
