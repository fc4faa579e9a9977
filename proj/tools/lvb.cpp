// lvb: command-line front end.
//
// Exit codes: 0 ok, 1 check failure, 2 input error, 3 budget exceeded,
// 4 internal invariant violated.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lvb/golden.hpp"
#include "lvb/io.hpp"
#include "lvb/oracle.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kBudget = 3, kInternal = 4 };

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lvb::ParseError("cannot open '" + path + "'");
  return read_stream(in);
}

// "-" or empty reads stdin; a leading '{' is inline JSON; anything else is a path.
std::string read_input(const std::string& arg, bool allow_inline_json) {
  if (arg.empty() || arg == "-") return read_stream(std::cin);
  if (allow_inline_json && arg.front() == '{') return arg;
  return read_file(arg);
}

lvb::EnumerationWindow parse_window(const std::string& text) {
  // n:min:max
  std::istringstream in(text);
  lvb::EnumerationWindow w;
  char c1 = 0, c2 = 0;
  if (!(in >> w.n >> c1 >> w.entry_min >> c2 >> w.entry_max) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof())
    throw lvb::ParseError("window must look like n:min:max, e.g. 3:-2:2");
  lvb::validate(w);
  return w;
}

struct Common {
  std::string input;
  bool json = false;
  bool trace = false;
  std::size_t max_steps = 0;  // 0 = default cap

  lvb::DistinguishOptions options() const {
    lvb::DistinguishOptions o;
    if (max_steps) o.max_steps = max_steps;
    return o;
  }
};

void print_trace_result(const lvb::Trace& t, const Common& c) {
  if (c.json) {
    nlohmann::json out = lvb::to_json(t.weight);
    out["final"] = lvb::to_json(t.final);
    if (c.trace) out["trace"] = lvb::to_json(t);
    std::cout << out.dump() << '\n';
  } else if (c.trace) {
    std::cout << lvb::render_trace(t);
  } else {
    std::cout << lvb::render_weight(t.weight) << '\n';
  }
}

int run_gamma_batch(const std::string& path, const std::string& log_path, const Common& c) {
  std::map<std::string, std::string> cache;
  if (!log_path.empty() && std::filesystem::exists(log_path)) {
    std::istringstream log(read_file(log_path));
    std::string line;
    while (std::getline(log, line)) {
      const auto tab = line.find('\t');
      if (tab != std::string::npos) cache[line.substr(0, tab)] = line.substr(tab + 1);
    }
  }
  std::ofstream log;
  if (!log_path.empty()) log.open(log_path, std::ios::app);

  std::istringstream in(read_input(path, false));
  std::string line;
  int status = kOk;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    try {
      const auto pair = lvb::parse_pair_json(line);
      const std::string key = lvb::to_json(pair).dump();
      auto hit = cache.find(key);
      if (hit == cache.end()) {
        const auto [weight, trace] = lvb::gamma(pair, c.options());
        const std::string value =
            c.json ? lvb::to_json(weight).dump() : lvb::render_weight(weight);
        hit = cache.emplace(key, value).first;
        if (log) log << key << '\t' << value << '\n';
      }
      std::cout << hit->second << '\n';
    } catch (const lvb::Error& e) {
      std::cout << "error: " << e.what() << '\n';
      status = kInputError;
    }
  }
  return status;
}

int run_check(bool disable_swap, bool perturb) {
  lvb::CheckHooks hooks;
  hooks.dispatch.first_column_swap = !disable_swap;
  if (perturb) {
    // Mutation hook: shifts every E-value by one.
    hooks.transform = [](const lvb::WeightDiagram& x) {
      auto rows = lvb::e_transform(x).rows();
      for (auto& row : rows)
        for (auto& v : row) ++v;
      return rows;
    };
  }
  bool ok = true;
  for (const auto& r : lvb::run_golden_checks(hooks)) {
    std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << '\n';
    if (!r.passed) {
      ok = false;
      std::cout << r.detail << (r.detail.empty() || r.detail.back() == '\n' ? "" : "\n");
    }
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lusztig-Vogan bijection for GL(n) via weight diagrams"};
  app.require_subcommand(1);

  Common c;
  std::string batch, log_path, window = "2:-1:1";
  bool disable_swap = false, perturb = false;

  auto add_io = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", c.input, what + " (file, '-' for stdin)");
    sub->add_flag("--json", c.json, "structured output");
  };

  auto* gamma = app.add_subcommand("gamma", "dominant weight of an orbit/bundle pair");
  add_io(gamma, "pair JSON, inline or file");
  gamma->add_flag("--trace", c.trace, "print the move sequence");
  gamma->add_option("--max-steps", c.max_steps, "elementary move cap");
  gamma->add_option("--batch", batch, "file with one pair JSON per line");
  gamma->add_option("--log", log_path, "append-only results log used as a cache in batch mode");

  auto* tau = app.add_subcommand("tau", "tau of a weight diagram");
  add_io(tau, "diagram text");
  auto* kappa = app.add_subcommand("kappa", "orbit/bundle pair of a weight diagram");
  add_io(kappa, "diagram text");
  auto* etr = app.add_subcommand("etransform", "E-transform of a weight diagram");
  add_io(etr, "diagram text");

  auto* dist = app.add_subcommand("distinguish", "make a weight diagram distinguished");
  add_io(dist, "diagram text");
  dist->add_flag("--trace", c.trace, "print the move sequence");
  dist->add_option("--max-steps", c.max_steps, "elementary move cap");

  auto* check = app.add_subcommand("check", "run the embedded golden suite");
  check->add_flag("--disable-first-column-swap", disable_swap,
                  "diagnostic: dispatch without the r = 1 swap row");
  check->add_flag("--perturb-etransform", perturb, "diagnostic: shift every E-value by one");

  auto* audit = app.add_subcommand("audit", "exhaustive bijection audit over a window");
  audit->add_option("--window", window, "n:min:max (budget via LVB_ENUM_BUDGET)");
  audit->add_flag("--json", c.json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gamma) {
      if (!batch.empty()) return run_gamma_batch(batch, log_path, c);
      const auto pair = lvb::parse_pair_json(read_input(c.input, true));
      const auto [weight, trace] = lvb::gamma(pair, c.options());
      print_trace_result(trace, c);
    } else if (*tau || *kappa || *etr || *dist) {
      const auto x = lvb::parse_diagram(read_input(c.input, false));
      if (*tau) {
        const auto w = lvb::tau(x);
        std::cout << (c.json ? lvb::to_json(w).dump() : lvb::render_weight(w)) << '\n';
      } else if (*kappa) {
        std::cout << lvb::to_json(lvb::kappa(x)).dump() << '\n';
      } else if (*etr) {
        const auto ex = lvb::e_transform(x);
        if (c.json)
          std::cout << nlohmann::json(ex.rows()).dump() << '\n';
        else
          std::cout << lvb::render_rows(ex.rows());
      } else {
        print_trace_result(lvb::distinguish(x, c.options()), c);
      }
    } else if (*check) {
      return run_check(disable_swap, perturb);
    } else if (*audit) {
      const auto report = lvb::audit_bijection(parse_window(window));
      if (c.json) {
        nlohmann::json out = {{"n", report.window.n},
                              {"entry_min", report.window.entry_min},
                              {"entry_max", report.window.entry_max},
                              {"diagrams", report.diagrams},
                              {"distinguished", report.distinguished},
                              {"boundary_exits", report.boundary_exits},
                              {"violations", report.violations}};
        std::cout << out.dump() << '\n';
      } else {
        std::cout << report.diagrams << " diagrams, " << report.distinguished
                  << " distinguished, " << report.boundary_exits << " boundary exits\n";
        for (const auto& v : report.violations) std::cout << "violation: " << v << '\n';
        std::cout << report.violations.size() << " violations\n";
      }
      return report.ok() ? kOk : kCheckFailed;
    }
  } catch (const lvb::NonterminationError& e) {
    std::cerr << "error: " << e.what() << " after " << e.partial().elementary_moves()
              << " moves\n";
    return kBudget;
  } catch (const lvb::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const lvb::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const lvb::DispatchIncompleteError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const lvb::BijectivityError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const lvb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
