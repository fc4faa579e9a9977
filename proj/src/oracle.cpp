#include "lvb/oracle.hpp"

#include <cstdlib>
#include <limits>
#include <map>

#include "lvb/distinguisher.hpp"
#include "lvb/io.hpp"

namespace lvb {

bool EnumerationWindow::contains(const WeightDiagram& x) const {
  for (const auto& row : x.rows())
    for (Entry v : row)
      if (v < entry_min || v > entry_max) return false;
  return true;
}

void validate(const EnumerationWindow& w) {
  if (w.n == 0) throw DomainError("window needs n >= 1");
  if (w.entry_min > w.entry_max) throw DomainError("window has entry_min > entry_max");
}

std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("LVB_ENUM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

std::uint64_t count_diagrams(const EnumerationWindow& w) {
  validate(w);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const auto width = static_cast<std::uint64_t>(w.entry_max - w.entry_min) + 1;
  std::uint64_t total = 1;
  auto times = [&](std::uint64_t f) {
    total = (total != 0 && f > kMax / total) ? kMax : total * f;
  };
  for (std::size_t k = 1; k < w.n; ++k) times(2);
  for (std::size_t k = 0; k < w.n; ++k) times(width);
  return total;
}

namespace {

struct Enumerator {
  const EnumerationWindow& w;
  const std::function<bool(const WeightDiagram&)>& visit;
  std::vector<Row> rows;
  bool stopped = false;

  void rows_from(std::size_t remaining) {
    if (remaining == 0) {
      if (!visit(WeightDiagram(rows))) stopped = true;
      return;
    }
    for (std::size_t len = 1; len <= remaining && !stopped; ++len) {
      rows.emplace_back(len, w.entry_min);
      fill(0, remaining - len);
      rows.pop_back();
    }
  }

  void fill(std::size_t c, std::size_t remaining) {
    Row& row = rows.back();
    if (c == row.size()) {
      rows_from(remaining);
      return;
    }
    for (Entry v = w.entry_min; v <= w.entry_max && !stopped; ++v) {
      rows.back()[c] = v;
      fill(c + 1, remaining);
    }
  }
};

}  // namespace

void for_each_diagram(const EnumerationWindow& w,
                      const std::function<bool(const WeightDiagram&)>& visit,
                      std::uint64_t budget) {
  const auto count = count_diagrams(w);
  if (count > budget)
    throw BudgetError("window has " + std::to_string(count) + " diagrams, budget is " +
                      std::to_string(budget));
  Enumerator e{w, visit, {}};
  e.rows_from(w.n);
}

EnumerationWindow window_around(const DominantWeight& lambda) {
  validate(lambda);
  const auto n = static_cast<Entry>(lambda.entries.size());
  return {lambda.entries.size(), checked_sub(lambda.entries.back(), n),
          checked_add(lambda.entries.front(), n)};
}

namespace {

struct Inverter {
  const EnumerationWindow& w;
  std::map<Entry, std::size_t> available;
  std::size_t left;
  std::vector<Row> rows;
  std::vector<WeightDiagram> found;

  bool take(Entry v) {
    auto it = available.find(v);
    if (it == available.end() || it->second == 0) return false;
    --it->second;
    --left;
    return true;
  }
  void give(Entry v) {
    ++available[v];
    ++left;
  }

  void rows_from(std::optional<Entry> head_bound) {
    if (left == 0) {
      std::optional<WeightDiagram> x;
      try {
        x = recover_from_e(rows);
      } catch (const DomainError&) {
        return;
      }
      if (w.contains(*x) && is_distinguished(*x)) found.push_back(std::move(*x));
      return;
    }
    std::vector<Entry> heads;
    for (auto it = available.rbegin(); it != available.rend(); ++it)
      if (it->second > 0 && (!head_bound || it->first < *head_bound)) heads.push_back(it->first);
    for (Entry h : heads) {
      take(h);
      rows.push_back({h});
      extend(h);
      rows.pop_back();
      give(h);
    }
  }

  // Either close the current row or continue it along the zigzag.
  void extend(Entry head) {
    rows_from(head);
    Row& row = rows.back();
    const std::size_t c = row.size() + 1;
    const Entry last = row.back();
    const Entry options[2] = {c % 2 == 0 ? last - 1 : last, c % 2 == 0 ? last : last + 1};
    for (Entry v : options) {
      if (!take(v)) continue;
      rows.back().push_back(v);
      extend(head);
      rows.back().pop_back();
      give(v);
    }
  }
};

}  // namespace

std::optional<WeightDiagram> invert_tau_bruteforce(const DominantWeight& lambda,
                                                   const EnumerationWindow& w) {
  validate(lambda);
  validate(w);
  if (lambda.entries.size() != w.n) throw DomainError("window size must equal the weight length");
  Inverter inv{w, {}, lambda.entries.size(), {}, {}};
  for (Entry v : lambda.entries) ++inv.available[v];
  inv.rows_from(std::nullopt);
  if (inv.found.empty()) return std::nullopt;
  if (inv.found.size() > 1)
    throw BijectivityError("weight has distinguished preimages " + render_diagram_inline(inv.found[0]) +
                           " and " + render_diagram_inline(inv.found[1]));
  return inv.found.front();
}

AuditReport audit_bijection(const EnumerationWindow& w, std::uint64_t budget) {
  AuditReport report{w, 0, 0, 0, {}};
  std::map<DominantWeight, WeightDiagram> by_tau;
  std::map<OrbitBundlePair, WeightDiagram> by_kappa;
  std::map<OrbitBundlePair, WeightDiagram> endpoint_of;

  for_each_diagram(
      w,
      [&](const WeightDiagram& x) {
        ++report.diagrams;
        const auto k = kappa(x);
        const auto label = render_diagram_inline(x);
        if (is_distinguished(x)) {
          ++report.distinguished;
          const auto t = tau(x);
          if (auto [it, fresh] = by_tau.try_emplace(t, x); !fresh)
            report.violations.push_back("tau not injective: " + render_diagram_inline(it->second) +
                                        " and " + label);
          if (auto [it, fresh] = by_kappa.try_emplace(k, x); !fresh)
            report.violations.push_back("kappa not injective: " +
                                        render_diagram_inline(it->second) + " and " + label);
        }
        try {
          const auto trace = distinguish(x);
          const auto& z = trace.final;
          if (kappa(z) != k) report.violations.push_back("kappa changed from " + label);
          if (tau(e_transform(z)) != trace.weight)
            report.violations.push_back("tau mismatch at endpoint of " + label);
          if (!w.contains(z)) {
            ++report.boundary_exits;
            return true;
          }
          if (auto [it, fresh] = endpoint_of.try_emplace(k, z); !fresh && it->second != z)
            report.violations.push_back("two endpoints in one kappa fiber: " +
                                        render_diagram_inline(it->second) + " and " +
                                        render_diagram_inline(z));
        } catch (const Error& e) {
          report.violations.push_back(label + ": " + e.what());
        }
        return true;
      },
      budget);

  for (const auto& [k, z] : endpoint_of) {
    auto it = by_kappa.find(k);
    if (it == by_kappa.end() || it->second != z)
      report.violations.push_back("endpoint " + render_diagram_inline(z) +
                                  " is not the distinguished diagram of its fiber");
  }
  return report;
}

}  // namespace lvb
