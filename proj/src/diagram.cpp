#include "lvb/diagram.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace lvb {

WeightDiagram::WeightDiagram(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw DomainError("weight diagram must have at least one row");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw DomainError("row " + std::to_string(i + 1) + " is empty");
  }
}

std::size_t WeightDiagram::box_count() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::size_t WeightDiagram::max_row_length() const noexcept {
  std::size_t m = 0;
  for (const auto& r : rows_) m = std::max(m, r.size());
  return m;
}

Entry row_sum(std::span<const Entry> row) {
  Entry s = 0;
  for (Entry v : row) s = checked_add(s, v);
  return s;
}

void validate(const OrbitBundlePair& pair) {
  if (pair.orbit.empty()) throw DomainError("orbit must be a nonempty partition");
  if (!std::is_sorted(pair.orbit.begin(), pair.orbit.end(), std::greater<>()))
    throw DomainError("orbit parts must be weakly decreasing");
  std::map<std::size_t, std::size_t> multiplicity;
  for (std::size_t part : pair.orbit) {
    if (part == 0) throw DomainError("orbit parts must be positive");
    ++multiplicity[part];
  }
  for (const auto& [part, tuple] : pair.bundle) {
    if (!multiplicity.contains(part))
      throw DomainError("bundle has a tuple for part " + std::to_string(part) +
                        " which is not in the orbit");
  }
  for (const auto& [part, mult] : multiplicity) {
    auto it = pair.bundle.find(part);
    if (it == pair.bundle.end())
      throw DomainError("bundle is missing the tuple for part " + std::to_string(part));
    if (it->second.size() != mult)
      throw DomainError("bundle tuple length must match part multiplicity");
    if (!std::is_sorted(it->second.begin(), it->second.end(), std::greater<>()))
      throw DomainError("bundle tuple for part " + std::to_string(part) +
                        " must be weakly decreasing");
  }
}

void validate(const DominantWeight& weight) {
  if (weight.entries.empty()) throw DomainError("dominant weight must be nonempty");
  if (!std::is_sorted(weight.entries.begin(), weight.entries.end(), std::greater<>()))
    throw DomainError("dominant weight must be weakly decreasing");
}

std::vector<std::size_t> shape(const WeightDiagram& x) {
  std::vector<std::size_t> out;
  out.reserve(x.row_count());
  for (const auto& r : x.rows()) out.push_back(r.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

OrbitBundlePair kappa(const WeightDiagram& x) {
  OrbitBundlePair pair;
  pair.orbit = shape(x);
  for (const auto& r : x.rows()) pair.bundle[r.size()].push_back(row_sum(r));
  for (auto& [part, tuple] : pair.bundle) std::sort(tuple.begin(), tuple.end(), std::greater<>());
  return pair;
}

ETransformedDiagram e_transform(const WeightDiagram& x) {
  const auto& rows = x.rows();
  std::vector<Row> e = rows;
  const std::size_t width = x.max_row_length();
  std::vector<std::vector<std::size_t>> ranks(width);
  for (std::size_t c = 0; c < width; ++c) {
    auto& order = ranks[c];
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (c < rows[i].size()) order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a][c] > rows[b][c]; });
    const auto m = static_cast<Entry>(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Entry shift = m - 1 - 2 * static_cast<Entry>(k);
      e[order[k]][c] = checked_add(rows[order[k]][c], shift);
    }
  }
  return ETransformedDiagram(x, std::move(e), std::move(ranks));
}

DominantWeight tau(const ETransformedDiagram& ex) {
  DominantWeight w;
  for (const auto& r : ex.rows()) w.entries.insert(w.entries.end(), r.begin(), r.end());
  std::sort(w.entries.begin(), w.entries.end(), std::greater<>());
  return w;
}

DominantWeight tau(const WeightDiagram& x) { return tau(e_transform(x)); }

WeightDiagram recover_from_e(const std::vector<Row>& e) {
  std::vector<Row> x = e;
  std::size_t width = 0;
  for (const auto& r : e) width = std::max(width, r.size());
  for (std::size_t c = 0; c < width; ++c) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (c < e[i].size()) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return e[a][c] > e[b][c];
    });
    const auto m = static_cast<Entry>(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k > 0 && e[order[k]][c] == e[order[k - 1]][c])
        throw DomainError("E-values in a column must be distinct");
      x[order[k]][c] = checked_sub(e[order[k]][c], m - 1 - 2 * static_cast<Entry>(k));
    }
    // The recovered entries must rank rows in the same order.
    for (std::size_t k = 1; k < order.size(); ++k) {
      const Entry hi = x[order[k - 1]][c], lo = x[order[k]][c];
      if (hi < lo || (hi == lo && order[k - 1] > order[k]))
        throw DomainError("not the E-transform of any diagram");
    }
  }
  return WeightDiagram(std::move(x));
}

}  // namespace lvb
