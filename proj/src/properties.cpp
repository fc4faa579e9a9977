// Reconstructed predicate and statistic definitions. Every formula here is
// pinned by the golden step corpus (see tests/test_properties.cpp).
#include "lvb/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace lvb {

std::string to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::P1: return "P1";
    case PropertyKind::P2: return "P2";
    case PropertyKind::P3: return "P3";
    case PropertyKind::P4: return "P4";
  }
  return "?";
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::A: return "A";
    case MoveKind::AInverse: return "A^-1";
    case MoveKind::B: return "B";
    case MoveKind::BInverse: return "B^-1";
    case MoveKind::C: return "C";
  }
  return "?";
}

namespace {

// E-values of one column in rank order, plus the rank range of each X value.
struct ColumnGroups {
  std::vector<Entry> e;
  std::map<Entry, std::pair<std::size_t, std::size_t>> range;
};

ColumnGroups column_groups(const ETransformedDiagram& ex, std::size_t c) {
  ColumnGroups g;
  const auto& order = ex.column_order(c - 1);
  const auto& x = ex.source();
  for (std::size_t k = 0; k < order.size(); ++k) {
    g.e.push_back(ex.at(order[k], c - 1));
    const Entry v = x.at(order[k], c - 1);
    auto [it, fresh] = g.range.try_emplace(v, k, k + 1);
    if (!fresh) it->second.second = k + 1;
  }
  return g;
}

int classify(Entry dq1, Entry dq2, Entry dq3) {
  if (dq1 < 0) return 0;
  if (dq1 > 0) return -1;
  if (dq2 < 0) return 1;
  if (dq2 > 0) return -1;
  return dq3 < 0 ? 2 : -1;
}

Entry even_weight(std::size_t c, Entry k) { return c % 2 == 0 ? k : 0; }

// Visits every improving chain at level r in scan order; stops when the
// visitor returns false.
void scan_transfers(const ETransformedDiagram& ex, std::size_t r,
                    const std::function<bool(Transfer&&)>& visit) {
  const auto& x = ex.source();
  if (r < 2 || r > x.max_row_length()) return;
  const ColumnGroups col_r = column_groups(ex, r);
  for (std::size_t s = 1; s < r; ++s) {
    const ColumnGroups col_s = column_groups(ex, s);
    std::vector<std::pair<Entry, Entry>> keys;
    std::map<std::pair<Entry, Entry>, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < x.row_count(); ++i) {
      if (x.row_length(i) < r) continue;
      std::pair<Entry, Entry> key{x.at(i, s - 1), x.at(i, r - 1)};
      auto& members = classes[key];
      if (members.empty()) keys.push_back(key);
      members.push_back(i);
    }
    for (const auto& key : keys) {
      const auto& members = classes[key];
      const auto [vb, ve] = col_s.range.at(key.first);
      const auto [wb, we] = col_r.range.at(key.second);
      // Running deltas of q1 for the chain of length k.
      Entry lower_sum = 0, raise_sum = 0;
      for (std::size_t k = 1; k <= members.size(); ++k) {
        const Entry kk = static_cast<Entry>(k);
        {
          const Entry es = col_s.e[ve - k], er = col_r.e[wb + k - 1];
          lower_sum = checked_add(lower_sum, checked_add(checked_sub(1, checked_mul(2, es)),
                                                         checked_add(1, checked_mul(2, er))));
        }
        {
          const Entry es = col_s.e[vb + k - 1], er = col_r.e[we - k];
          raise_sum = checked_add(raise_sum, checked_add(checked_add(1, checked_mul(2, es)),
                                                         checked_sub(1, checked_mul(2, er))));
        }
        const Entry dq2 = even_weight(r, kk) - even_weight(s, kk);
        const Entry dq3 = kk * (static_cast<Entry>(s) - static_cast<Entry>(r));

        if (int cls = classify(lower_sum, dq2, dq3); cls >= 0) {
          Transfer t;
          t.move = {MoveKind::A, {members.end() - k, members.end()}, s, r, 1};
          t.improvement = cls;
          t.dq1 = lower_sum, t.dq2 = dq2, t.dq3 = dq3;
          if (!visit(std::move(t))) return;
        }
        if (int cls = classify(raise_sum, -dq2, -dq3); cls >= 0) {
          Transfer t;
          t.move = {MoveKind::AInverse, {members.begin(), members.begin() + k}, s, r, 1};
          t.improvement = cls;
          t.dq1 = raise_sum, t.dq2 = -dq2, t.dq3 = -dq3;
          if (!visit(std::move(t))) return;
        }
      }
    }
  }
}

bool transfer_uses(const Transfer& t, std::size_t i) {
  return std::find(t.move.rows.begin(), t.move.rows.end(), i) != t.move.rows.end();
}

}  // namespace

std::vector<Transfer> improving_transfers(const ETransformedDiagram& ex, std::size_t r) {
  std::vector<Transfer> out;
  scan_transfers(ex, r, [&](Transfer&& t) {
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

std::optional<Transfer> find_transfer(const ETransformedDiagram& ex, std::size_t r) {
  std::optional<Transfer> best;
  scan_transfers(ex, r, [&](Transfer&& t) {
    if (!best || t.improvement < best->improvement) best = std::move(t);
    return best->improvement != 0;
  });
  return best;
}

std::optional<std::size_t> block_successor(const WeightDiagram& x, std::size_t i,
                                           std::size_t r) {
  const std::size_t prefix = r == 0 ? 0 : r - 1;
  for (std::size_t j = i + 1; j < x.row_count(); ++j) {
    if (x.row_length(j) < prefix) continue;
    if (x.row_length(i) < prefix) return std::nullopt;
    const auto& a = x.rows()[i];
    const auto& b = x.rows()[j];
    if (std::equal(a.begin(), a.begin() + prefix, b.begin())) return j;
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> block_predecessor(const WeightDiagram& x, std::size_t i,
                                             std::size_t r) {
  const std::size_t prefix = r == 0 ? 0 : r - 1;
  for (std::size_t j = i; j-- > 0;) {
    if (x.row_length(j) < prefix) continue;
    if (x.row_length(i) < prefix) return std::nullopt;
    const auto& a = x.rows()[i];
    const auto& b = x.rows()[j];
    if (std::equal(a.begin(), a.begin() + prefix, b.begin())) return j;
    return std::nullopt;
  }
  return std::nullopt;
}

Entry q_tilde_5(const ETransformedDiagram& ex, std::size_t i, std::size_t r) {
  if (r == 0 || !ex.has_entry(i, r - 1))
    throw DomainError("q~5 needs an entry at row " + std::to_string(i + 1) + ", column " +
                      std::to_string(r));
  if (r == 1) return 0;
  const Entry prev = ex.at(i, r - 2), cur = ex.at(i, r - 1);
  if (r % 2 == 1)
    return std::max(checked_sub(cur, checked_add(prev, 1)), checked_sub(prev, cur));
  return std::max(checked_sub(cur, prev), checked_sub(checked_sub(prev, 1), cur));
}

Entry q_tilde_6(const WeightDiagram& x, std::size_t j, std::size_t r) {
  if (r == 0 || x.row_length(j) < r) return 0;
  const Entry mine = x.at(j, r - 1);
  Entry total = 0;
  for (auto k = block_successor(x, j, r); k; k = block_successor(x, *k, r)) {
    if (x.row_length(*k) >= r && x.at(*k, r - 1) > mine)
      total = checked_add(total, checked_sub(x.at(*k, r - 1), mine));
  }
  for (auto k = block_predecessor(x, j, r); k; k = block_predecessor(x, *k, r)) {
    if (x.row_length(*k) >= r && x.at(*k, r - 1) < mine)
      total = checked_add(total, checked_sub(mine, x.at(*k, r - 1)));
  }
  return total;
}

Entry q_tilde_3(const ETransformedDiagram& ex, std::size_t i, std::size_t r) {
  std::vector<bool> hit(r, false);
  for (const auto& t : improving_transfers(ex, r))
    if (transfer_uses(t, i)) hit[t.move.s] = true;
  return static_cast<Entry>(std::count(hit.begin(), hit.end(), true));
}

bool row_property(const ETransformedDiagram& ex, PropertyKind kind, std::size_t i,
                  std::size_t r) {
  const auto& x = ex.source();
  if (r == 0 || x.row_length(i) < r) return true;
  switch (kind) {
    case PropertyKind::P1:
    case PropertyKind::P2: {
      bool ok = true;
      scan_transfers(ex, r, [&](Transfer&& t) {
        const bool lowers_q1 = t.improvement == 0;
        if (lowers_q1 == (kind == PropertyKind::P1) && transfer_uses(t, i)) ok = false;
        return ok;
      });
      return ok;
    }
    case PropertyKind::P3:
      return q_tilde_5(ex, i, r) == 0;
    case PropertyKind::P4: {
      auto j = block_successor(x, i, r);
      if (!j || x.row_length(*j) < r) return true;
      return x.at(i, r - 1) >= x.at(*j, r - 1);
    }
  }
  return true;
}

bool property(const ETransformedDiagram& ex, PropertyKind kind, std::size_t r) {
  if (r == 0) return true;
  switch (kind) {
    case PropertyKind::P1: {
      auto t = find_transfer(ex, r);
      return !t || t->improvement != 0;
    }
    case PropertyKind::P2: {
      bool ok = true;
      scan_transfers(ex, r, [&](Transfer&& t) {
        if (t.improvement != 0) ok = false;
        return ok;
      });
      return ok;
    }
    case PropertyKind::P3:
    case PropertyKind::P4:
      for (std::size_t i = 0; i < ex.source().row_count(); ++i)
        if (!row_property(ex, kind, i, r)) return false;
      return true;
  }
  return true;
}

std::size_t frontier(const ETransformedDiagram& ex) {
  const std::size_t longest = ex.source().max_row_length();
  for (std::size_t r = 1; r <= longest; ++r) {
    for (auto kind : {PropertyKind::P3, PropertyKind::P4, PropertyKind::P1, PropertyKind::P2})
      if (!property(ex, kind, r)) return r;
  }
  return longest + 1;
}

StatisticsVector statistics(const ETransformedDiagram& ex) {
  const auto& x = ex.source();
  StatisticsVector q;
  for (const auto& row : ex.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Entry v = row[c];
      q.q1 = checked_add(q.q1, checked_mul(v, v));
      if ((c + 1) % 2 == 0) q.q2 = checked_add(q.q2, v);
      q.q3 = checked_sub(q.q3, checked_mul(static_cast<Entry>(c + 1), v));
    }
  }
  const std::size_t r = frontier(ex);
  q.q4 = -static_cast<Entry>(r - 1);
  if (r > x.max_row_length()) return q;
  for (std::size_t i = 0; i < x.row_count(); ++i) {
    if (x.row_length(i) >= r) q.q5 = checked_add(q.q5, q_tilde_5(ex, i, r));
    q.q6 = checked_add(q.q6, q_tilde_6(x, i, r));
  }
  return q;
}

StatisticsVector statistics(const WeightDiagram& x) { return statistics(e_transform(x)); }

bool is_distinguished(const WeightDiagram& x) {
  const auto ex = e_transform(x);
  return frontier(ex) > x.max_row_length();
}

bool lowerable(const WeightDiagram& x, std::size_t i, std::size_t c) {
  if (c == 0 || !x.has_entry(i, c - 1)) throw DomainError("no entry to lower");
  const Entry v = x.at(i, c - 1);
  for (std::size_t j = 0; j < x.row_count(); ++j) {
    if (j == i || !x.has_entry(j, c - 1)) continue;
    const Entry w = x.at(j, c - 1);
    if ((j > i && w == v) || (j < i && w == v - 1)) return false;
  }
  return true;
}

bool raisable(const WeightDiagram& x, std::size_t i, std::size_t c) {
  if (c == 0 || !x.has_entry(i, c - 1)) throw DomainError("no entry to raise");
  const Entry v = x.at(i, c - 1);
  for (std::size_t j = 0; j < x.row_count(); ++j) {
    if (j == i || !x.has_entry(j, c - 1)) continue;
    const Entry w = x.at(j, c - 1);
    if ((j < i && w == v) || (j > i && w == v + 1)) return false;
  }
  return true;
}

}  // namespace lvb
