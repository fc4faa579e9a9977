#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "lvb/checked.hpp"

namespace lvb {

using Row = std::vector<Entry>;

/// A weight diagram: rows of integers over a partition shape, rows in live
/// (move-permuted) order. Row lengths need not be monotone.
///
/// Indices are 0-based in the API; documentation and rendered traces use
/// 1-based rows and columns.
class WeightDiagram {
 public:
  /// Throws DomainError on an empty diagram or an empty row.
  explicit WeightDiagram(std::vector<Row> rows);
  explicit WeightDiagram(std::initializer_list<Row> rows) : WeightDiagram(std::vector<Row>(rows)) {}

  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t row_length(std::size_t i) const { return rows_.at(i).size(); }
  std::size_t box_count() const noexcept;
  std::size_t max_row_length() const noexcept;

  bool has_entry(std::size_t i, std::size_t c) const noexcept {
    return i < rows_.size() && c < rows_[i].size();
  }
  Entry at(std::size_t i, std::size_t c) const { return rows_.at(i).at(c); }

  friend bool operator==(const WeightDiagram&, const WeightDiagram&) = default;

 private:
  std::vector<Row> rows_;
};

/// Element of the orbit/bundle set: a Jordan type and, per distinct part size,
/// a weakly decreasing tuple whose length is the part's multiplicity.
struct OrbitBundlePair {
  std::vector<std::size_t> orbit;
  std::map<std::size_t, std::vector<Entry>> bundle;

  friend bool operator==(const OrbitBundlePair&, const OrbitBundlePair&) = default;
  friend auto operator<=>(const OrbitBundlePair&, const OrbitBundlePair&) = default;
};

/// Throws DomainError unless orbit and bundle are consistent.
void validate(const OrbitBundlePair& pair);

/// A weakly decreasing integer tuple.
struct DominantWeight {
  std::vector<Entry> entries;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;
};

/// Throws DomainError unless the tuple is nonempty and weakly decreasing.
void validate(const DominantWeight& weight);

/// E X together with the diagram it was computed from.
///
/// In every column the E-values are pairwise distinct; a column with m entries
/// receives the shifts m-1, m-3, ..., -(m-1) in rank order, where rows are
/// ranked by entry (descending) and then by row index (ascending).
class ETransformedDiagram {
 public:
  const WeightDiagram& source() const noexcept { return source_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  Entry at(std::size_t i, std::size_t c) const { return rows_.at(i).at(c); }
  bool has_entry(std::size_t i, std::size_t c) const noexcept { return source_.has_entry(i, c); }

  /// Rows having column c, in rank order.
  const std::vector<std::size_t>& column_order(std::size_t c) const { return ranks_.at(c); }

 private:
  friend ETransformedDiagram e_transform(const WeightDiagram&);
  ETransformedDiagram(WeightDiagram source, std::vector<Row> rows,
                      std::vector<std::vector<std::size_t>> ranks)
      : source_(std::move(source)), rows_(std::move(rows)), ranks_(std::move(ranks)) {}

  WeightDiagram source_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::size_t>> ranks_;
};

/// Row lengths sorted weakly decreasing.
std::vector<std::size_t> shape(const WeightDiagram& x);

/// Orbit = shape; bundle = row sums grouped by row length, each group sorted
/// weakly decreasing.
OrbitBundlePair kappa(const WeightDiagram& x);

ETransformedDiagram e_transform(const WeightDiagram& x);

/// All entries of E X sorted weakly decreasing.
DominantWeight tau(const WeightDiagram& x);
DominantWeight tau(const ETransformedDiagram& ex);

/// Inverse of e_transform on its image. Throws DomainError when `e` is not the
/// E-transform of any diagram of that shape.
WeightDiagram recover_from_e(const std::vector<Row>& e);

Entry row_sum(std::span<const Entry> row);

}  // namespace lvb
