#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rational.hpp"

/*
 * Incremental reduced row echelon form over Q with sparse rows.
 *
 * Rows are maps from a totally ordered column key to mpq_class.  Each stored
 * row is normalized to leading coefficient 1 at its pivot (its smallest key),
 * and every other stored row is zero at that pivot.  Since the RREF of a row
 * space is unique, the final basis does not depend on insertion order; we
 * still insert in a fixed order everywhere so intermediate states are
 * reproducible too.
 */

namespace rrps {

template <class Key, class Compare = std::less<Key>>
class RowSpace {
 public:
  using Row = std::map<Key, mpq_class, Compare>;

  static void axpy(Row &dst, const mpq_class &c, const Row &src) {
    if (c == 0) return;
    for (const auto &[k, v] : src) {
      auto [it, inserted] = dst.emplace(k, c * v);
      if (!inserted) {
        it->second += c * v;
        if (it->second == 0) dst.erase(it);
      }
    }
  }

  // remainder of row modulo the current basis
  Row reduce(Row row) const {
    for (std::size_t i = 0; i < rows_.size() && !row.empty(); ++i) {
      auto it = row.find(pivots_[i]);
      if (it == row.end()) continue;
      mpq_class c = -it->second;
      axpy(row, c, rows_[i]);
    }
    return row;
  }

  // true if the row enlarged the span
  bool insert(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Key p = row.begin()->first;
    mpq_class inv = 1 / row.begin()->second;
    for (auto &[k, v] : row) v *= inv;
    // clear the new pivot column in the existing rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto it = rows_[i].find(p);
      if (it == rows_[i].end()) continue;
      mpq_class c = -it->second;
      axpy(rows_[i], c, row);
    }
    // keep rows ordered by pivot
    std::size_t pos = 0;
    Compare lt;
    while (pos < pivots_.size() && lt(pivots_[pos], p)) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  std::size_t dim() const { return rows_.size(); }
  const std::vector<Row> &rows() const { return rows_; }
  const std::vector<Key> &pivots() const { return pivots_; }

  bool contains(const Row &row) const { return reduce(row).empty(); }

  // coordinates of v in the stored basis, or nullopt if v is outside the span
  std::optional<std::vector<mpq_class>> coordinates(const Row &v) const {
    std::vector<mpq_class> c(rows_.size(), 0);
    Row rem = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto it = rem.find(pivots_[i]);
      if (it == rem.end()) continue;
      c[i] = it->second;  // stored rows have unit pivots
      axpy(rem, -c[i], rows_[i]);
    }
    if (!rem.empty()) return std::nullopt;
    return c;
  }

 private:
  std::vector<Row> rows_;
  std::vector<Key> pivots_;
};

}  // namespace rrps
