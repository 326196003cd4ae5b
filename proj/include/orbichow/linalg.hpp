#ifndef ORBICHOW_LINALG_HPP
#define ORBICHOW_LINALG_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "orbichow/rational.hpp"

namespace orbichow {

using SparseRow = std::map<std::size_t, Coeff>;

/// row += factor * other, dropping entries that cancel.
inline void add_scaled(SparseRow& row, const Coeff& factor, const SparseRow& other) {
  for (const auto& [col, v] : other) {
    auto [it, inserted] = row.try_emplace(col, 0);
    it->second += factor * v;
    if (it->second == 0) row.erase(it);
  }
}

/// Incremental row echelon form over Q with sparse rows. The pivot of a row is
/// its smallest column index, so after reduce() the surviving (free) columns
/// are the largest ones the relations allow. The reduced echelon form is
/// unique, so the insertion order of rows does not affect the result.
class RowEchelon {
 public:
  /// Returns true when the row was independent of the rows inserted so far.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      const auto [col, lead] = *row.begin();
      auto piv = rows_.find(col);
      if (piv == rows_.end()) {
        const Coeff inv = 1 / lead;
        for (auto& [c, v] : row) v *= inv;
        rows_.emplace(col, std::move(row));
        reduced_ = false;
        return true;
      }
      const Coeff factor = -lead;
      add_scaled(row, factor, piv->second);
    }
    return false;
  }

  /// Brings the stored rows to reduced echelon form.
  void reduce() {
    if (reduced_) return;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseRow& row = it->second;
      std::vector<std::size_t> hits;
      for (const auto& [c, v] : row)
        if (c != it->first && rows_.count(c)) hits.push_back(c);
      for (auto c : hits) {
        auto f = row.find(c);
        if (f == row.end()) continue;
        const Coeff factor = -f->second;
        add_scaled(row, factor, rows_.at(c));
      }
    }
    reduced_ = true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  const std::map<std::size_t, SparseRow>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseRow> rows_;
  bool reduced_ = true;
};

inline std::size_t rank_of(const std::vector<SparseRow>& rows) {
  RowEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace orbichow

#endif  // ORBICHOW_LINALG_HPP
