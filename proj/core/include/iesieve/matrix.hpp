#pragma once

#include <cstdint>
#include <vector>

namespace iesieve {

/// Square 0/1 matrix, n <= 63. Row i is also available as a column bitmask.
class Matrix01 {
 public:
  Matrix01() = default;
  /// Zero matrix.
  explicit Matrix01(unsigned n);

  /// Throws DomainError for ragged rows or entries outside {0,1}.
  static Matrix01 from_rows(const std::vector<std::vector<int>>& rows);
  static Matrix01 identity(unsigned n);
  static Matrix01 all_ones(unsigned n);

  unsigned size() const { return n_; }
  bool at(unsigned row, unsigned col) const { return ((rows_.at(row) >> col) & 1U) != 0; }
  /// Bit j set iff entry (row, j) is 1.
  std::uint64_t row_mask(unsigned row) const { return rows_[row]; }

  Matrix01 with_entry(unsigned row, unsigned col, bool value) const;

  friend bool operator==(const Matrix01&, const Matrix01&) = default;

 private:
  unsigned n_ = 0;
  std::vector<std::uint64_t> rows_;
};

}  // namespace iesieve
