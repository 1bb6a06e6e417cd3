#include "iesieve/matrix.hpp"

#include <string>

#include "iesieve/bitset.hpp"
#include "iesieve/errors.hpp"

namespace iesieve {

Matrix01::Matrix01(unsigned n) : n_(n), rows_(n, 0) {
  if (n > BitSubset::kMaxGround) {
    throw DomainError("matrix dimension " + std::to_string(n) + " exceeds 63");
  }
}

Matrix01 Matrix01::from_rows(const std::vector<std::vector<int>>& rows) {
  Matrix01 m(static_cast<unsigned>(rows.size()));
  for (unsigned i = 0; i < m.n_; ++i) {
    if (rows[i].size() != m.n_) {
      throw DomainError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(m.n_));
    }
    for (unsigned j = 0; j < m.n_; ++j) {
      const int e = rows[i][j];
      if (e != 0 && e != 1) {
        throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not 0 or 1");
      }
      if (e == 1) m.rows_[i] |= std::uint64_t{1} << j;
    }
  }
  return m;
}

Matrix01 Matrix01::identity(unsigned n) {
  Matrix01 m(n);
  for (unsigned i = 0; i < n; ++i) m.rows_[i] = std::uint64_t{1} << i;
  return m;
}

Matrix01 Matrix01::all_ones(unsigned n) {
  Matrix01 m(n);
  for (auto& r : m.rows_) r = BitSubset::full_mask(n);
  return m;
}

Matrix01 Matrix01::with_entry(unsigned row, unsigned col, bool value) const {
  if (row >= n_ || col >= n_) throw DomainError("matrix index out of range");
  Matrix01 m = *this;
  const std::uint64_t bit = std::uint64_t{1} << col;
  m.rows_[row] = value ? (m.rows_[row] | bit) : (m.rows_[row] & ~bit);
  return m;
}

}  // namespace iesieve
