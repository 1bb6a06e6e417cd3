#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iesieve/bitset.hpp"
#include "iesieve/errors.hpp"
#include "iesieve/limits.hpp"

namespace iesieve {

/// Dense table of 2^n ring values indexed by subset mask.
template <class Ring>
class SetFunction {
 public:
  using value_type = Ring;

  SetFunction() : SetFunction(0) {}

  /// All-zero table. Throws SizeCapError when n > table_cap().
  explicit SetFunction(unsigned n) : n_(n) {
    require_table(n, "set function");
    values_.assign(std::size_t{1} << n, Ring{0});
  }

  SetFunction(unsigned n, std::vector<Ring> values) : n_(n), values_(std::move(values)) {
    require_table(n, "set function");
    if (values_.size() != (std::size_t{1} << n)) {
      throw DomainError("set function over " + std::to_string(n) + " elements needs " +
                        std::to_string(std::size_t{1} << n) + " values, got " +
                        std::to_string(values_.size()));
    }
  }

  unsigned ground_size() const { return n_; }
  std::size_t size() const { return values_.size(); }
  std::uint64_t full_mask() const { return BitSubset::full_mask(n_); }

  Ring& operator[](std::uint64_t mask) { return values_[mask]; }
  const Ring& operator[](std::uint64_t mask) const { return values_[mask]; }

  const Ring& at(BitSubset s) const {
    check(s);
    return values_[s.mask()];
  }
  Ring& at(BitSubset s) {
    check(s);
    return values_[s.mask()];
  }

  const std::vector<Ring>& values() const { return values_; }
  auto begin() { return values_.begin(); }
  auto end() { return values_.end(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  void check(BitSubset s) const {
    if (s.ground_size() != n_) {
      throw DomainError("subset over " + std::to_string(s.ground_size()) +
                        " elements used to index a set function over " + std::to_string(n_));
    }
  }

  unsigned n_;
  std::vector<Ring> values_;
};

}  // namespace iesieve
