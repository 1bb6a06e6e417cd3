#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace iesieve {

/// A subset of the ground set {0, ..., n-1}, n <= 63, packed into one word.
///
/// Set algebra is word arithmetic. Binary operations require both operands
/// to share the same ground set and throw DomainError otherwise.
class BitSubset {
 public:
  static constexpr unsigned kMaxGround = 63;

  constexpr BitSubset() = default;
  /// Throws DomainError unless n <= 63 and mask < 2^n.
  BitSubset(std::uint64_t mask, unsigned n);

  static BitSubset empty(unsigned n) { return BitSubset(0, n); }
  static BitSubset full(unsigned n) { return BitSubset(full_mask(n), n); }
  static BitSubset singleton(unsigned element, unsigned n);
  static BitSubset of(std::initializer_list<unsigned> elements, unsigned n);

  static constexpr std::uint64_t full_mask(unsigned n) {
    return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr unsigned ground_size() const { return n_; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(mask_)); }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool is_full() const { return mask_ == full_mask(n_); }
  constexpr bool contains(unsigned element) const {
    return element < n_ && ((mask_ >> element) & 1U) != 0;
  }
  /// Smallest element; requires a nonempty set.
  constexpr unsigned lowest() const { return static_cast<unsigned>(std::countr_zero(mask_)); }

  bool is_subset_of(BitSubset other) const;

  BitSubset with(unsigned element) const;
  BitSubset without(unsigned element) const;
  BitSubset complement() const { return BitSubset(full_mask(n_) & ~mask_, n_, Unchecked{}); }

  friend BitSubset operator|(BitSubset a, BitSubset b);
  friend BitSubset operator&(BitSubset a, BitSubset b);
  friend BitSubset operator^(BitSubset a, BitSubset b);
  /// Set difference a \ b.
  friend BitSubset operator-(BitSubset a, BitSubset b);

  friend constexpr bool operator==(BitSubset, BitSubset) = default;

  /// Calls fn(BitSubset) for every subset of *this in increasing mask order,
  /// including the empty set and *this; exactly 2^size() calls.
  template <class Fn>
  void for_each_subset(Fn&& fn) const {
    std::uint64_t s = 0;
    do {
      fn(BitSubset(s, n_, Unchecked{}));
      s = (s - mask_) & mask_;
    } while (s != 0);
  }

  /// Calls fn(unsigned) for every element in increasing order.
  template <class Fn>
  void for_each_element(Fn&& fn) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      fn(static_cast<unsigned>(std::countr_zero(m)));
    }
  }

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  struct Unchecked {};
  constexpr BitSubset(std::uint64_t mask, unsigned n, Unchecked) : mask_(mask), n_(n) {}

  std::uint64_t mask_ = 0;
  unsigned n_ = 0;
};

/// Scatters the low bits of `index` into the set positions of `mask`
/// (software PDEP). Maps [0, 2^popcount(mask)) onto the submasks of `mask`
/// monotonically.
constexpr std::uint64_t deposit_bits(std::uint64_t index, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m != 0 && index != 0; m &= m - 1, index >>= 1) {
    if (index & 1U) out |= m & (~m + 1);
  }
  return out;
}

}  // namespace iesieve
