#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>

#include "iesieve/errors.hpp"

namespace iesieve {

/// Exact arbitrary-precision integer; the default ring of every counting
/// operation.
using Count = mpz_class;

/// Signed 128-bit integer that throws OverflowError instead of wrapping.
/// Instantiating a counting routine with this type trades the unbounded
/// range of Count for speed; results are either exact or an exception.
class CheckedInt128 {
 public:
  using native_type = __int128;

  constexpr CheckedInt128() = default;
  template <std::integral T>
  constexpr CheckedInt128(T v) : v_(static_cast<native_type>(v)) {}  // NOLINT(implicit)

  static constexpr CheckedInt128 from_native(native_type v) {
    CheckedInt128 r;
    r.v_ = v;
    return r;
  }
  constexpr native_type native() const { return v_; }

  CheckedInt128& operator+=(CheckedInt128 o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) overflow("addition");
    return *this;
  }
  CheckedInt128& operator-=(CheckedInt128 o) {
    if (__builtin_sub_overflow(v_, o.v_, &v_)) overflow("subtraction");
    return *this;
  }
  CheckedInt128& operator*=(CheckedInt128 o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) overflow("multiplication");
    return *this;
  }
  friend CheckedInt128 operator+(CheckedInt128 a, CheckedInt128 b) { return a += b; }
  friend CheckedInt128 operator-(CheckedInt128 a, CheckedInt128 b) { return a -= b; }
  friend CheckedInt128 operator*(CheckedInt128 a, CheckedInt128 b) { return a *= b; }
  CheckedInt128 operator-() const { return CheckedInt128{0} - *this; }

  friend constexpr bool operator==(CheckedInt128, CheckedInt128) = default;
  friend constexpr std::strong_ordering operator<=>(CheckedInt128 a, CheckedInt128 b) {
    return a.v_ <=> b.v_;
  }

  std::string to_string() const;

 private:
  [[noreturn]] static void overflow(const char* op);
  native_type v_ = 0;
};

Count to_count(const Count& c);
Count to_count(CheckedInt128 c);

std::string to_decimal(const Count& c);
std::string to_decimal(CheckedInt128 c);

inline int sign_of(const Count& c) { return sgn(c); }
inline int sign_of(CheckedInt128 c) {
  return c.native() < 0 ? -1 : (c.native() > 0 ? 1 : 0);
}

/// Returns value, or throws CorruptionError naming `what` when it is
/// negative. Sieves may go negative internally but never in their result.
template <class Ring>
Ring checked_nonnegative(Ring value, const char* what) {
  if (sign_of(value) < 0) {
    throw CorruptionError(std::string(what) + " produced a negative count " + to_decimal(value));
  }
  return value;
}

/// base^k by square-and-multiply; base^0 = 1.
template <class Ring>
Ring ring_pow(Ring base, unsigned k) {
  Ring result{1};
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

inline Count ring_pow(const Count& base, unsigned k) {
  Count r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

/// Embeds a machine word into a ring.
template <class Ring>
Ring from_u64(std::uint64_t v) {
  return Ring{v};
}

/// Exact binomial coefficient C(n, r); zero when r > n.
Count binomial(std::uint64_t n, std::uint64_t r);

}  // namespace iesieve
