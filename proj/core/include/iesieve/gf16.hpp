#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace iesieve {

/// x^16 + x^5 + x^3 + x + 1. Irreducibility over GF(2) is verified at compile
/// time in gf16.cpp.
inline constexpr std::uint32_t kGf16Modulus = 0x1002B;

/// Element of GF(2^16): a polynomial of degree < 16 over GF(2), one bit per
/// coefficient. Addition and subtraction are both XOR.
class GF16 {
 public:
  constexpr GF16() = default;
  constexpr explicit GF16(std::uint16_t bits) : bits_(bits) {}

  constexpr std::uint16_t value() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr GF16 operator+(GF16 a, GF16 b) { return GF16(a.bits_ ^ b.bits_); }
  friend constexpr GF16 operator-(GF16 a, GF16 b) { return GF16(a.bits_ ^ b.bits_); }
  friend constexpr GF16 operator*(GF16 a, GF16 b);
  constexpr GF16& operator+=(GF16 o) { return *this = *this + o; }
  constexpr GF16& operator*=(GF16 o);
  constexpr GF16 operator-() const { return *this; }

  friend constexpr bool operator==(GF16, GF16) = default;

 private:
  std::uint16_t bits_ = 0;
};

/// Carry-less product of two polynomials of degree < 16 (degree < 31 result).
constexpr std::uint32_t clmul16(std::uint16_t a, std::uint16_t b) {
  std::uint32_t out = 0;
  for (std::uint32_t x = a; b != 0; b >>= 1, x <<= 1) {
    if (b & 1U) out ^= x;
  }
  return out;
}

/// Reduces a polynomial of degree < 31 modulo kGf16Modulus.
constexpr std::uint16_t reduce16(std::uint32_t wide) {
  for (int bit = 30; bit >= 16; --bit) {
    if ((wide >> bit) & 1U) wide ^= kGf16Modulus << (bit - 16);
  }
  return static_cast<std::uint16_t>(wide);
}

constexpr GF16 gf_mul(GF16 a, GF16 b) { return GF16(reduce16(clmul16(a.value(), b.value()))); }

constexpr GF16 operator*(GF16 a, GF16 b) { return gf_mul(a, b); }
constexpr GF16& GF16::operator*=(GF16 o) { return *this = *this * o; }

/// a^e by square-and-multiply.
constexpr GF16 gf_pow(GF16 a, std::uint32_t e) {
  GF16 result{1};
  while (e != 0) {
    if (e & 1U) result = result * a;
    a = a * a;
    e >>= 1;
  }
  return result;
}

/// Multiplicative inverse a^(2^16 - 2). Throws DomainError for a == 0.
GF16 gf_inv(GF16 a);

/// Remainder of polynomial `dividend` modulo `divisor` over GF(2).
constexpr std::uint32_t gf2_poly_mod(std::uint32_t dividend, std::uint32_t divisor) {
  const int divisor_degree = 31 - __builtin_clz(divisor);
  for (int bit = 31; bit >= divisor_degree; --bit) {
    if ((dividend >> bit) & 1U) dividend ^= divisor << (bit - divisor_degree);
  }
  return dividend;
}

/// True iff the 16-degree modulus has no factor of degree 1..8 over GF(2),
/// which for a degree-16 polynomial is equivalent to irreducibility.
constexpr bool modulus_is_irreducible(std::uint32_t modulus = kGf16Modulus) {
  for (std::uint32_t d = 2; d < (1U << 9); ++d) {
    if (gf2_poly_mod(modulus, d) == 0) return false;
  }
  return true;
}

/// Discrete log/antilog tables over a primitive element, for hot loops.
/// Agrees with gf_mul on every pair of operands.
class GF16LogTables {
 public:
  static const GF16LogTables& instance();

  std::uint16_t generator() const { return generator_; }
  /// Log of a nonzero element.
  std::uint32_t log(GF16 a) const { return log_[a.value()]; }
  /// g^(e) for 0 <= e < 2 * 65535.
  GF16 exp(std::uint32_t e) const { return GF16(exp_[e]); }
  GF16 mul(GF16 a, GF16 b) const {
    if (a.is_zero() || b.is_zero()) return GF16{};
    return GF16(exp_[log_[a.value()] + log_[b.value()]]);
  }

 private:
  GF16LogTables();
  std::uint16_t generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> exp_;
};

inline std::ostream& operator<<(std::ostream& os, GF16 a) { return os << a.value(); }

}  // namespace iesieve
