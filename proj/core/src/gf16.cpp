#include "iesieve/gf16.hpp"

#include "iesieve/errors.hpp"

namespace iesieve {

static_assert(modulus_is_irreducible(), "GF(2^16) modulus must be irreducible over GF(2)");
static_assert(!modulus_is_irreducible(0x10001), "x^16 + 1 = (x + 1)^16 must be rejected");

GF16 gf_inv(GF16 a) {
  if (a.is_zero()) throw DomainError("zero has no multiplicative inverse in GF(2^16)");
  return gf_pow(a, (1U << 16) - 2);
}

namespace {

constexpr std::uint32_t kGroupOrder = (1U << 16) - 1;  // 3 * 5 * 17 * 257

bool is_primitive(GF16 g) {
  for (std::uint32_t p : {3U, 5U, 17U, 257U}) {
    if (gf_pow(g, kGroupOrder / p) == GF16(1)) return false;
  }
  return true;
}

}  // namespace

const GF16LogTables& GF16LogTables::instance() {
  static const GF16LogTables tables;
  return tables;
}

GF16LogTables::GF16LogTables() : log_(1U << 16, 0), exp_(2 * kGroupOrder, 0) {
  std::uint16_t g = 2;
  while (!is_primitive(GF16(g))) ++g;
  generator_ = g;
  GF16 power(1);
  for (std::uint32_t e = 0; e < kGroupOrder; ++e) {
    exp_[e] = exp_[e + kGroupOrder] = power.value();
    log_[power.value()] = e;
    power = gf_mul(power, GF16(g));
  }
}

}  // namespace iesieve
