#include "iesieve/count.hpp"

#include <algorithm>
#include <string>

namespace iesieve {

void CheckedInt128::overflow(const char* op) {
  throw OverflowError(std::string("128-bit ") + op + " overflowed");
}

std::string CheckedInt128::to_string() const {
  if (v_ == 0) return "0";
  // Work with the negative magnitude so INT128_MIN is representable.
  native_type v = v_ < 0 ? v_ : -v_;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (v_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Count to_count(const Count& c) { return c; }

Count to_count(CheckedInt128 c) {
  const bool negative = c.native() < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(0) -
                                         static_cast<unsigned __int128>(c.native())
                                   : static_cast<unsigned __int128>(c.native());
  Count hi{static_cast<unsigned long>(mag >> 64)};
  Count lo{static_cast<unsigned long>(mag & ~0UL)};
  Count r = (hi << 64) + lo;
  return negative ? Count(-r) : r;
}

std::string to_decimal(const Count& c) { return c.get_str(10); }
std::string to_decimal(CheckedInt128 c) { return c.to_string(); }

Count binomial(std::uint64_t n, std::uint64_t r) {
  Count out;
  if (r > n) return Count{0};
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

}  // namespace iesieve
