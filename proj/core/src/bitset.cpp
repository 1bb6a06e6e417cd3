#include "iesieve/bitset.hpp"

#include "iesieve/errors.hpp"

namespace iesieve {
namespace {

void require_same_ground(BitSubset a, BitSubset b) {
  if (a.ground_size() != b.ground_size()) {
    throw DomainError("subsets over different ground sets (" + std::to_string(a.ground_size()) +
                      " vs " + std::to_string(b.ground_size()) + ")");
  }
}

}  // namespace

BitSubset::BitSubset(std::uint64_t mask, unsigned n) : mask_(mask), n_(n) {
  if (n > kMaxGround) {
    throw DomainError("ground set of " + std::to_string(n) + " elements exceeds 63");
  }
  if ((mask & ~full_mask(n)) != 0) {
    throw DomainError("mask has bits outside a ground set of " + std::to_string(n));
  }
}

BitSubset BitSubset::singleton(unsigned element, unsigned n) {
  if (element >= n) {
    throw DomainError("element " + std::to_string(element) + " outside ground set of " +
                      std::to_string(n));
  }
  return BitSubset(std::uint64_t{1} << element, n);
}

BitSubset BitSubset::of(std::initializer_list<unsigned> elements, unsigned n) {
  BitSubset s = empty(n);
  for (unsigned e : elements) s = s.with(e);
  return s;
}

bool BitSubset::is_subset_of(BitSubset other) const {
  require_same_ground(*this, other);
  return (mask_ & ~other.mask_) == 0;
}

BitSubset BitSubset::with(unsigned element) const {
  return BitSubset(mask_ | singleton(element, n_).mask_, n_, Unchecked{});
}

BitSubset BitSubset::without(unsigned element) const {
  return BitSubset(mask_ & ~singleton(element, n_).mask_, n_, Unchecked{});
}

BitSubset operator|(BitSubset a, BitSubset b) {
  require_same_ground(a, b);
  return BitSubset(a.mask_ | b.mask_, a.n_, BitSubset::Unchecked{});
}

BitSubset operator&(BitSubset a, BitSubset b) {
  require_same_ground(a, b);
  return BitSubset(a.mask_ & b.mask_, a.n_, BitSubset::Unchecked{});
}

BitSubset operator^(BitSubset a, BitSubset b) {
  require_same_ground(a, b);
  return BitSubset(a.mask_ ^ b.mask_, a.n_, BitSubset::Unchecked{});
}

BitSubset operator-(BitSubset a, BitSubset b) {
  require_same_ground(a, b);
  return BitSubset(a.mask_ & ~b.mask_, a.n_, BitSubset::Unchecked{});
}

std::string BitSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_element([&](unsigned e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace iesieve
