#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "iesieve/count.hpp"
#include "iesieve/errors.hpp"
#include "iesieve/limits.hpp"
#include "iesieve/parallel.hpp"
#include "iesieve/set_function.hpp"

// Zeta and Moebius transforms over the subset lattice.
//
//   zeta:    (f zeta)(T) = sum over S <= T of f(S)
//   moebius: (f mu)(T)   = sum over S <= T of (-1)^|T\S| f(S)
//
// The Yates variants run n rounds, one per element in ascending bit order;
// round i replaces g(S) by g(S) +/- g(S \ {i}) for every S containing i.
// The naive variants evaluate the defining double sum directly in O(3^n)
// and serve as the reference for the fast ones.
//
// Ring is any type with +, -, and construction from 0 (Count,
// CheckedInt128, GF16, machine integers).

namespace iesieve {

inline constexpr unsigned kNaiveTransformCap = 14;

namespace detail {

/// Maps index i in [0, 2^(n-1)) to the i-th mask that has `bit` set.
constexpr std::uint64_t insert_set_bit(std::uint64_t i, unsigned bit) {
  const std::uint64_t low = i & ((std::uint64_t{1} << bit) - 1);
  const std::uint64_t high = (i >> bit) << (bit + 1);
  return high | low | (std::uint64_t{1} << bit);
}

template <class Ring, bool Subtract>
void yates_round(SetFunction<Ring>& g, unsigned bit) {
  if (bit >= g.ground_size()) {
    throw DomainError("Yates round " + std::to_string(bit) + " outside ground set of " +
                      std::to_string(g.ground_size()));
  }
  const std::uint64_t half = g.size() / 2;
  const std::uint64_t flip = std::uint64_t{1} << bit;
  parallel_for(half, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t s = insert_set_bit(i, bit);
      if constexpr (Subtract) {
        g[s] = g[s] - g[s ^ flip];
      } else {
        g[s] = g[s] + g[s ^ flip];
      }
    }
  }, 1U << 14);
}

}  // namespace detail

/// One Yates zeta round over element `bit`, in place.
template <class Ring>
void zeta_round(SetFunction<Ring>& g, unsigned bit) {
  detail::yates_round<Ring, false>(g, bit);
}

/// One Yates Moebius round over element `bit`, in place.
template <class Ring>
void mobius_round(SetFunction<Ring>& g, unsigned bit) {
  detail::yates_round<Ring, true>(g, bit);
}

template <class Ring>
void zeta_yates_inplace(SetFunction<Ring>& f) {
  for (unsigned bit = 0; bit < f.ground_size(); ++bit) zeta_round(f, bit);
}

template <class Ring>
void mobius_yates_inplace(SetFunction<Ring>& f) {
  for (unsigned bit = 0; bit < f.ground_size(); ++bit) mobius_round(f, bit);
}

template <class Ring>
SetFunction<Ring> zeta_yates(SetFunction<Ring> f) {
  zeta_yates_inplace(f);
  return f;
}

template <class Ring>
SetFunction<Ring> mobius_yates(SetFunction<Ring> f) {
  mobius_yates_inplace(f);
  return f;
}

template <class Ring>
SetFunction<Ring> zeta_naive(const SetFunction<Ring>& f) {
  require_at_most(f.ground_size(), kNaiveTransformCap, "naive zeta transform");
  SetFunction<Ring> out(f.ground_size());
  for (std::uint64_t t = 0; t < f.size(); ++t) {
    Ring sum{0};
    std::uint64_t s = 0;
    do {
      sum = sum + f[s];
      s = (s - t) & t;
    } while (s != 0);
    out[t] = sum;
  }
  return out;
}

template <class Ring>
SetFunction<Ring> mobius_naive(const SetFunction<Ring>& f) {
  require_at_most(f.ground_size(), kNaiveTransformCap, "naive Moebius transform");
  SetFunction<Ring> out(f.ground_size());
  for (std::uint64_t t = 0; t < f.size(); ++t) {
    const int t_size = std::popcount(t);
    Ring sum{0};
    std::uint64_t s = 0;
    do {
      if ((t_size - std::popcount(s)) % 2 == 0) {
        sum = sum + f[s];
      } else {
        sum = sum - f[s];
      }
      s = (s - t) & t;
    } while (s != 0);
    out[t] = sum;
  }
  return out;
}

/// S -> h(S)^k. Throws DomainError for k == 0.
template <class Ring>
SetFunction<Ring> pointwise_pow(SetFunction<Ring> h, unsigned k) {
  if (k == 0) throw DomainError("pointwise power needs k >= 1");
  if (k == 1) return h;
  parallel_for(h.size(), [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) h[s] = ring_pow(h[s], k);
  });
  return h;
}

}  // namespace iesieve
