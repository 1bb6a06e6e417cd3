#pragma once

#include <cstdint>
#include <type_traits>

#include "iesieve/bitset.hpp"
#include "iesieve/count.hpp"
#include "iesieve/parallel.hpp"

namespace iesieve {

/// Sum over r <= S <= t of (-1)^|t \ S|, by enumerating the 2^|t\r|
/// sandwiched sets. Equals 1 when r == t and 0 otherwise.
/// Throws DomainError unless r is a subset of t.
Count pie_sum(BitSubset r, BitSubset t);

/// Sum over X <= ground of (-1)^|X| * a(X).
///
/// When a(X) = |intersection of A_i for i in X| for a family {A_i} indexed by
/// the elements of `ground`, this is the number of elements of the universe
/// a(empty) lying in none of the A_i. The callback must be a pure function;
/// terms may be evaluated concurrently, and the signed accumulation is exact,
/// so the result does not depend on the thread count.
template <class Fn>
auto sieve_over_subsets(BitSubset ground, Fn&& a, std::uint64_t grain = 64)
    -> std::remove_cvref_t<std::invoke_result_t<Fn&, BitSubset>> {
  using Ring = std::remove_cvref_t<std::invoke_result_t<Fn&, BitSubset>>;
  const std::uint64_t mask = ground.mask();
  const unsigned n = ground.ground_size();
  const std::uint64_t terms = std::uint64_t{1} << ground.size();
  return parallel_reduce<Ring>(
      terms,
      [&](std::uint64_t begin, std::uint64_t end) {
        Ring positive{0};
        Ring negative{0};
        std::uint64_t x = deposit_bits(begin, mask);
        for (std::uint64_t i = begin; i < end; ++i) {
          const BitSubset xs(x, n);
          if (xs.size() % 2 == 0) {
            positive = positive + a(xs);
          } else {
            negative = negative + a(xs);
          }
          x = (x - mask) & mask;
        }
        return Ring(positive - negative);
      },
      grain);
}

/// Sum over X <= {0..n-1} of (-1)^|X| * a(X): the complement-of-union count.
template <class Fn>
auto sieve_complement_of_union(unsigned n, Fn&& a) {
  return sieve_over_subsets(BitSubset::full(n), std::forward<Fn>(a));
}

}  // namespace iesieve
