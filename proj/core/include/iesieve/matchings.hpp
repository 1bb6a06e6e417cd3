#pragma once

#include <cstdint>
#include <functional>

#include "iesieve/bitset.hpp"
#include "iesieve/count.hpp"
#include "iesieve/graph.hpp"
#include "iesieve/matrix.hpp"

namespace iesieve {

inline constexpr unsigned kPermanentCap = 30;
inline constexpr unsigned kMatchingCap = 30;

/// Ryser's formula: sum over column sets S of (-1)^(n-|S|) times the product
/// of the row sums restricted to S. For a 0/1 matrix this is the number of
/// perfect matchings of the bipartite graph it describes. per(0x0) = 1.
/// O(2^n n) time, parallel over blocks of S.
template <class Ring = Count>
Ring permanent_ryser(const Matrix01& a);

/// Same value, visiting S in reflected binary Gray order (S_t = t ^ (t >> 1))
/// and updating the row sums by one column per step. Sequential.
template <class Ring = Count>
Ring permanent_ryser_gray(const Matrix01& a);

/// One term of the general perfect-matching sieve.
struct PmTerm {
  BitSubset subset;
  std::uint64_t inner_edges;  ///< e[S], edges with both ends in S
  int sign;                   ///< (-1)^(n-|S|)
  Count binomial;             ///< C(e[S], n/2)
};
using PmTraceFn = std::function<void(const PmTerm&)>;

/// Number of perfect matchings of a general graph:
///
///   sum over S <= N of (-1)^(n-|S|) C(e[S], n/2)
///
/// with S visited in Gray order so e[S] changes by |adj(v) & S| per step.
/// Zero for odd n, one for n = 0. When `trace` is set, it receives every
/// term, which is slow but exposes the sieve.
template <class Ring = Count>
Ring pm_count_general(const Graph& graph, const PmTraceFn& trace = {});

extern template Count permanent_ryser<Count>(const Matrix01&);
extern template CheckedInt128 permanent_ryser<CheckedInt128>(const Matrix01&);
extern template Count permanent_ryser_gray<Count>(const Matrix01&);
extern template CheckedInt128 permanent_ryser_gray<CheckedInt128>(const Matrix01&);
extern template Count pm_count_general<Count>(const Graph&, const PmTraceFn&);
extern template CheckedInt128 pm_count_general<CheckedInt128>(const Graph&, const PmTraceFn&);

}  // namespace iesieve
