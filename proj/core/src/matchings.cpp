#include "iesieve/matchings.hpp"

#include <bit>
#include <string>
#include <vector>

#include "iesieve/errors.hpp"
#include "iesieve/limits.hpp"
#include "iesieve/parallel.hpp"

namespace iesieve {
namespace {

/// Product of small factors, batching them in a machine word until it would
/// overflow so the ring only sees a few multiplications.
template <class Ring>
Ring product_of(const std::vector<std::uint32_t>& factors) {
  Ring result{1};
  std::uint64_t word = 1;
  for (std::uint32_t f : factors) {
    if (f == 0) return Ring{0};
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(word, std::uint64_t{f}, &next)) {
      result = result * Ring{word};
      word = f;
    } else {
      word = next;
    }
  }
  return result * Ring{word};
}

}  // namespace

template <class Ring>
Ring permanent_ryser(const Matrix01& a) {
  const unsigned n = a.size();
  require_at_most(n, kPermanentCap, "permanent");
  if (n == 0) return Ring{1};
  const Ring total = parallel_reduce<Ring>(
      std::uint64_t{1} << n,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint32_t> sums(n);
        Ring partial{0};
        for (std::uint64_t s = begin; s < end; ++s) {
          for (unsigned i = 0; i < n; ++i) {
            sums[i] = static_cast<std::uint32_t>(std::popcount(a.row_mask(i) & s));
          }
          const Ring term = product_of<Ring>(sums);
          if ((n - std::popcount(s)) % 2 == 0) {
            partial = partial + term;
          } else {
            partial = partial - term;
          }
        }
        return partial;
      });
  return checked_nonnegative(total, "Ryser");
}

template <class Ring>
Ring permanent_ryser_gray(const Matrix01& a) {
  const unsigned n = a.size();
  require_at_most(n, kPermanentCap, "permanent");
  if (n == 0) return Ring{1};

  // rows_with_col[j]: the rows whose sum changes when column j flips.
  std::vector<std::uint64_t> rows_with_col(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (a.at(i, j)) rows_with_col[j] |= std::uint64_t{1} << i;
    }
  }

  std::vector<std::uint32_t> sums(n, 0);
  unsigned zero_rows = n;
  std::uint64_t subset = 0;
  bool positive = (n % 2 == 0);  // sign of (-1)^(n-|S|) at S = empty
  Ring total{0};
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t t = 1; t < steps; ++t) {
    const unsigned col = static_cast<unsigned>(std::countr_zero(t));
    const std::uint64_t bit = std::uint64_t{1} << col;
    const bool adding = (subset & bit) == 0;
    subset ^= bit;
    positive = !positive;
    for (std::uint64_t m = rows_with_col[col]; m != 0; m &= m - 1) {
      std::uint32_t& s = sums[std::countr_zero(m)];
      if (adding) {
        if (s++ == 0) --zero_rows;
      } else {
        if (--s == 0) ++zero_rows;
      }
    }
    if (zero_rows != 0) continue;
    const Ring term = product_of<Ring>(sums);
    total = positive ? Ring(total + term) : Ring(total - term);
  }
  return checked_nonnegative(total, "Ryser (Gray order)");
}

template <class Ring>
Ring pm_count_general(const Graph& graph, const PmTraceFn& trace) {
  const unsigned n = graph.order();
  require_at_most(n, kMatchingCap, "general perfect-matching count");
  if (n == 0) return Ring{1};
  if (n % 2 != 0) return Ring{0};
  const unsigned half = n / 2;

  // binom[e] = C(e, half) for e = 0..m, from a rolling Pascal row.
  const std::size_t m = graph.edge_count();
  std::vector<Ring> binom(m + 1, Ring{0});
  {
    std::vector<Ring> row(half + 1, Ring{0});
    row[0] = Ring{1};
    for (std::size_t e = 0; e <= m; ++e) {
      if (e > 0) {
        for (std::size_t r = std::min<std::size_t>(e, half); r >= 1; --r) {
          row[r] = row[r] + row[r - 1];
        }
      }
      binom[e] = row[half];
    }
  }

  auto emit = [&](std::uint64_t s, std::uint64_t inner, bool positive) {
    if (trace) trace(PmTerm{BitSubset(s, n), inner, positive ? 1 : -1, binomial(inner, half)});
  };

  std::uint64_t subset = 0;
  std::uint64_t inner = 0;
  bool positive = true;  // n is even, so (-1)^(n-0) = +1
  Ring total = binom[0];
  emit(subset, inner, positive);
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t t = 1; t < steps; ++t) {
    const unsigned v = static_cast<unsigned>(std::countr_zero(t));
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::uint64_t touching = static_cast<std::uint64_t>(
        std::popcount(graph.adjacency_mask(v) & (subset & ~bit)));
    if (subset & bit) {
      inner -= touching;
    } else {
      inner += touching;
    }
    subset ^= bit;
    positive = !positive;
    total = positive ? Ring(total + binom[inner]) : Ring(total - binom[inner]);
    emit(subset, inner, positive);
  }
  return checked_nonnegative(total, "perfect-matching sieve");
}

template Count permanent_ryser<Count>(const Matrix01&);
template CheckedInt128 permanent_ryser<CheckedInt128>(const Matrix01&);
template Count permanent_ryser_gray<Count>(const Matrix01&);
template CheckedInt128 permanent_ryser_gray<CheckedInt128>(const Matrix01&);
template Count pm_count_general<Count>(const Graph&, const PmTraceFn&);
template CheckedInt128 pm_count_general<CheckedInt128>(const Graph&, const PmTraceFn&);

}  // namespace iesieve
