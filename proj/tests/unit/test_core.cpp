#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "iesieve/bitset.hpp"
#include "iesieve/count.hpp"
#include "iesieve/errors.hpp"
#include "iesieve/graph.hpp"
#include "iesieve/hampath.hpp"
#include "iesieve/limits.hpp"
#include "iesieve/parallel.hpp"
#include "iesieve/set_function.hpp"
#include "iesieve/sieve.hpp"
#include "support.hpp"

using namespace iesieve;

TEST(BitSubset, RejectsBitsAboveGround) {
  EXPECT_THROW(BitSubset(0b100, 2), DomainError);
  EXPECT_THROW(BitSubset(0, 64), DomainError);
  EXPECT_NO_THROW(BitSubset(BitSubset::full_mask(63), 63));
}

TEST(BitSubset, BasicOperations) {
  const BitSubset s = BitSubset::of({0, 2, 5}, 6);
  EXPECT_EQ(s.size(), 3U);
  EXPECT_EQ(s.lowest(), 0U);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.to_string(), "{0,2,5}");
  EXPECT_EQ(s.complement().mask(), 0b011010U);
  EXPECT_EQ((s - BitSubset::of({2}, 6)).mask(), 0b100001U);
  EXPECT_EQ((s ^ BitSubset::of({0, 1}, 6)).mask(), 0b100110U);
  EXPECT_TRUE(BitSubset::of({2}, 6).is_subset_of(s));
  EXPECT_FALSE(BitSubset::of({1}, 6).is_subset_of(s));
  EXPECT_EQ(s.without(5).with(1), BitSubset::of({0, 1, 2}, 6));
}

TEST(BitSubset, SubsetEnumerationVisitsEachSubsetOnce) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const BitSubset s(mask, 6);
    std::set<std::uint64_t> seen;
    std::uint64_t previous = 0;
    bool ascending = true;
    s.for_each_subset([&](BitSubset r) {
      EXPECT_TRUE(r.is_subset_of(s));
      if (!seen.empty() && r.mask() <= previous) ascending = false;
      previous = r.mask();
      seen.insert(r.mask());
    });
    EXPECT_EQ(seen.size(), std::uint64_t{1} << s.size());
    EXPECT_TRUE(ascending);
  }
}

TEST(BitSubset, DepositBitsMatchesEnumerationOrder) {
  const std::uint64_t mask = 0b1011010;
  std::uint64_t index = 0;
  BitSubset(mask, 7).for_each_subset([&](BitSubset r) {
    EXPECT_EQ(deposit_bits(index++, mask), r.mask());
  });
}

TEST(Graph, AdjacencyIsSymmetricAndLoopFree) {
  const Graph g = fixtures::triangle_pendant();
  EXPECT_EQ(g.order(), 4U);
  EXPECT_EQ(g.edge_count(), 4U);
  unsigned total_degree = 0;
  for (unsigned u = 0; u < 4; ++u) {
    EXPECT_FALSE(g.has_edge(u, u));
    total_degree += g.degree(u);
    for (unsigned v = 0; v < 4; ++v) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
  }
  EXPECT_EQ(total_degree, 2 * g.edge_count());
  EXPECT_EQ(g.closed_neighbourhood(3).mask(), 0b1001U);
  EXPECT_EQ(g.edges_inside(0b0111), 3U);
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(Graph, RejectsInvalidEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), DomainError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), DomainError);
  EXPECT_THROW(Graph(64), DomainError);
}

TEST(PieSum, ExamplesFromTheSandwichIdentity) {
  EXPECT_EQ(pie_sum(BitSubset::of({1}, 4), BitSubset::of({1, 2, 3}, 4)), 0);
  EXPECT_EQ(pie_sum(BitSubset::of({1, 2}, 4), BitSubset::of({1, 2}, 4)), 1);
  EXPECT_EQ(pie_sum(BitSubset::empty(0), BitSubset::empty(0)), 1);
  EXPECT_THROW(pie_sum(BitSubset::of({0}, 3), BitSubset::of({1}, 3)), DomainError);
}

TEST(PieSum, ExhaustiveUpToSixElements) {
  for (unsigned n = 0; n <= 6; ++n) {
    const BitSubset full = BitSubset::full(n);
    full.for_each_subset([&](BitSubset t) {
      t.for_each_subset([&](BitSubset r) { EXPECT_EQ(pie_sum(r, t), r == t ? 1 : 0); });
    });
  }
}

TEST(Sieve, ComplementOfUnionExamples) {
  const auto one = sieve_complement_of_union(1, [](BitSubset x) {
    return Count(x.is_empty() ? 5 : 2);
  });
  EXPECT_EQ(one, 3);
  EXPECT_EQ(sieve_complement_of_union(2, [](BitSubset) { return Count(0); }), 0);

  const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  const auto paths = sieve_complement_of_union(3, [&](BitSubset x) {
    return x.contains(0) ? Count(0) : walks_avoiding(p3, x, 0, 3);
  });
  EXPECT_EQ(paths, 1);
}

TEST(Sieve, CountsElementsOutsideAFamilyOfSets) {
  // Universe 0..29; A_i = multiples of (i + 2).
  const unsigned family = 4;
  const auto outside = sieve_complement_of_union(family, [](BitSubset x) {
    long count = 0;
    for (int e = 0; e < 30; ++e) {
      bool in_all = true;
      x.for_each_element([&](unsigned i) { in_all = in_all && e % static_cast<int>(i + 2) == 0; });
      count += in_all;
    }
    return Count(count);
  });
  long direct = 0;
  for (int e = 0; e < 30; ++e) direct += (e % 2 && e % 3 && e % 4 && e % 5);
  EXPECT_EQ(outside, direct);
}

TEST(CheckedInt128, ExactArithmeticAndLoudOverflow) {
  CheckedInt128 a = std::numeric_limits<std::int64_t>::max();
  a *= CheckedInt128(4);
  EXPECT_EQ(a.to_string(), "36893488147419103228");
  EXPECT_EQ(to_count(a), Count("36893488147419103228"));
  const CheckedInt128 big = CheckedInt128::from_native(std::numeric_limits<__int128>::max());
  EXPECT_THROW(big + CheckedInt128(1), OverflowError);
  EXPECT_THROW(big * CheckedInt128(2), OverflowError);
  EXPECT_THROW(-big - CheckedInt128(2), OverflowError);
  EXPECT_EQ((CheckedInt128(-7) * CheckedInt128(3)).to_string(), "-21");
}

TEST(Count, NegativeResultsAreReportedAsCorruption) {
  EXPECT_THROW(checked_nonnegative(Count(-1), "test"), CorruptionError);
  EXPECT_EQ(checked_nonnegative(Count(4), "test"), 4);
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(ring_pow(Count(3), 4), 81);
  EXPECT_EQ(ring_pow(CheckedInt128(3), 4), CheckedInt128(81));
}

TEST(Limits, TableCapIsConfigurable) {
  EXPECT_EQ(table_cap(), kDefaultTableCap);
  EXPECT_THROW(SetFunction<int>(kDefaultTableCap + 1), SizeCapError);
  set_table_cap(3);
  EXPECT_THROW(SetFunction<int>(4), SizeCapError);
  EXPECT_NO_THROW(SetFunction<int>(3));
  set_table_cap(kDefaultTableCap);
  EXPECT_THROW(set_table_cap(64), DomainError);
}

TEST(SetFunction, ChecksLength) {
  EXPECT_THROW(SetFunction<int>(2, std::vector<int>{1, 2, 3}), DomainError);
  SetFunction<int> f(2, {1, 2, 3, 4});
  EXPECT_EQ(f.at(BitSubset::of({0, 1}, 2)), 4);
  EXPECT_EQ(f.full_mask(), 3U);
}

TEST(Parallel, ReductionDoesNotDependOnThreadCount) {
  auto run = [] {
    return parallel_reduce<Count>(
        100000,
        [](std::uint64_t begin, std::uint64_t end) {
          Count s{0};
          for (std::uint64_t i = begin; i < end; ++i) s += Count(static_cast<unsigned long>(i * i)) * (i % 3 ? 1 : -1);
          return s;
        },
        64);
  };
  set_thread_count(1);
  const Count one = run();
  set_thread_count(4);
  const Count four = run();
  set_thread_count(1);
  EXPECT_EQ(one, four);
}

TEST(Parallel, PropagatesExceptions) {
  set_thread_count(3);
  EXPECT_THROW(parallel_for(1000, [](std::uint64_t begin, std::uint64_t) {
                 if (begin >= 500) throw DomainError("boom");
               }, 10),
               DomainError);
  set_thread_count(1);
}
