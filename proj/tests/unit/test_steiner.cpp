#include <gtest/gtest.h>

#include "iesieve/errors.hpp"
#include "iesieve/generators.hpp"
#include "iesieve/oracles.hpp"
#include "iesieve/steiner.hpp"
#include "support.hpp"

using namespace iesieve;

namespace {

// Direct recursive evaluation of the willow recurrence, no memoisation.
Count rooted_willows(const Graph& g, std::uint64_t avoid, unsigned u, unsigned size) {
  if (size == 1) return 1;
  Count total{0};
  for (unsigned v = 0; v < g.order(); ++v) {
    if (!g.has_edge(u, v) || ((avoid >> v) & 1U)) continue;
    for (unsigned i = 1; i < size; ++i) {
      total += rooted_willows(g, avoid, u, i) * rooted_willows(g, avoid, v, size - i);
    }
  }
  return total;
}

Count willows(const Graph& g, std::uint64_t avoid, unsigned size) {
  Count total{0};
  for (unsigned u = 0; u < g.order(); ++u) {
    if (!((avoid >> u) & 1U)) total += rooted_willows(g, avoid, u, size);
  }
  return total;
}

}  // namespace

TEST(Willows, SmallCounts) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = random_graph(6, 0.5, seed);
    EXPECT_EQ(willow_count_avoiding(g, BitSubset::empty(6), 1), 6);
  }
  EXPECT_EQ(willow_count_avoiding(complete_graph(2), BitSubset::empty(2), 2), 2);
}

TEST(Willows, MatchDirectRecursion) {
  const Graph p3 = path_graph(3);
  for (unsigned size = 1; size <= 5; ++size) {
    EXPECT_EQ(willow_count_avoiding(p3, BitSubset::empty(3), size), willows(p3, 0, size));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(2 + seed % 5, 0.5, seed);
    for (std::uint64_t avoid = 0; avoid < (std::uint64_t{1} << g.order()); avoid += 3) {
      for (unsigned size = 1; size <= 5; ++size) {
        ASSERT_EQ(willow_count_avoiding(g, BitSubset(avoid, g.order()), size),
                  willows(g, avoid, size));
      }
    }
  }
}

TEST(Steiner, NamedInstances) {
  EXPECT_EQ(steiner_min_size(SteinerInstance(path_graph(4), BitSubset::of({0, 3}, 4))), 4U);
  EXPECT_EQ(steiner_min_size(SteinerInstance(star_graph(3), BitSubset::of({1, 2, 3}, 4))), 4U);
  EXPECT_EQ(steiner_min_size(SteinerInstance(complete_graph(3), BitSubset::of({0, 1}, 3))), 2U);
  EXPECT_EQ(steiner_min_size(SteinerInstance(path_graph(5), BitSubset::of({2}, 5))), 1U);
  EXPECT_EQ(steiner_min_size(SteinerInstance(Graph(3), BitSubset::of({0, 2}, 3))), std::nullopt);
}

TEST(Steiner, MatchesBruteForceOnRandomConnectedGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const unsigned n = 3 + seed % 6;
    const Graph g = random_connected_graph(n, 0.15, seed);
    const unsigned k = 2 + seed % 3;
    std::uint64_t mask = 0;
    for (std::uint64_t pick = seed * 7919; std::popcount(mask) < static_cast<int>(std::min(k, n)); pick = pick * 6364136223846793005ULL + 1442695040888963407ULL) {
      mask |= std::uint64_t{1} << ((pick >> 33) % n);
    }
    const BitSubset terminals(mask, n);
    ASSERT_EQ(steiner_min_size(SteinerInstance(g, terminals)), oracles::brute_steiner(g, terminals))
        << seed;
  }
}

TEST(Steiner, SieveSumsAreNonnegativeAndMonotone) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const unsigned n = 3 + seed % 5;
    const Graph g = random_graph(n, 0.35, seed);
    const SteinerInstance inst(g, BitSubset::of({0, n - 1}, n));
    bool positive = false;
    for (unsigned l = 1; l <= n; ++l) {
      const Count sum = steiner_sieve_sum(inst, l);
      EXPECT_GE(sum, 0);
      if (positive) EXPECT_GT(sum, 0);
      positive = sum > 0;
    }
  }
}

TEST(Steiner, AllTerminalsOnConnectedGraphIsSpanning) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const unsigned n = 1 + seed % 9;
    const Graph g = random_connected_graph(n, 0.2, seed);
    EXPECT_EQ(steiner_min_size(SteinerInstance(g, BitSubset::full(n))), n);
  }
}

TEST(Steiner, CheckedRingAgrees) {
  const SteinerInstance inst(random_connected_graph(8, 0.3, 4), BitSubset::of({0, 3, 7}, 8));
  for (unsigned l = 1; l <= 8; ++l) {
    EXPECT_EQ(to_count(steiner_sieve_sum<CheckedInt128>(inst, l)), steiner_sieve_sum(inst, l));
  }
}

TEST(Steiner, Errors) {
  EXPECT_THROW(SteinerInstance(path_graph(3), BitSubset::empty(3)), DomainError);
  EXPECT_THROW(SteinerInstance(path_graph(3), BitSubset::of({0}, 4)), DomainError);
}
