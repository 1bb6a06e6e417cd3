#include <gtest/gtest.h>

#include "iesieve/errors.hpp"
#include "iesieve/generators.hpp"
#include "iesieve/hampath.hpp"
#include "iesieve/oracles.hpp"
#include "iesieve/sieve.hpp"
#include "support.hpp"

using namespace iesieve;

namespace {

Count factorial(unsigned n) {
  Count f{1};
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST(Hamiltonian, NamedGraphs) {
  EXPECT_EQ(hamiltonian_count_from(path_graph(3), 0), 1);
  EXPECT_EQ(hamiltonian_count_from(path_graph(3), 1), 0);
  EXPECT_EQ(hamiltonian_count_from(complete_graph(4), 0), 6);
  EXPECT_EQ(hamiltonian_count_total(path_graph(4)), 1);
  EXPECT_EQ(hamiltonian_count_total(complete_graph(3)), 3);
  EXPECT_EQ(hamiltonian_count_total(cycle_graph(4)), 4);
  EXPECT_EQ(hamiltonian_count_from(Graph(1), 0), 1);
}

TEST(Hamiltonian, CompleteGraphsFixedStart) {
  for (unsigned n = 1; n <= 10; ++n) {
    EXPECT_EQ(hamiltonian_count_from(complete_graph(n), 0), factorial(n - 1)) << n;
    EXPECT_EQ(hamiltonian_count_from<CheckedInt128>(complete_graph(n), n - 1),
              CheckedInt128(factorial(n - 1).get_si()));
  }
}

TEST(Hamiltonian, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph(1 + seed % 7, 0.3 + 0.1 * static_cast<double>(seed % 6), seed);
    for (unsigned s = 0; s < g.order(); ++s) {
      ASSERT_EQ(hamiltonian_count_from(g, s), oracles::brute_ham_count(g, s)) << seed << " " << s;
    }
  }
}

TEST(Hamiltonian, ExhaustiveSmallGraphs) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto pairs = complete_graph(n).edges();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
      std::vector<Edge> chosen;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((bits >> i) & 1U) chosen.push_back(pairs[i]);
      }
      const Graph g = Graph::from_edges(n, chosen);
      Count directed{0};
      for (unsigned s = 0; s < n; ++s) {
        const Count c = hamiltonian_count_from(g, s);
        ASSERT_EQ(c, oracles::brute_ham_count(g, s));
        directed += c;
      }
      if (n >= 2) EXPECT_EQ(2 * hamiltonian_count_total(g), directed);
    }
  }
}

TEST(Hamiltonian, RestrictedSieveEqualsFullSieve) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(2 + seed % 5, 0.6, seed);
    const unsigned n = g.order();
    for (unsigned s = 0; s < n; ++s) {
      const Count full = sieve_complement_of_union(n, [&](BitSubset x) {
        return walks_avoiding(g, x, s, n);
      });
      EXPECT_EQ(full, hamiltonian_count_from(g, s));
      // Terms with the start inside X vanish.
      EXPECT_EQ(walks_avoiding(g, BitSubset::singleton(s, n), s, n), 0);
    }
  }
}

TEST(Hamiltonian, WalksBoundPaths) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(2 + seed % 7, 0.5, seed);
    for (unsigned s = 0; s < g.order(); ++s) {
      EXPECT_GE(walks_avoiding(g, BitSubset::empty(g.order()), s, g.order()),
                hamiltonian_count_from(g, s));
    }
  }
}

TEST(Walks, SmallCounts) {
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(walks_avoiding(k3, BitSubset::empty(3), 0, 1), 1);
  EXPECT_EQ(walks_avoiding(k3, BitSubset::empty(3), 0, 3), 4);
  EXPECT_EQ(walks_avoiding(k3, BitSubset::of({1}, 3), 0, 3), 1);
}

TEST(Hamiltonian, Errors) {
  EXPECT_THROW(hamiltonian_count_from(path_graph(3), 3), DomainError);
  EXPECT_THROW(hamiltonian_count_total(Graph(1)), DomainError);
  EXPECT_THROW(hamiltonian_count_from(Graph(kHamiltonianCap + 1), 0), SizeCapError);
}
