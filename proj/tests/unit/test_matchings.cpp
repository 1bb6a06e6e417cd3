#include <gtest/gtest.h>

#include <vector>

#include "iesieve/errors.hpp"
#include "iesieve/generators.hpp"
#include "iesieve/matchings.hpp"
#include "iesieve/oracles.hpp"
#include "support.hpp"

using namespace iesieve;

namespace {

Matrix01 three_matchings() { return Matrix01::from_rows({{1, 1, 1}, {1, 1, 0}, {0, 1, 1}}); }

}  // namespace

TEST(Permanent, ThreeByThreeMatrix) {
  EXPECT_EQ(permanent_ryser(three_matchings()), 3);
  EXPECT_EQ(permanent_ryser_gray(three_matchings()), 3);
  EXPECT_EQ(permanent_ryser<CheckedInt128>(three_matchings()), CheckedInt128(3));
  EXPECT_EQ(permanent_ryser_gray<CheckedInt128>(three_matchings()), CheckedInt128(3));
}

TEST(Permanent, NamedMatrices) {
  EXPECT_EQ(permanent_ryser(Matrix01::identity(6)), 1);
  EXPECT_EQ(permanent_ryser_gray(Matrix01::all_ones(7)), 5040);
  EXPECT_EQ(permanent_ryser(Matrix01(0)), 1);
  EXPECT_EQ(permanent_ryser_gray(Matrix01(0)), 1);
  EXPECT_EQ(permanent_ryser_gray(Matrix01(5)), 0);
  EXPECT_EQ(permanent_ryser_gray(Matrix01::all_ones(20)), Count("2432902008176640000"));
}

TEST(Permanent, PlainGrayAndBruteForceAgree) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Matrix01 a = random_matrix01(1 + seed % 8, 0.3 + 0.05 * static_cast<double>(seed % 10), seed);
    const Count expected = oracles::brute_permanent(a);
    ASSERT_EQ(permanent_ryser(a), expected) << seed;
    ASSERT_EQ(permanent_ryser_gray(a), expected) << seed;
  }
}

TEST(Permanent, SizeCap) {
  EXPECT_THROW(permanent_ryser(Matrix01(kPermanentCap + 1)), SizeCapError);
}

TEST(PerfectMatchings, SixNodesSevenEdges) {
  std::vector<PmTerm> terms;
  EXPECT_EQ(pm_count_general(fixtures::two_matchings_graph(), [&](const PmTerm& t) { terms.push_back(t); }), 2);
  EXPECT_EQ(terms.size(), 64U);
  const auto full = std::find_if(terms.begin(), terms.end(),
                                 [](const PmTerm& t) { return t.subset.size() == 6; });
  ASSERT_NE(full, terms.end());
  EXPECT_EQ(full->inner_edges, 7U);
  EXPECT_EQ(full->binomial, 35);
  EXPECT_EQ(full->sign, 1);
}

TEST(PerfectMatchings, NamedGraphs) {
  EXPECT_EQ(pm_count_general(Graph(0)), 1);
  EXPECT_EQ(pm_count_general(complete_graph(3)), 0);
  EXPECT_EQ(pm_count_general(complete_graph(6)), 15);
  EXPECT_EQ(pm_count_general(complete_graph(10)), 945);
  EXPECT_EQ(pm_count_general(cycle_graph(8)), 2);
  EXPECT_EQ(pm_count_general(path_graph(6)), 1);
  EXPECT_EQ(pm_count_general<CheckedInt128>(complete_graph(8)), CheckedInt128(105));
}

TEST(PerfectMatchings, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph(1 + seed % 10, 0.3 + 0.05 * static_cast<double>(seed % 8), seed);
    ASSERT_EQ(pm_count_general(g), oracles::brute_pm_count(g)) << seed;
  }
}

TEST(PerfectMatchings, BipartiteGraphMatchesPermanent) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const unsigned half = 1 + seed % 5;
    const Matrix01 a = random_matrix01(half, 0.5, seed);
    std::vector<Edge> edges;
    for (unsigned i = 0; i < half; ++i) {
      for (unsigned j = 0; j < half; ++j) {
        if (a.at(i, j)) edges.emplace_back(i, half + j);
      }
    }
    EXPECT_EQ(pm_count_general(Graph::from_edges(2 * half, edges)), permanent_ryser(a));
  }
}
