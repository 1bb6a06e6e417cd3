#include <gtest/gtest.h>

#include "iesieve/errors.hpp"
#include "iesieve/generators.hpp"
#include "iesieve/oracles.hpp"
#include "support.hpp"

using namespace iesieve;
using namespace iesieve::oracles;

TEST(Oracles, CoverCount) {
  EXPECT_EQ(brute_cover_count(fixtures::triangle_pendant(), 3), 18);
  EXPECT_EQ(brute_cover_count(fixtures::triangle_pendant(), 2), 0);
  EXPECT_EQ(brute_cover_count(complete_graph(3), 3), 6);
  EXPECT_EQ(brute_cover_count(Graph(1), 2), 1);
  EXPECT_THROW(brute_cover_count(Graph(6), 2), SizeCapError);
  EXPECT_THROW(brute_cover_count(Graph(3), 4), SizeCapError);
}

TEST(Oracles, Chromatic) {
  EXPECT_EQ(brute_chromatic(fixtures::triangle_pendant()), 3U);
  EXPECT_EQ(brute_chromatic(Graph(1)), 1U);
  EXPECT_EQ(brute_chromatic(cycle_graph(5)), 3U);
  EXPECT_EQ(brute_chromatic(cycle_graph(6)), 2U);
  EXPECT_TRUE(brute_colorable(Graph(0), 0));
  EXPECT_FALSE(brute_colorable(complete_graph(4), 3));
  EXPECT_THROW(brute_chromatic(Graph(9)), SizeCapError);
}

TEST(Oracles, IndependentSets) {
  EXPECT_EQ(brute_indep_count(fixtures::triangle_pendant(), BitSubset(0b1101, 4)), 4U);
  EXPECT_EQ(brute_indep_count(Graph(5), BitSubset::full(5)), 31U);
}

TEST(Oracles, Permanent) {
  EXPECT_EQ(brute_permanent(Matrix01::from_rows({{1, 1, 1}, {1, 1, 0}, {0, 1, 1}})), 3);
  EXPECT_EQ(brute_permanent(Matrix01::all_ones(5)), 120);
  EXPECT_THROW(brute_permanent(Matrix01(9)), SizeCapError);
}

TEST(Oracles, PerfectMatchings) {
  EXPECT_EQ(brute_pm_count(fixtures::two_matchings_graph()), 2);
  EXPECT_EQ(brute_pm_count(complete_graph(4)), 3);
  EXPECT_EQ(brute_pm_count(complete_graph(5)), 0);
  EXPECT_THROW(brute_pm_count(Graph(11)), SizeCapError);
}

TEST(Oracles, HamiltonianPaths) {
  EXPECT_EQ(brute_ham_count(complete_graph(4), 0), 6);
  EXPECT_EQ(brute_ham_count(path_graph(4), 0), 1);
  EXPECT_EQ(brute_ham_count(path_graph(4), 1), 0);
  EXPECT_THROW(brute_ham_count(Graph(9), 0), SizeCapError);
}

TEST(Oracles, Steiner) {
  EXPECT_EQ(brute_steiner(path_graph(4), BitSubset::of({0, 3}, 4)), 4U);
  EXPECT_EQ(brute_steiner(star_graph(3), BitSubset::of({1, 2, 3}, 4)), 4U);
  EXPECT_EQ(brute_steiner(Graph(2), BitSubset::full(2)), std::nullopt);
  EXPECT_THROW(brute_steiner(Graph(9), BitSubset::of({0}, 9)), SizeCapError);
}

TEST(Oracles, Paths) {
  EXPECT_TRUE(brute_kpath(star_graph(3), 3));
  EXPECT_FALSE(brute_kpath(star_graph(3), 4));
  EXPECT_FALSE(brute_kpath(complete_graph(3), 4));
  EXPECT_TRUE(brute_kpath_from(path_graph(5), 5, 0));
  EXPECT_FALSE(brute_kpath_from(path_graph(5), 5, 2));
  EXPECT_THROW(brute_kpath(Graph(11), 2), SizeCapError);
}
