#include "iesieve/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "iesieve/errors.hpp"
#include "iesieve/limits.hpp"

namespace iesieve::oracles {
namespace {

bool independent_by_edges(const std::vector<Edge>& edges, std::uint64_t s) {
  for (auto [u, v] : edges) {
    if (((s >> u) & 1U) && ((s >> v) & 1U)) return false;
  }
  return true;
}

void count_covers(const std::vector<std::uint64_t>& sets, unsigned remaining,
                  std::uint64_t covered, std::uint64_t full, Count& total) {
  if (remaining == 0) {
    if (covered == full) ++total;
    return;
  }
  for (std::uint64_t s : sets) count_covers(sets, remaining - 1, covered | s, full, total);
}

void require_node(const Graph& graph, unsigned v) {
  if (v >= graph.order()) throw DomainError("node " + std::to_string(v) + " out of range");
}

bool extend_path(const Graph& graph, unsigned at, std::uint64_t visited, unsigned remaining) {
  if (remaining == 0) return true;
  for (unsigned next = 0; next < graph.order(); ++next) {
    if (graph.has_edge(at, next) && ((visited >> next) & 1U) == 0) {
      if (extend_path(graph, next, visited | (std::uint64_t{1} << next), remaining - 1)) {
        return true;
      }
    }
  }
  return false;
}

bool connected_within(const Graph& graph, std::uint64_t nodes) {
  if (nodes == 0) return false;
  std::vector<unsigned> stack{static_cast<unsigned>(std::countr_zero(nodes))};
  std::uint64_t reached = std::uint64_t{1} << stack.back();
  while (!stack.empty()) {
    const unsigned u = stack.back();
    stack.pop_back();
    for (unsigned v = 0; v < graph.order(); ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((nodes & bit) && !(reached & bit) && graph.has_edge(u, v)) {
        reached |= bit;
        stack.push_back(v);
      }
    }
  }
  return reached == nodes;
}

}  // namespace

Count brute_cover_count(const Graph& graph, unsigned k) {
  require_at_most(graph.order(), kCoverCap, "brute-force cover count");
  require_at_most(k, kCoverColoursCap, "brute-force cover count colours");
  if (k == 0) throw DomainError("cover count needs k >= 1");
  const auto edges = graph.edges();
  const std::uint64_t full = BitSubset::full_mask(graph.order());
  std::vector<std::uint64_t> independent;
  for (std::uint64_t s = 1; s <= full; ++s) {
    if (independent_by_edges(edges, s)) independent.push_back(s);
  }
  Count total{0};
  count_covers(independent, k, 0, full, total);
  return total;
}

bool brute_colorable(const Graph& graph, unsigned k) {
  const unsigned n = graph.order();
  require_at_most(n, kColouringCap, "brute-force colouring");
  if (n == 0) return true;
  if (k == 0) return false;
  const auto edges = graph.edges();
  std::vector<unsigned> colour(n, 0);
  while (true) {
    const bool proper = std::all_of(edges.begin(), edges.end(),
                                    [&](const Edge& e) { return colour[e.first] != colour[e.second]; });
    if (proper) return true;
    unsigned i = 0;
    while (i < n && ++colour[i] == k) colour[i++] = 0;
    if (i == n) return false;
  }
}

unsigned brute_chromatic(const Graph& graph) {
  require_at_most(graph.order(), kColouringCap, "brute-force chromatic number");
  for (unsigned k = 0;; ++k) {
    if (brute_colorable(graph, k)) return k;
  }
}

std::uint64_t brute_indep_count(const Graph& graph, BitSubset s) {
  require_at_most(s.size(), kIndependentCap, "brute-force independent-set count");
  if (s.ground_size() != graph.order()) throw DomainError("subset does not match graph");
  const auto edges = graph.edges();
  std::uint64_t count = 0;
  s.for_each_subset([&](BitSubset r) {
    if (!r.is_empty() && independent_by_edges(edges, r.mask())) ++count;
  });
  return count;
}

Count brute_permanent(const Matrix01& a) {
  const unsigned n = a.size();
  require_at_most(n, kPermanentCap, "brute-force permanent");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  Count total{0};
  do {
    bool all_ones = true;
    for (unsigned i = 0; i < n && all_ones; ++i) all_ones = a.at(i, perm[i]);
    if (all_ones) ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Count brute_pm_count(const Graph& graph) {
  const unsigned n = graph.order();
  require_at_most(n, kMatchingCap, "brute-force perfect matchings");
  if (n % 2 != 0) return Count{0};
  const auto edges = graph.edges();
  const unsigned target = n / 2;
  Count total{0};
  // Choose target edges with increasing indices, keeping them disjoint.
  auto choose = [&](auto&& self, std::size_t from, unsigned chosen, std::uint64_t used) -> void {
    if (chosen == target) {
      ++total;
      return;
    }
    for (std::size_t i = from; i < edges.size(); ++i) {
      const std::uint64_t ends = (std::uint64_t{1} << edges[i].first) |
                                 (std::uint64_t{1} << edges[i].second);
      if ((used & ends) == 0) self(self, i + 1, chosen + 1, used | ends);
    }
  };
  choose(choose, 0, 0, 0);
  return total;
}

Count brute_ham_count(const Graph& graph, unsigned start) {
  const unsigned n = graph.order();
  require_at_most(n, kHamiltonianCap, "brute-force Hamiltonian paths");
  require_node(graph, start);
  std::vector<unsigned> rest;
  for (unsigned v = 0; v < n; ++v) {
    if (v != start) rest.push_back(v);
  }
  Count total{0};
  do {
    unsigned prev = start;
    bool ok = true;
    for (unsigned v : rest) {
      if (!graph.has_edge(prev, v)) {
        ok = false;
        break;
      }
      prev = v;
    }
    if (ok) ++total;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return total;
}

std::optional<unsigned> brute_steiner(const Graph& graph, BitSubset terminals) {
  const unsigned n = graph.order();
  require_at_most(n, kSteinerCap, "brute-force Steiner tree");
  if (terminals.ground_size() != n) throw DomainError("terminals do not match graph");
  if (terminals.is_empty()) throw DomainError("Steiner instance needs at least one terminal");
  std::optional<unsigned> best;
  terminals.complement().for_each_subset([&](BitSubset extra) {
    const std::uint64_t nodes = terminals.mask() | extra.mask();
    const unsigned size = static_cast<unsigned>(std::popcount(nodes));
    if ((!best || size < *best) && connected_within(graph, nodes)) best = size;
  });
  return best;
}

bool brute_kpath_from(const Graph& graph, unsigned k, unsigned start) {
  require_at_most(graph.order(), kPathCap, "brute-force path search");
  require_node(graph, start);
  if (k == 0) return true;
  return extend_path(graph, start, std::uint64_t{1} << start, k - 1);
}

bool brute_kpath(const Graph& graph, unsigned k) {
  require_at_most(graph.order(), kPathCap, "brute-force path search");
  for (unsigned s = 0; s < graph.order(); ++s) {
    if (brute_kpath_from(graph, k, s)) return true;
  }
  return k == 0;
}

}  // namespace iesieve::oracles
