#include "iesieve/generators.hpp"

#include <random>
#include <set>
#include <vector>

#include "iesieve/errors.hpp"

namespace iesieve {

Graph complete_graph(unsigned n) {
  std::vector<Edge> edges;
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(unsigned n) {
  std::vector<Edge> edges;
  for (unsigned v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(unsigned n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (unsigned v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(unsigned leaves) {
  std::vector<Edge> edges;
  for (unsigned v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph random_graph(unsigned n, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(unsigned n, double extra_edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<Edge> edges;
  for (unsigned v = 1; v < n; ++v) {
    std::uniform_int_distribution<unsigned> parent(0, v - 1);
    edges.emplace(parent(rng), v);
  }
  std::bernoulli_distribution coin(extra_edge_probability);
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace(u, v);
    }
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

Matrix01 random_matrix01(unsigned n, double one_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(one_probability);
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (auto& row : rows) {
    for (int& e : row) e = coin(rng) ? 1 : 0;
  }
  return Matrix01::from_rows(rows);
}

}  // namespace iesieve
