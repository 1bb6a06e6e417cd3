#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "iesieve/bitset.hpp"

namespace iesieve {

using Edge = std::pair<unsigned, unsigned>;

/// Undirected simple graph on nodes 0..n-1 (n <= 63), stored as one
/// adjacency bitmask per node. Immutable once built.
class Graph {
 public:
  /// The empty graph (n = 0).
  Graph() = default;
  /// Edgeless graph on n nodes.
  explicit Graph(unsigned n);

  /// Throws DomainError on self-loops, duplicate edges or out-of-range ends.
  /// Edge orientation is irrelevant.
  static Graph from_edges(unsigned n, std::span<const Edge> edges);
  static Graph from_edges(unsigned n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  unsigned order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  BitSubset nodes() const { return BitSubset::full(n_); }
  BitSubset neighbours(unsigned v) const { return BitSubset(adj_.at(v), n_); }
  /// N[v] = {v} plus neighbours.
  BitSubset closed_neighbourhood(unsigned v) const { return neighbours(v).with(v); }

  /// Raw adjacency row; no bounds check.
  std::uint64_t adjacency_mask(unsigned v) const { return adj_[v]; }
  std::span<const std::uint64_t> adjacency() const { return adj_; }

  bool has_edge(unsigned u, unsigned v) const {
    return u < n_ && v < n_ && ((adj_[u] >> v) & 1U) != 0;
  }
  unsigned degree(unsigned v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Number of edges with both ends in s.
  std::size_t edges_inside(std::uint64_t s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  unsigned n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> adj_;
};

}  // namespace iesieve
