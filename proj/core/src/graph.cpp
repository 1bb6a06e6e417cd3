#include "iesieve/graph.hpp"

#include <bit>
#include <string>

#include "iesieve/errors.hpp"

namespace iesieve {

Graph::Graph(unsigned n) : n_(n), adj_(n, 0) {
  if (n > BitSubset::kMaxGround) {
    throw DomainError("graph with " + std::to_string(n) + " nodes exceeds 63");
  }
}

Graph Graph::from_edges(unsigned n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw DomainError("self-loop at node " + std::to_string(u));
    if (g.has_edge(u, v)) {
      throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    g.adj_[u] |= std::uint64_t{1} << v;
    g.adj_[v] |= std::uint64_t{1} << u;
    ++g.m_;
  }
  return g;
}

unsigned Graph::degree(unsigned v) const {
  return static_cast<unsigned>(std::popcount(adj_.at(v)));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (unsigned u = 0; u < n_; ++u) {
    for (std::uint64_t m = adj_[u] >> u >> 1; m != 0; m &= m - 1) {
      out.emplace_back(u, u + 1 + static_cast<unsigned>(std::countr_zero(m)));
    }
  }
  return out;
}

std::size_t Graph::edges_inside(std::uint64_t s) const {
  std::size_t twice = 0;
  for (std::uint64_t m = s; m != 0; m &= m - 1) {
    twice += static_cast<std::size_t>(std::popcount(adj_[std::countr_zero(m)] & s));
  }
  return twice / 2;
}

}  // namespace iesieve
