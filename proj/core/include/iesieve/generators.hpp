#pragma once

#include <cstdint>

#include "iesieve/graph.hpp"
#include "iesieve/matrix.hpp"

// Named and seeded random instances for tests, benchmarks and examples.

namespace iesieve {

Graph complete_graph(unsigned n);
/// 0 - 1 - ... - (n-1)
Graph path_graph(unsigned n);
/// path_graph(n) plus the edge (n-1, 0); n >= 3.
Graph cycle_graph(unsigned n);
/// Centre 0 joined to leaves 1..leaves.
Graph star_graph(unsigned leaves);

/// Erdos-Renyi G(n, p), deterministic in seed.
Graph random_graph(unsigned n, double edge_probability, std::uint64_t seed);
/// A random spanning tree plus G(n, p) edges; connected for n >= 1.
Graph random_connected_graph(unsigned n, double extra_edge_probability, std::uint64_t seed);
/// Each entry 1 with the given probability.
Matrix01 random_matrix01(unsigned n, double one_probability, std::uint64_t seed);

}  // namespace iesieve
