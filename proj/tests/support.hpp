#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "iesieve/count.hpp"
#include "iesieve/graph.hpp"
#include "iesieve/set_function.hpp"

namespace iesieve::fixtures {

// Triangle A=0, B=1, C=2 with a pendant D=3 on A.
inline Graph triangle_pendant() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

inline Graph two_matchings_graph() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 4}, {1, 5}, {0, 3}, {3, 4}, {2, 5}});
}

inline constexpr std::uint64_t A = 1, B = 2, C = 4, D = 8;

inline SetFunction<Count> random_setfn(unsigned n, std::mt19937_64& rng, long lo = -50,
                                       long hi = 50) {
  std::uniform_int_distribution<long> dist(lo, hi);
  SetFunction<Count> f(n);
  for (auto& v : f) v = dist(rng);
  return f;
}

inline std::string str(const Count& c) { return c.get_str(); }

}  // namespace iesieve::fixtures
