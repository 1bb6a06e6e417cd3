#include "iesieve/hampath.hpp"

#include <bit>
#include <string>
#include <vector>

#include "iesieve/errors.hpp"
#include "iesieve/limits.hpp"
#include "iesieve/sieve.hpp"

namespace iesieve {
namespace {

void require_node(const Graph& graph, unsigned v, const char* what) {
  if (v >= graph.order()) {
    throw DomainError(std::string(what) + " node " + std::to_string(v) +
                      " outside a graph with " + std::to_string(graph.order()) + " nodes");
  }
}

Count exact_half(const Count& directed) {
  if (!mpz_even_p(directed.get_mpz_t())) {
    throw CorruptionError("directed Hamiltonian path count " + to_decimal(directed) + " is odd");
  }
  return directed / 2;
}

CheckedInt128 exact_half(CheckedInt128 directed) {
  if (directed.native() % 2 != 0) {
    throw CorruptionError("directed Hamiltonian path count " + to_decimal(directed) + " is odd");
  }
  return CheckedInt128::from_native(directed.native() / 2);
}

}  // namespace

template <class Ring>
Ring walks_avoiding(const Graph& graph, BitSubset avoid, unsigned start, unsigned len) {
  require_node(graph, start, "start");
  if (len == 0) throw DomainError("walk length must be at least 1");
  if (avoid.ground_size() != graph.order()) {
    throw DomainError("avoid set does not match the graph's node set");
  }
  if (avoid.contains(start)) return Ring{0};

  const unsigned n = graph.order();
  const std::uint64_t allowed = BitSubset::full_mask(n) & ~avoid.mask();
  std::vector<Ring> current(n, Ring{0});
  std::vector<Ring> next(n, Ring{0});
  current[start] = Ring{1};
  for (unsigned step = 1; step < len; ++step) {
    for (std::uint64_t t = allowed; t != 0; t &= t - 1) {
      const unsigned to = static_cast<unsigned>(std::countr_zero(t));
      Ring sum{0};
      for (std::uint64_t m = graph.adjacency_mask(to) & allowed; m != 0; m &= m - 1) {
        sum = sum + current[std::countr_zero(m)];
      }
      next[to] = sum;
    }
    std::swap(current, next);
  }
  Ring total{0};
  for (std::uint64_t t = allowed; t != 0; t &= t - 1) total = total + current[std::countr_zero(t)];
  return total;
}

template <class Ring>
Ring hamiltonian_count_from(const Graph& graph, unsigned start) {
  const unsigned n = graph.order();
  if (n == 0) throw DomainError("Hamiltonian paths need at least one node");
  require_at_most(n, kHamiltonianCap, "Hamiltonian path count");
  require_node(graph, start, "start");
  const Ring count = sieve_over_subsets(graph.nodes().without(start), [&](BitSubset x) {
    return walks_avoiding<Ring>(graph, x, start, n);
  });
  return checked_nonnegative(count, "Hamiltonian sieve");
}

template <class Ring>
Ring hamiltonian_count_total(const Graph& graph) {
  const unsigned n = graph.order();
  if (n < 2) throw DomainError("total Hamiltonian path count needs n >= 2");
  Ring directed{0};
  for (unsigned s = 0; s < n; ++s) directed = directed + hamiltonian_count_from<Ring>(graph, s);
  return exact_half(directed);
}

template Count walks_avoiding<Count>(const Graph&, BitSubset, unsigned, unsigned);
template CheckedInt128 walks_avoiding<CheckedInt128>(const Graph&, BitSubset, unsigned, unsigned);
template Count hamiltonian_count_from<Count>(const Graph&, unsigned);
template CheckedInt128 hamiltonian_count_from<CheckedInt128>(const Graph&, unsigned);
template Count hamiltonian_count_total<Count>(const Graph&);
template CheckedInt128 hamiltonian_count_total<CheckedInt128>(const Graph&);

}  // namespace iesieve
