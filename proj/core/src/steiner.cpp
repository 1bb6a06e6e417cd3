#include "iesieve/steiner.hpp"

#include <bit>
#include <string>
#include <vector>

#include "iesieve/errors.hpp"
#include "iesieve/sieve.hpp"

namespace iesieve {

SteinerInstance::SteinerInstance(Graph graph, BitSubset terminals)
    : graph_(std::move(graph)), terminals_(terminals) {
  if (terminals_.ground_size() != graph_.order()) {
    throw DomainError("terminal set over " + std::to_string(terminals_.ground_size()) +
                      " nodes for a graph with " + std::to_string(graph_.order()));
  }
  if (terminals_.is_empty()) throw DomainError("Steiner instance needs at least one terminal");
}

template <class Ring>
Ring willow_count_avoiding(const Graph& graph, BitSubset avoid, unsigned size) {
  if (size == 0) throw DomainError("willow size must be at least 1");
  if (avoid.ground_size() != graph.order()) {
    throw DomainError("avoid set does not match the graph's node set");
  }
  const unsigned n = graph.order();
  const std::uint64_t allowed = BitSubset::full_mask(n) & ~avoid.mask();

  // rooted[k][u] = a^k(u); around[k][u] = sum of a^k(v) over allowed
  // neighbours v of u. Index 0 is unused.
  std::vector<std::vector<Ring>> rooted(size + 1, std::vector<Ring>(n, Ring{0}));
  std::vector<std::vector<Ring>> around(size + 1, std::vector<Ring>(n, Ring{0}));
  auto fill_around = [&](unsigned k) {
    for (std::uint64_t u = allowed; u != 0; u &= u - 1) {
      const unsigned node = static_cast<unsigned>(std::countr_zero(u));
      Ring sum{0};
      for (std::uint64_t m = graph.adjacency_mask(node) & allowed; m != 0; m &= m - 1) {
        sum = sum + rooted[k][std::countr_zero(m)];
      }
      around[k][node] = sum;
    }
  };

  for (std::uint64_t u = allowed; u != 0; u &= u - 1) rooted[1][std::countr_zero(u)] = Ring{1};
  fill_around(1);
  for (unsigned k = 2; k <= size; ++k) {
    for (std::uint64_t u = allowed; u != 0; u &= u - 1) {
      const unsigned node = static_cast<unsigned>(std::countr_zero(u));
      Ring sum{0};
      for (unsigned i = 1; i < k; ++i) sum = sum + rooted[i][node] * around[k - i][node];
      rooted[k][node] = sum;
    }
    if (k < size) fill_around(k);
  }

  Ring total{0};
  for (std::uint64_t u = allowed; u != 0; u &= u - 1) {
    total = total + rooted[size][std::countr_zero(u)];
  }
  return total;
}

template <class Ring>
Ring steiner_sieve_sum(const SteinerInstance& instance, unsigned size) {
  const Graph& graph = instance.graph();
  const Ring sum = sieve_over_subsets(
      instance.terminals(),
      [&](BitSubset x) { return willow_count_avoiding<Ring>(graph, x, size); }, 8);
  return checked_nonnegative(sum, "Steiner willow sieve");
}

std::optional<unsigned> steiner_min_size(const SteinerInstance& instance) {
  const unsigned k = instance.terminals().size();
  if (k == 1) return 1U;
  for (unsigned l = k; l <= instance.graph().order(); ++l) {
    if (sgn(steiner_sieve_sum<Count>(instance, l)) > 0) return l;
  }
  return std::nullopt;
}

template Count willow_count_avoiding<Count>(const Graph&, BitSubset, unsigned);
template CheckedInt128 willow_count_avoiding<CheckedInt128>(const Graph&, BitSubset, unsigned);
template Count steiner_sieve_sum<Count>(const SteinerInstance&, unsigned);
template CheckedInt128 steiner_sieve_sum<CheckedInt128>(const SteinerInstance&, unsigned);

}  // namespace iesieve
