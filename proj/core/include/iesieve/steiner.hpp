#pragma once

#include <optional>

#include "iesieve/bitset.hpp"
#include "iesieve/count.hpp"
#include "iesieve/graph.hpp"

namespace iesieve {

/// A graph together with a nonempty set of terminal nodes.
class SteinerInstance {
 public:
  /// Throws DomainError when terminals is empty or over the wrong ground set.
  SteinerInstance(Graph graph, BitSubset terminals);

  const Graph& graph() const { return graph_; }
  BitSubset terminals() const { return terminals_; }

 private:
  Graph graph_;
  BitSubset terminals_;
};

/// Number of size-`size` willows avoiding `avoid`, summed over roots:
///
///   a^1(u) = 1,
///   a^k(u) = sum over edges uv, sum over i in 1..k-1 of a^i(u) a^(k-i)(v),
///
/// with u and v restricted to nodes outside `avoid`. The recurrence counts
/// rooted willows with a multiplicity that depends on the decomposition
/// order; the value is a positivity witness, not a census of distinct
/// willows. All layers 1..size are kept (O(size * n) ring values).
template <class Ring = Count>
Ring willow_count_avoiding(const Graph& graph, BitSubset avoid, unsigned size);

/// Sum over X <= terminals of (-1)^|X| a^l(X): weighted count of size-l
/// willows that touch every terminal. Always nonnegative; a negative value
/// throws CorruptionError.
template <class Ring = Count>
Ring steiner_sieve_sum(const SteinerInstance& instance, unsigned size);

/// Fewest nodes in a connected subgraph containing every terminal, i.e. the
/// least l in k..n with a positive sieve sum; nullopt when the terminals are
/// not all in one component. A single terminal gives 1.
std::optional<unsigned> steiner_min_size(const SteinerInstance& instance);

extern template Count willow_count_avoiding<Count>(const Graph&, BitSubset, unsigned);
extern template CheckedInt128 willow_count_avoiding<CheckedInt128>(const Graph&, BitSubset,
                                                                   unsigned);
extern template Count steiner_sieve_sum<Count>(const SteinerInstance&, unsigned);
extern template CheckedInt128 steiner_sieve_sum<CheckedInt128>(const SteinerInstance&, unsigned);

}  // namespace iesieve
