#pragma once

#include "iesieve/bitset.hpp"
#include "iesieve/count.hpp"
#include "iesieve/graph.hpp"

namespace iesieve {

inline constexpr unsigned kHamiltonianCap = 30;

/// Walks v_1..v_len with v_1 = start and every v_i outside `avoid`, counted
/// by dynamic programming over lengths and endpoints. Two length layers are
/// live at a time; O(len * |E|). Zero when start is in `avoid`.
/// Throws DomainError for len == 0 or start out of range.
template <class Ring = Count>
Ring walks_avoiding(const Graph& graph, BitSubset avoid, unsigned start, unsigned len);

/// Hamiltonian paths beginning at `start`, sieved from length-n walks:
///
///   sum over X <= N \ {start} of (-1)^|X| walks_avoiding(X)
///
/// Terms with start in X vanish and are skipped. Polynomial space.
template <class Ring = Count>
Ring hamiltonian_count_from(const Graph& graph, unsigned start);

/// Undirected Hamiltonian paths: half the sum over all start nodes.
/// Requires n >= 2.
template <class Ring = Count>
Ring hamiltonian_count_total(const Graph& graph);

extern template Count walks_avoiding<Count>(const Graph&, BitSubset, unsigned, unsigned);
extern template CheckedInt128 walks_avoiding<CheckedInt128>(const Graph&, BitSubset, unsigned,
                                                            unsigned);
extern template Count hamiltonian_count_from<Count>(const Graph&, unsigned);
extern template CheckedInt128 hamiltonian_count_from<CheckedInt128>(const Graph&, unsigned);
extern template Count hamiltonian_count_total<Count>(const Graph&);
extern template CheckedInt128 hamiltonian_count_total<CheckedInt128>(const Graph&);

}  // namespace iesieve
