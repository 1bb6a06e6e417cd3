#pragma once

#include <cstdint>
#include <string_view>

#include "iesieve/bitset.hpp"
#include "iesieve/count.hpp"
#include "iesieve/graph.hpp"
#include "iesieve/set_function.hpp"

namespace iesieve {

/// Largest set handled by indep_count_polyspace (cost 2^|s| per call).
inline constexpr unsigned kPolyspaceCap = 25;

/// g(S) = number of nonempty independent subsets of S, for every S.
struct IndepTable {
  Graph graph;
  SetFunction<std::uint64_t> counts;

  std::uint64_t operator()(BitSubset s) const { return counts.at(s); }
};

/// Builds g bottom-up with g(empty) = 0 and
///   g(S) = g(S \ {v}) + g(S \ N[v]) + 1,   v = lowest node of S.
IndepTable indep_table(const Graph& graph);

/// g(s) by enumerating every nonempty subset of s and testing independence;
/// polynomial space. Throws SizeCapError when |s| > kPolyspaceCap.
Count indep_count_polyspace(const Graph& graph, BitSubset s);

/// Indicator of the nonempty independent sets.
SetFunction<Count> independent_set_indicator(const Graph& graph);

enum class CoverMethod { Table, Polyspace, Mobius };

std::string_view to_string(CoverMethod method);
/// Inverse of to_string; throws DomainError for unknown names.
CoverMethod parse_cover_method(std::string_view name);

/// Number of ordered k-tuples of nonempty independent sets whose union is
/// every node:
///
///   sum over S <= N of (-1)^(n - |S|) g(S)^k.
///
/// This is positive iff the graph is k-colourable. It is not the number of
/// proper colourings: tuples may overlap. All three methods agree exactly.
///   Table:     g from indep_table, O*(2^n) time and space.
///   Polyspace: g(S) recomputed per term, O*(3^n) time, polynomial space.
///   Mobius:    ((f zeta)^k mu)(N) with f = independent_set_indicator.
template <class Ring = Count>
Ring cover_count(const Graph& graph, unsigned k, CoverMethod method);

/// (f zeta)^k mu: entry S counts ordered k-tuples of nonempty independent
/// sets with union exactly S.
template <class Ring = Count>
SetFunction<Ring> cover_table(const Graph& graph, unsigned k);

/// Smallest k with a positive k-cover count: 0 for the empty graph, 1 for a
/// nonempty edgeless graph.
unsigned chromatic_number(const Graph& graph);

extern template Count cover_count<Count>(const Graph&, unsigned, CoverMethod);
extern template CheckedInt128 cover_count<CheckedInt128>(const Graph&, unsigned, CoverMethod);
extern template SetFunction<Count> cover_table<Count>(const Graph&, unsigned);
extern template SetFunction<CheckedInt128> cover_table<CheckedInt128>(const Graph&, unsigned);

}  // namespace iesieve
