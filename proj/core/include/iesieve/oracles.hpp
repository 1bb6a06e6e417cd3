#pragma once

#include <cstdint>
#include <optional>

#include "iesieve/bitset.hpp"
#include "iesieve/count.hpp"
#include "iesieve/graph.hpp"
#include "iesieve/matrix.hpp"

// Brute-force reference implementations. Every function enumerates the
// objects being counted directly; none uses inclusion-exclusion or shares
// code with the sieves. Size caps are hard errors (SizeCapError).

namespace iesieve::oracles {

inline constexpr unsigned kCoverCap = 5;
inline constexpr unsigned kCoverColoursCap = 3;
inline constexpr unsigned kColouringCap = 8;
inline constexpr unsigned kIndependentCap = 20;
inline constexpr unsigned kPermanentCap = 8;
inline constexpr unsigned kMatchingCap = 10;
inline constexpr unsigned kHamiltonianCap = 8;
inline constexpr unsigned kSteinerCap = 8;
inline constexpr unsigned kPathCap = 10;

/// Ordered k-tuples of nonempty independent sets whose union is every node.
Count brute_cover_count(const Graph& graph, unsigned k);

/// Tries all k^n colour assignments.
bool brute_colorable(const Graph& graph, unsigned k);
unsigned brute_chromatic(const Graph& graph);

/// Nonempty independent subsets of s, each checked against the edge list.
std::uint64_t brute_indep_count(const Graph& graph, BitSubset s);

/// Sum over all n! permutations of the product of selected entries.
Count brute_permanent(const Matrix01& a);

/// Sets of n/2 pairwise disjoint edges.
Count brute_pm_count(const Graph& graph);

/// Orderings of the other nodes that form a path from `start`.
Count brute_ham_count(const Graph& graph, unsigned start);

/// Smallest connected induced node set containing every terminal.
std::optional<unsigned> brute_steiner(const Graph& graph, BitSubset terminals);

/// Whether some simple path on k nodes exists (anywhere, or from `start`).
bool brute_kpath(const Graph& graph, unsigned k);
bool brute_kpath_from(const Graph& graph, unsigned k, unsigned start);

}  // namespace iesieve::oracles
