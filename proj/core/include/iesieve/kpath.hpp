#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "iesieve/gf16.hpp"
#include "iesieve/graph.hpp"

namespace iesieve {

inline constexpr unsigned kMinPathLength = 2;
inline constexpr unsigned kMaxPathLength = 32;

/// Random field values for one evaluation of the k-path statistic: a weight
/// r(e) per edge and a label r(v, j) per node and position j in 1..k.
///
/// Values are the low 16 bits of successive SplitMix64 outputs from `seed`,
/// drawn for all edges in lexicographic (min, max) order and then for all
/// (v, j) pairs in lexicographic order.
class KPathRandomness {
 public:
  static KPathRandomness generate(std::uint64_t seed, const Graph& graph, unsigned k);

  std::uint64_t seed() const { return seed_; }
  unsigned k() const { return k_; }
  unsigned order() const { return n_; }

  /// r(uv); zero for non-edges.
  GF16 edge(unsigned u, unsigned v) const { return edge_[u * n_ + v]; }
  /// r(v, j) for j in 1..k.
  GF16 label(unsigned v, unsigned j) const { return label_[v * k_ + (j - 1)]; }

  friend bool operator==(const KPathRandomness&, const KPathRandomness&) = default;

 private:
  std::uint64_t seed_ = 0;
  unsigned n_ = 0;
  unsigned k_ = 0;
  std::vector<GF16> edge_;   // n x n, symmetric
  std::vector<GF16> label_;  // n x k
};

/// Throws DomainError unless 2 <= k <= 32 and 2k(k-1) <= |GF(2^16)|.
void validate_path_length(unsigned k);

/// Sum over permutations pi of K = {1..k} and walks W = (start = w_1, ..., w_k)
/// of prod r(w_i w_{i+1}) * prod r(w_i, pi(i)), over GF(2^16).
///
/// Evaluated as the sum over S <= K of the sum over maps phi: K -> S (signs
/// vanish in characteristic 2). For fixed S the phi-sum factorises per
/// position with R_S(v) = sum over j in S of r(v, j):
///   d_1(v) = [v = start] R_S(v),   d_{i+1}(u) = R_S(u) sum_v r(vu) d_i(v).
/// O(2^k k |E|) field operations; terms over S run in parallel.
///
/// Walks that repeat a node cancel in pairs, so the result is always zero
/// when no simple k-node path starts at `start`.
GF16 kpath_statistic(const Graph& graph, unsigned k, unsigned start, const KPathRandomness& rnd);

enum class KPathOutcome { Found, NotFound };
std::string_view to_string(KPathOutcome outcome);

/// Seed used by trial `trial` of a detection run: the (trial+1)-th output of
/// SplitMix64 started at `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Repeats the statistic over `trials` independent randomness draws and
/// reports Found on the first nonzero value. Without an anchor, each trial
/// tries every start node with the same draw. Found is never a false
/// positive; NotFound is wrong with probability below 2^-trials when a
/// k-node path exists.
KPathOutcome kpath_detect(const Graph& graph, unsigned k, unsigned trials, std::uint64_t seed,
                          std::optional<unsigned> anchored_start = std::nullopt);

}  // namespace iesieve
