#include "iesieve/kpath.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "iesieve/errors.hpp"
#include "iesieve/parallel.hpp"
#include "iesieve/splitmix.hpp"

namespace iesieve {
namespace {

struct WeightedNeighbour {
  unsigned node;
  std::uint32_t log_weight;  // edge weights are never zero here
};

std::vector<std::vector<WeightedNeighbour>> weighted_adjacency(const Graph& graph,
                                                              const KPathRandomness& rnd) {
  const auto& tables = GF16LogTables::instance();
  std::vector<std::vector<WeightedNeighbour>> out(graph.order());
  for (unsigned u = 0; u < graph.order(); ++u) {
    for (std::uint64_t m = graph.adjacency_mask(u); m != 0; m &= m - 1) {
      const unsigned v = static_cast<unsigned>(std::countr_zero(m));
      const GF16 w = rnd.edge(u, v);
      if (!w.is_zero()) out[u].push_back({v, tables.log(w)});
    }
  }
  return out;
}

constexpr std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

}  // namespace

KPathRandomness KPathRandomness::generate(std::uint64_t seed, const Graph& graph, unsigned k) {
  validate_path_length(k);
  KPathRandomness r;
  r.seed_ = seed;
  r.n_ = graph.order();
  r.k_ = k;
  r.edge_.assign(std::size_t{r.n_} * r.n_, GF16{});
  r.label_.assign(std::size_t{r.n_} * k, GF16{});

  SplitMix64 stream(seed);
  auto draw = [&] { return GF16(static_cast<std::uint16_t>(stream.next() & 0xFFFFU)); };
  for (auto [u, v] : graph.edges()) {
    const GF16 w = draw();
    r.edge_[u * r.n_ + v] = w;
    r.edge_[v * r.n_ + u] = w;
  }
  for (auto& value : r.label_) value = draw();
  return r;
}

void validate_path_length(unsigned k) {
  if (k < kMinPathLength || k > kMaxPathLength) {
    throw DomainError("path length k=" + std::to_string(k) + " outside " +
                      std::to_string(kMinPathLength) + ".." + std::to_string(kMaxPathLength));
  }
  if (2ULL * k * (k - 1) > (1ULL << 16)) {
    throw DomainError("GF(2^16) is too small for k=" + std::to_string(k));
  }
}

GF16 kpath_statistic(const Graph& graph, unsigned k, unsigned start, const KPathRandomness& rnd) {
  validate_path_length(k);
  const unsigned n = graph.order();
  if (start >= n) {
    throw DomainError("start node " + std::to_string(start) + " outside a graph with " +
                      std::to_string(n) + " nodes");
  }
  if (rnd.k() != k || rnd.order() != n) {
    throw DomainError("randomness was drawn for a different graph or path length");
  }
  const auto adjacency = weighted_adjacency(graph, rnd);

  const auto& tables = GF16LogTables::instance();
  constexpr std::uint32_t kZeroLog = ~std::uint32_t{0};

  // Position sets S are visited in Gray-code order, bit j-1 standing for
  // position j, so each R_S(v) differs from its predecessor by one label.
  return parallel_reduce<GF16>(
      std::uint64_t{1} << k,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<GF16> label_sum(n);
        std::vector<std::uint32_t> label_log(n);
        std::vector<GF16> walk(n);
        std::vector<std::uint32_t> walk_log(n);
        std::vector<GF16> extended(n);
        GF16 partial{};
        const std::uint64_t first = gray(begin);
        for (unsigned v = 0; v < n; ++v) {
          GF16 sum{};
          for (std::uint64_t m = first; m != 0; m &= m - 1) {
            sum += rnd.label(v, static_cast<unsigned>(std::countr_zero(m)) + 1);
          }
          label_sum[v] = sum;
        }
        for (std::uint64_t i = begin; i < end; ++i) {
          if (i != begin) {
            const unsigned flipped = static_cast<unsigned>(std::countr_zero(i)) + 1;
            for (unsigned v = 0; v < n; ++v) label_sum[v] += rnd.label(v, flipped);
          }
          if (label_sum[start].is_zero()) continue;
          for (unsigned v = 0; v < n; ++v) {
            label_log[v] = label_sum[v].is_zero() ? kZeroLog : tables.log(label_sum[v]);
          }

          std::fill(walk.begin(), walk.end(), GF16{});
          walk[start] = label_sum[start];
          for (unsigned step = 1; step < k; ++step) {
            for (unsigned v = 0; v < n; ++v) {
              walk_log[v] = walk[v].is_zero() ? kZeroLog : tables.log(walk[v]);
            }
            for (unsigned u = 0; u < n; ++u) {
              GF16 incoming{};
              if (label_log[u] != kZeroLog) {
                for (const auto& [v, log_weight] : adjacency[u]) {
                  if (walk_log[v] != kZeroLog) incoming += tables.exp(log_weight + walk_log[v]);
                }
              }
              extended[u] = incoming.is_zero() ? GF16{}
                                               : tables.exp(label_log[u] + tables.log(incoming));
            }
            std::swap(walk, extended);
          }
          for (GF16 w : walk) partial += w;
        }
        return partial;
      },
      16);
}

std::string_view to_string(KPathOutcome outcome) {
  return outcome == KPathOutcome::Found ? "found" : "not-found";
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64::mix(seed + (trial + 1) * SplitMix64::kGamma);
}

KPathOutcome kpath_detect(const Graph& graph, unsigned k, unsigned trials, std::uint64_t seed,
                          std::optional<unsigned> anchored_start) {
  validate_path_length(k);
  if (trials == 0) throw DomainError("k-path detection needs at least one trial");
  const unsigned n = graph.order();
  if (anchored_start && *anchored_start >= n) {
    throw DomainError("start node " + std::to_string(*anchored_start) + " outside a graph with " +
                      std::to_string(n) + " nodes");
  }
  for (unsigned t = 0; t < trials; ++t) {
    const auto rnd = KPathRandomness::generate(trial_seed(seed, t), graph, k);
    if (anchored_start) {
      if (!kpath_statistic(graph, k, *anchored_start, rnd).is_zero()) return KPathOutcome::Found;
      continue;
    }
    for (unsigned s = 0; s < n; ++s) {
      if (!kpath_statistic(graph, k, s, rnd).is_zero()) return KPathOutcome::Found;
    }
  }
  return KPathOutcome::NotFound;
}

}  // namespace iesieve
