#include "iesieve/coloring.hpp"

#include <bit>
#include <string>
#include <vector>

#include "iesieve/errors.hpp"
#include "iesieve/limits.hpp"
#include "iesieve/parallel.hpp"
#include "iesieve/transforms.hpp"

namespace iesieve {
namespace {

bool is_independent(const Graph& graph, std::uint64_t s) {
  for (std::uint64_t m = s; m != 0; m &= m - 1) {
    if ((graph.adjacency_mask(static_cast<unsigned>(std::countr_zero(m))) & s) != 0) return false;
  }
  return true;
}

std::uint64_t count_independent_subsets(const Graph& graph, std::uint64_t s) {
  std::uint64_t count = 0;
  for (std::uint64_t r = s; r != 0; r = (r - 1) & s) {
    if (is_independent(graph, r)) ++count;
  }
  return count;
}

template <class Ring>
SetFunction<Ring> indicator(const Graph& graph) {
  const unsigned n = graph.order();
  require_table(n, "independent-set indicator");
  SetFunction<Ring> f(n);
  std::vector<std::uint8_t> independent(std::size_t{1} << n, 0);
  independent[0] = 1;
  for (std::uint64_t s = 1; s < f.size(); ++s) {
    const unsigned v = static_cast<unsigned>(std::countr_zero(s));
    const std::uint64_t rest = s & (s - 1);
    independent[s] = independent[rest] && (graph.adjacency_mask(v) & rest) == 0;
    if (independent[s]) f[s] = Ring{1};
  }
  return f;
}

/// Signed multiplicity of each g-value in sum (-1)^(n-|S|) g(S)^k, so the
/// sum becomes sum over values v of weight[v] * v^k.
std::vector<std::int64_t> signed_value_histogram(const IndepTable& table) {
  const unsigned n = table.graph.order();
  const auto& g = table.counts;
  std::vector<std::int64_t> weight(g[g.full_mask()] + 1, 0);
  for (std::uint64_t s = 0; s < g.size(); ++s) {
    weight[g[s]] += ((n - std::popcount(s)) % 2 == 0) ? 1 : -1;
  }
  return weight;
}

template <class Ring>
Ring from_signed(std::int64_t v) {
  return Ring{static_cast<long>(v)};
}

void require_positive_k(unsigned k) {
  if (k == 0) throw DomainError("cover count needs k >= 1");
}

}  // namespace

IndepTable indep_table(const Graph& graph) {
  const unsigned n = graph.order();
  require_table(n, "independent-set table");
  SetFunction<std::uint64_t> g(n);
  std::vector<std::uint64_t> closed(n);
  for (unsigned v = 0; v < n; ++v) closed[v] = graph.closed_neighbourhood(v).mask();
  for (std::uint64_t s = 1; s < g.size(); ++s) {
    const unsigned v = static_cast<unsigned>(std::countr_zero(s));
    g[s] = g[s & (s - 1)] + g[s & ~closed[v]] + 1;
  }
  return IndepTable{graph, std::move(g)};
}

Count indep_count_polyspace(const Graph& graph, BitSubset s) {
  if (s.ground_size() != graph.order()) {
    throw DomainError("subset ground size " + std::to_string(s.ground_size()) +
                      " does not match graph order " + std::to_string(graph.order()));
  }
  require_at_most(s.size(), kPolyspaceCap, "polynomial-space independent-set count");
  return Count{count_independent_subsets(graph, s.mask())};
}

SetFunction<Count> independent_set_indicator(const Graph& graph) {
  return indicator<Count>(graph);
}

std::string_view to_string(CoverMethod method) {
  switch (method) {
    case CoverMethod::Table:
      return "table";
    case CoverMethod::Polyspace:
      return "polyspace";
    case CoverMethod::Mobius:
      return "mobius";
  }
  return "unknown";
}

CoverMethod parse_cover_method(std::string_view name) {
  if (name == "table") return CoverMethod::Table;
  if (name == "polyspace") return CoverMethod::Polyspace;
  if (name == "mobius") return CoverMethod::Mobius;
  throw DomainError("unknown cover method '" + std::string(name) +
                    "' (expected table, polyspace or mobius)");
}

template <class Ring>
SetFunction<Ring> cover_table(const Graph& graph, unsigned k) {
  require_positive_k(k);
  SetFunction<Ring> h = indicator<Ring>(graph);
  zeta_yates_inplace(h);
  h = pointwise_pow(std::move(h), k);
  mobius_yates_inplace(h);
  return h;
}

template <class Ring>
Ring cover_count(const Graph& graph, unsigned k, CoverMethod method) {
  require_positive_k(k);
  const unsigned n = graph.order();
  switch (method) {
    case CoverMethod::Table: {
      const auto weight = signed_value_histogram(indep_table(graph));
      Ring total{0};
      for (std::size_t v = 1; v < weight.size(); ++v) {
        if (weight[v] != 0) total = total + from_signed<Ring>(weight[v]) * ring_pow(Ring{v}, k);
      }
      return checked_nonnegative(total, "cover count (table)");
    }
    case CoverMethod::Polyspace: {
      require_at_most(n, kPolyspaceCap, "polynomial-space cover count");
      const std::uint64_t full = BitSubset::full_mask(n);
      Ring total = parallel_reduce<Ring>(
          std::uint64_t{1} << n,
          [&](std::uint64_t begin, std::uint64_t end) {
            Ring partial{0};
            for (std::uint64_t s = begin; s < end; ++s) {
              const Ring term = ring_pow(Ring{count_independent_subsets(graph, s)}, k);
              if (std::popcount(full ^ s) % 2 == 0) {
                partial = partial + term;
              } else {
                partial = partial - term;
              }
            }
            return partial;
          },
          64);
      return checked_nonnegative(total, "cover count (polyspace)");
    }
    case CoverMethod::Mobius: {
      const auto table = cover_table<Ring>(graph, k);
      return checked_nonnegative(Ring(table[table.full_mask()]), "cover count (mobius)");
    }
  }
  throw DomainError("unknown cover method");
}

unsigned chromatic_number(const Graph& graph) {
  const unsigned n = graph.order();
  if (n == 0) return 0;
  if (graph.edge_count() == 0) return 1;

  const auto weight = signed_value_histogram(indep_table(graph));
  std::vector<std::uint64_t> values;
  std::vector<Count> weighted_powers;  // weight[v] * v^k for the current k
  for (std::size_t v = 1; v < weight.size(); ++v) {
    if (weight[v] != 0) {
      values.push_back(v);
      weighted_powers.push_back(from_signed<Count>(weight[v]));
    }
  }
  for (unsigned k = 1; k <= n; ++k) {
    Count total{0};
    for (std::size_t i = 0; i < values.size(); ++i) {
      weighted_powers[i] *= static_cast<unsigned long>(values[i]);
      total += weighted_powers[i];
    }
    if (sgn(total) < 0) throw CorruptionError("cover count negative at k=" + std::to_string(k));
    if (sgn(total) > 0) return k;
  }
  throw CorruptionError("no k <= n admits a cover; the sieve is inconsistent");
}

template Count cover_count<Count>(const Graph&, unsigned, CoverMethod);
template CheckedInt128 cover_count<CheckedInt128>(const Graph&, unsigned, CoverMethod);
template SetFunction<Count> cover_table<Count>(const Graph&, unsigned);
template SetFunction<CheckedInt128> cover_table<CheckedInt128>(const Graph&, unsigned);

}  // namespace iesieve
