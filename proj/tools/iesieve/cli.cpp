#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include "iesieve/coloring.hpp"
#include "iesieve/errors.hpp"
#include "iesieve/hampath.hpp"
#include "iesieve/io.hpp"
#include "iesieve/kpath.hpp"
#include "iesieve/limits.hpp"
#include "iesieve/matchings.hpp"
#include "iesieve/oracles.hpp"
#include "iesieve/parallel.hpp"
#include "iesieve/steiner.hpp"
#include "iesieve/transforms.hpp"

namespace iesieve::cli {
namespace {

std::string to_decimal_any(std::uint64_t v) { return std::to_string(v); }
std::string to_decimal_any(const Count& v) { return to_decimal(v); }

struct Options {
  std::string command;
  std::string file;
  unsigned colors = 0;
  std::string method = "table";
  bool gray = false;
  std::optional<unsigned> start;
  bool total = false;
  std::vector<unsigned> terminals;
  unsigned k = 0;
  unsigned trials = 20;
  std::uint64_t seed = 0;
  bool oracle = false;
  bool json = false;
  bool trace = false;
  unsigned threads = 1;
  std::optional<unsigned> n_max;
};

/// What a command computed, before formatting.
struct Outcome {
  unsigned n = 0;
  std::string value;                ///< decimal, "found"/"not-found" or "none"
  std::string method;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> table; ///< set-function text for table commands
  std::vector<std::string> table_values;
  int exit_code = kSuccess;
};

Outcome scalar(unsigned n, std::string value, std::string method) {
  Outcome o;
  o.n = n;
  o.value = std::move(value);
  o.method = std::move(method);
  return o;
}

template <class Ring>
Outcome table_outcome(const SetFunction<Ring>& f, std::string method) {
  Outcome o;
  o.n = f.ground_size();
  o.value = to_decimal_any(f[f.full_mask()]);
  o.method = std::move(method);
  o.table = format_setfn(f);
  for (const Ring& v : f) o.table_values.push_back(to_decimal_any(v));
  return o;
}

Graph load_graph(const Options& opt) { return parse_graph(read_text_file(opt.file)); }

Outcome color_count(const Options& opt) {
  const Graph g = load_graph(opt);
  if (opt.oracle) {
    return scalar(g.order(), to_decimal(oracles::brute_cover_count(g, opt.colors)), "oracle");
  }
  const CoverMethod method = parse_cover_method(opt.method);
  return scalar(g.order(), to_decimal(cover_count(g, opt.colors, method)), std::string(to_string(method)));
}

Outcome chromatic(const Options& opt) {
  const Graph g = load_graph(opt);
  const unsigned chi = opt.oracle ? oracles::brute_chromatic(g) : chromatic_number(g);
  return scalar(g.order(), std::to_string(chi), opt.oracle ? "oracle" : "table");
}

Outcome indep(const Options& opt) {
  const Graph g = load_graph(opt);
  if (!opt.oracle) return table_outcome(indep_table(g).counts, "recurrence");
  SetFunction<std::uint64_t> table(g.order());
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    table[s] = oracles::brute_indep_count(g, BitSubset(s, g.order()));
  }
  return table_outcome(table, "oracle");
}

Outcome transform(const Options& opt, bool zeta) {
  const SetFunction<Count> f = parse_setfn(read_text_file(opt.file));
  if (opt.oracle) return table_outcome(zeta ? zeta_naive(f) : mobius_naive(f), "naive");
  return table_outcome(zeta ? zeta_yates(f) : mobius_yates(f), "yates");
}

Outcome permanent(const Options& opt) {
  const Matrix01 a = parse_matrix(read_text_file(opt.file));
  if (opt.oracle) return scalar(a.size(), to_decimal(oracles::brute_permanent(a)), "oracle");
  if (opt.gray) return scalar(a.size(), to_decimal(permanent_ryser_gray(a)), "gray");
  return scalar(a.size(), to_decimal(permanent_ryser(a)), "plain");
}

Outcome pm_count(const Options& opt, std::ostream& err) {
  const Graph g = load_graph(opt);
  if (opt.oracle) return scalar(g.order(), to_decimal(oracles::brute_pm_count(g)), "oracle");
  PmTraceFn trace;
  if (opt.trace) {
    trace = [&err](const PmTerm& t) {
      err << "term subset=" << t.subset.to_string() << " size=" << t.subset.size()
          << " edges=" << t.inner_edges << " sign=" << (t.sign > 0 ? '+' : '-')
          << " binomial=" << to_decimal(t.binomial) << '\n';
    };
  }
  return scalar(g.order(), to_decimal(pm_count_general(g, trace)), "sieve");
}

Outcome hamiltonian(const Options& opt) {
  const Graph g = load_graph(opt);
  if (opt.total) {
    if (!opt.oracle) return scalar(g.order(), to_decimal(hamiltonian_count_total(g)), "sieve");
    if (g.order() < 2) throw DomainError("total Hamiltonian path count needs n >= 2");
    Count directed{0};
    for (unsigned s = 0; s < g.order(); ++s) directed += oracles::brute_ham_count(g, s);
    return scalar(g.order(), to_decimal(Count(directed / 2)), "oracle");
  }
  const unsigned start = opt.start.value_or(0);
  if (opt.oracle) return scalar(g.order(), to_decimal(oracles::brute_ham_count(g, start)), "oracle");
  return scalar(g.order(), to_decimal(hamiltonian_count_from(g, start)), "sieve");
}

Outcome steiner(const Options& opt) {
  const Graph g = load_graph(opt);
  BitSubset terminals = BitSubset::empty(g.order());
  for (unsigned t : opt.terminals) {
    if (t >= g.order()) {
      throw DomainError("terminal " + std::to_string(t) + " outside a graph with " +
                        std::to_string(g.order()) + " nodes");
    }
    terminals = terminals.with(t);
  }
  std::optional<unsigned> size;
  if (opt.oracle) {
    size = oracles::brute_steiner(g, terminals);
  } else {
    size = steiner_min_size(SteinerInstance(g, terminals));
  }
  return scalar(g.order(), size ? std::to_string(*size) : "none", opt.oracle ? "oracle" : "willow-sieve");
}

Outcome kpath(const Options& opt) {
  const Graph g = load_graph(opt);
  bool found = false;
  Outcome o;
  if (opt.oracle) {
    validate_path_length(opt.k);
    found = opt.start ? oracles::brute_kpath_from(g, opt.k, *opt.start)
                      : oracles::brute_kpath(g, opt.k);
    o.method = "oracle";
  } else {
    found = kpath_detect(g, opt.k, opt.trials, opt.seed, opt.start) == KPathOutcome::Found;
    o.method = "gf16";
    o.seed = opt.seed;
  }
  o.n = g.order();
  o.value = std::string(to_string(found ? KPathOutcome::Found : KPathOutcome::NotFound));
  o.exit_code = found ? kSuccess : kNotFound;
  return o;
}

Outcome dispatch(const Options& opt, std::ostream& err) {
  const std::string& c = opt.command;
  if (c == "color-count") return color_count(opt);
  if (c == "chromatic") return chromatic(opt);
  if (c == "indep-table") return indep(opt);
  if (c == "zeta") return transform(opt, true);
  if (c == "mobius") return transform(opt, false);
  if (c == "permanent") return permanent(opt);
  if (c == "pm-count") return pm_count(opt, err);
  if (c == "hamiltonian") return hamiltonian(opt);
  if (c == "steiner") return steiner(opt);
  if (c == "kpath") return kpath(opt);
  throw DomainError("unknown command '" + c + "'");
}

void emit(const Options& opt, const Outcome& o, double elapsed_ms, std::ostream& out) {
  if (!opt.json) {
    out << (o.table ? *o.table : o.value + "\n");
    return;
  }
  nlohmann::ordered_json doc;
  doc["command"] = opt.command;
  doc["n"] = o.n;
  doc["value"] = o.value;
  doc["elapsed_ms"] = elapsed_ms;
  doc["method"] = o.method;
  doc["seed"] = o.seed ? nlohmann::ordered_json(*o.seed) : nlohmann::ordered_json(nullptr);
  if (o.table) doc["table"] = o.table_values;
  out << doc.dump() << '\n';
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("file", opt.file, "Input file")->required();
  sub->add_flag("--oracle", opt.oracle, "Use the brute-force reference implementation");
  sub->add_flag("--json", opt.json, "Emit one JSON object instead of plain text");
  sub->add_option("--threads", opt.threads, "Worker threads (never changes output)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--n-max", opt.n_max, "Largest ground set for dense 2^n tables");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Inclusion-exclusion algorithms for counting problems on small graphs", "iesieve"};
  app.require_subcommand(1);

  auto* cc = app.add_subcommand("color-count", "Ordered covers by k nonempty independent sets");
  add_common(cc, opt);
  cc->add_option("--colors", opt.colors, "Number of colours k")->required()
      ->check(CLI::PositiveNumber);
  cc->add_option("--method", opt.method, "table | polyspace | mobius")
      ->check(CLI::IsMember({"table", "polyspace", "mobius"}));

  add_common(app.add_subcommand("chromatic", "Chromatic number"), opt);
  add_common(app.add_subcommand("indep-table", "Nonempty independent subsets of every S"), opt);
  add_common(app.add_subcommand("zeta", "Zeta transform of a set function"), opt);
  add_common(app.add_subcommand("mobius", "Moebius transform of a set function"), opt);

  auto* perm = app.add_subcommand("permanent", "Permanent of a 0/1 matrix (Ryser)");
  add_common(perm, opt);
  perm->add_flag("--gray", opt.gray, "Visit column sets in Gray-code order");

  auto* pm = app.add_subcommand("pm-count", "Perfect matchings of a general graph");
  add_common(pm, opt);
  pm->add_flag("--trace", opt.trace, "Print every sieve term to stderr");

  auto* ham = app.add_subcommand("hamiltonian", "Hamiltonian paths");
  add_common(ham, opt);
  auto* ham_start = ham->add_option("--start", opt.start, "Start node (default 0)");
  ham->add_flag("--total", opt.total, "Count undirected paths over all endpoints")
      ->excludes(ham_start);

  auto* st = app.add_subcommand("steiner", "Minimum Steiner tree size (node count)");
  add_common(st, opt);
  st->add_option("--terminals", opt.terminals, "Comma-separated terminal nodes")
      ->required()->delimiter(',');

  auto* kp = app.add_subcommand("kpath", "Randomised detection of a simple path on k nodes");
  add_common(kp, opt);
  kp->add_option("-k", opt.k, "Path length in nodes")->required();
  kp->add_option("--start", opt.start, "Only look for paths starting here");
  kp->add_option("--trials", opt.trials, "Independent trials")->check(CLI::PositiveNumber);
  kp->add_option("--seed", opt.seed, "Master seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    set_thread_count(opt.threads);
    if (opt.n_max) set_table_cap(*opt.n_max);
    const auto started = std::chrono::steady_clock::now();
    const Outcome o = dispatch(opt, err);
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - started;
    emit(opt, o, elapsed.count(), out);
    return o.exit_code;
  } catch (const SizeCapError& e) {
    err << "error: size-cap: " << e.what() << '\n';
    return kSizeCap;
  } catch (const CorruptionError& e) {
    err << "error: internal: " << e.what() << '\n';
    return kInternalError;
  } catch (const ParseError& e) {
    err << "error: parse: " << opt.file << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace iesieve::cli
