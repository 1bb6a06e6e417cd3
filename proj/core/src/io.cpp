#include "iesieve/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "iesieve/errors.hpp"
#include "iesieve/limits.hpp"

namespace iesieve {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

/// Tokenised content lines, skipping blanks and '#' comments.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++number;
    pos = eol + 1;

    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      if (i > start) parsed.tokens.push_back(line.substr(start, i - start));
    }
    if (parsed.tokens.empty() || parsed.tokens.front().front() == '#') continue;
    out.push_back(std::move(parsed));
  }
  return out;
}

unsigned parse_unsigned(std::string_view token, int line, const char* what) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

Count parse_integer(std::string_view token, int line) {
  std::size_t digits_from = (token.front() == '-' || token.front() == '+') ? 1 : 0;
  bool ok = token.size() > digits_from;
  for (std::size_t i = digits_from; ok && i < token.size(); ++i) {
    ok = token[i] >= '0' && token[i] <= '9';
  }
  if (!ok) throw ParseError(line, "expected a decimal integer, got '" + std::string(token) + "'");
  std::string digits(token.substr(token.front() == '+' ? 1 : 0));
  return Count(digits, 10);
}

void expect_tokens(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, std::string("expected ") + shape + ", found " +
                                      std::to_string(line.tokens.size()) + " fields");
  }
}

int end_line(const std::vector<Line>& lines) { return lines.empty() ? 0 : lines.back().number; }

template <class Ring>
std::string format_table(const SetFunction<Ring>& f) {
  std::ostringstream out;
  out << f.ground_size() << '\n';
  for (const Ring& v : f) out << v << '\n';
  return out.str();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  const Line& header = lines.front();
  expect_tokens(header, 2, "header 'n m'");
  const unsigned n = parse_unsigned(header.tokens[0], header.number, "node count");
  const unsigned m = parse_unsigned(header.tokens[1], header.number, "edge count");
  if (n > BitSubset::kMaxGround) {
    throw ParseError(header.number, "node count " + std::to_string(n) + " exceeds 63");
  }
  if (lines.size() - 1 < m) {
    throw ParseError(end_line(lines), "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > m) {
    throw ParseError(lines[m + 1].number,
                     "unexpected content after " + std::to_string(m) + " edges");
  }

  std::vector<std::uint64_t> seen(n, 0);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const Line& line = lines[i];
    expect_tokens(line, 2, "edge 'u v'");
    const unsigned u = parse_unsigned(line.tokens[0], line.number, "node index");
    const unsigned v = parse_unsigned(line.tokens[1], line.number, "node index");
    if (u >= n || v >= n) {
      throw ParseError(line.number, "node index out of range for " + std::to_string(n) + " nodes");
    }
    if (u == v) throw ParseError(line.number, "self-loop at node " + std::to_string(u));
    if (u > v) throw ParseError(line.number, "edge must be written with u < v");
    if ((seen[u] >> v) & 1U) {
      throw ParseError(line.number,
                       "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    seen[u] |= std::uint64_t{1} << v;
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Matrix01 parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n'");
  const Line& header = lines.front();
  expect_tokens(header, 1, "header 'n'");
  const unsigned n = parse_unsigned(header.tokens[0], header.number, "dimension");
  if (n > BitSubset::kMaxGround) {
    throw ParseError(header.number, "dimension " + std::to_string(n) + " exceeds 63");
  }
  if (lines.size() - 1 != n) {
    const int where = lines.size() - 1 < n ? end_line(lines) : lines[n + 1].number;
    throw ParseError(where, "expected " + std::to_string(n) + " rows, found " +
                                std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (unsigned i = 0; i < n; ++i) {
    const Line& line = lines[i + 1];
    expect_tokens(line, n, "a row of n entries");
    for (unsigned j = 0; j < n; ++j) {
      const std::string_view t = line.tokens[j];
      if (t != "0" && t != "1") {
        throw ParseError(line.number, "matrix entry '" + std::string(t) + "' is not 0 or 1");
      }
      rows[i][j] = t == "1" ? 1 : 0;
    }
  }
  return Matrix01::from_rows(rows);
}

SetFunction<Count> parse_setfn(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n'");
  const Line& header = lines.front();
  expect_tokens(header, 1, "header 'n'");
  const unsigned n = parse_unsigned(header.tokens[0], header.number, "ground-set size");
  if (n > table_cap()) {
    throw SizeCapError("set function: size " + std::to_string(n) + " exceeds cap " +
                       std::to_string(table_cap()));
  }
  const std::size_t expected = std::size_t{1} << n;
  std::vector<Count> values;
  values.reserve(expected);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (std::string_view t : lines[i].tokens) {
      if (values.size() == expected) {
        throw ParseError(lines[i].number, "more than 2^" + std::to_string(n) + " = " +
                                              std::to_string(expected) + " values");
      }
      values.push_back(parse_integer(t, lines[i].number));
    }
  }
  if (values.size() != expected) {
    throw ParseError(end_line(lines), "expected 2^" + std::to_string(n) + " = " +
                                          std::to_string(expected) + " values, found " +
                                          std::to_string(values.size()));
  }
  return SetFunction<Count>(n, std::move(values));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string format_matrix(const Matrix01& m) {
  std::string out = std::to_string(m.size()) + "\n";
  for (unsigned i = 0; i < m.size(); ++i) {
    for (unsigned j = 0; j < m.size(); ++j) {
      if (j != 0) out += ' ';
      out += m.at(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string format_setfn(const SetFunction<Count>& f) { return format_table(f); }
std::string format_setfn(const SetFunction<std::uint64_t>& f) { return format_table(f); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace iesieve
