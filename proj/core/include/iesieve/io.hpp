#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "iesieve/count.hpp"
#include "iesieve/graph.hpp"
#include "iesieve/matrix.hpp"
#include "iesieve/set_function.hpp"

// Text formats. All three accept LF or CRLF line endings, blank lines and
// '#' comment lines anywhere; node and mask indices are 0-based.
//
//   graph:         "n m" then m lines "u v" with 0 <= u < v < n
//   matrix:        "n"   then n lines of n entries in {0,1}
//   set function:  "n"   then 2^n decimal integers, mask 0 first
//
// Parse failures throw ParseError carrying the offending line number.

namespace iesieve {

Graph parse_graph(std::string_view text);
Matrix01 parse_matrix(std::string_view text);
SetFunction<Count> parse_setfn(std::string_view text);

std::string format_graph(const Graph& g);
std::string format_matrix(const Matrix01& m);
std::string format_setfn(const SetFunction<Count>& f);
std::string format_setfn(const SetFunction<std::uint64_t>& f);

/// Whole file as a string; throws Error when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace iesieve
