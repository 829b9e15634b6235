#pragma once

#include "zforce/graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace zforce {

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError naming the offending byte offset.
auto parse_graph6(std::string_view text) -> Graph;

/// Canonical graph6 encoding (no header, no newline).
auto write_graph6(const Graph & g) -> std::string;

/// Reads one graph per non-empty line. Line-level parse errors are rethrown
/// with the line number attached.
auto read_graph6_stream(std::istream & in) -> std::vector<Graph>;

/// Edge-list text: optional first line "n <order>", then one "u v" pair per
/// line with 1-based labels; '#' starts a comment. Without an order line the
/// order is the largest label.
auto parse_edge_list(std::istream & in) -> Graph;

} // namespace zforce
