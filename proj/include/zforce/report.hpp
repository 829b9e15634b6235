#pragma once

#include "zforce/bounds.hpp"
#include "zforce/forcing.hpp"
#include "zforce/search.hpp"

#include "json.hpp"

#include <string>

namespace zforce {

using Json = nlohmann::json;

/// {graph, n, rule, value, sets (1-based), sets_zero_based, nodes_explored}
auto search_json(const std::string & graph, unsigned n, Rule rule, const SearchResult & result) -> Json;

/// Labels in JSON are 1-based; the "zero_based" object repeats the vertex
/// fields with 0-based ids. Parsing reads the 1-based fields.
auto to_json(const BoundsReport & report) -> Json;
auto bounds_from_json(const Json & j) -> BoundsReport;

/// Human-readable table.
auto format_bounds(const BoundsReport & report) -> std::string;

} // namespace zforce
