#pragma once

#include "zforce/forcing.hpp"
#include "zforce/graph.hpp"

#include <cstdint>
#include <vector>

namespace zforce {

struct SearchOptions
{
    /// refuse Z / Z+ searches on graphs with more vertices than this
    unsigned search_limit = 24;
    /// refuse complete enumeration of minimum sets above this order
    unsigned all_min_limit = 12;
    /// refuse the OS-number search above this order
    unsigned os_limit = 8;
    /// OpenMP worker count; 0 lets the runtime decide
    unsigned workers = 0;
    /// standard rule: search from Z+ upwards instead of from max(1, delta)
    bool use_psd_lower_bound = true;
};

struct SearchResult
{
    unsigned value = 0;
    /// Lexicographically smallest optimum, or every optimum in lexicographic
    /// order, depending on the entry point.
    std::vector<VertexSet> sets;
    /// Closures evaluated. May depend on the worker count; value and sets do not.
    std::uint64_t nodes_explored = 0;
};

/// Z(G) or Z+(G). Components are searched independently and combined; within a
/// component k-subsets are scanned in lexicographic order for increasing k,
/// split into contiguous rank ranges across workers.
auto zero_forcing_number(const Graph & g, Rule rule, const SearchOptions & opts = {}) -> SearchResult;

/// Every minimum forcing set, lexicographically ordered.
auto minimum_forcing_sets(const Graph & g, Rule rule, const SearchOptions & opts = {}) -> SearchResult;
auto all_minimum_zfs(const Graph & g, Rule rule, const SearchOptions & opts = {}) -> std::vector<VertexSet>;

/// Intersection of all minimum standard zero forcing sets.
auto min_zfs_intersection(const Graph & g, const SearchOptions & opts = {}) -> VertexSet;

namespace reference {

/// Serial exhaustive search over all 2^n subsets using the logged
/// one-force-at-a-time engine; returns every minimum set. Kept as an
/// independent check on the parallel search; n <= 20.
auto minimum_forcing_sets(const Graph & g, Rule rule) -> SearchResult;

} // namespace reference

} // namespace zforce
