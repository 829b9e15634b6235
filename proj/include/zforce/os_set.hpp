#pragma once

#include "zforce/graph.hpp"
#include "zforce/search.hpp"

#include <string>
#include <vector>

namespace zforce {

/// Ordered set of vertices (v_1, ..., v_m) with a witness w_k per position:
/// w_k is outside {v_1..v_k}, adjacent to v_k, and adjacent to no other vertex
/// of H_k, the component of G[{v_1..v_k}] containing v_k.
struct OsSet
{
    std::vector<Vertex> order;
    std::vector<Vertex> witnesses;

    [[nodiscard]] auto size() const -> std::size_t { return order.size(); }
};

struct OsCheck
{
    bool ok = true;
    /// 1-based position of the first failure
    unsigned failing_k = 0;
    std::string condition;

    explicit operator bool() const { return ok; }
};

auto verify_os_set(const Graph & g, const OsSet & s) -> OsCheck;

/// Forced vertices of the canonical psd log from x in reverse chronological
/// order, each witnessed by its forcer. Throws if x is not a psd forcing set.
auto os_from_psd_set(const Graph & g, const VertexSet & x) -> OsSet;

/// V minus the members of s; checked to be a psd forcing set.
auto psd_set_from_os(const Graph & g, const OsSet & s) -> VertexSet;

/// A maximum OS-set, found by dynamic programming over prefix sets: a set S is
/// reachable if some v in S extends a reachable S - v with a valid witness.
auto maximum_os_set(const Graph & g, const SearchOptions & opts = {}) -> OsSet;

/// OS(G) = |maximum_os_set(g)|.
auto os_number_bruteforce(const Graph & g, const SearchOptions & opts = {}) -> unsigned;

} // namespace zforce
