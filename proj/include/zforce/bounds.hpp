#pragma once

#include "zforce/graph.hpp"
#include "zforce/search.hpp"

#include <string>
#include <vector>

namespace zforce {

struct PathCover
{
    unsigned value = 0;
    /// each path listed end to end
    std::vector<std::vector<Vertex>> paths;
};

struct CliqueCover
{
    unsigned value = 0;
    std::vector<VertexSet> cliques;
};

struct BoundsOptions
{
    unsigned path_cover_limit = 16;
    unsigned clique_cover_edge_limit = 40;
    SearchOptions search;
};

/// P(G): fewest vertex-disjoint induced paths covering V. Exact, by dynamic
/// programming over vertex subsets.
auto path_cover_number(const Graph & g, const BoundsOptions & opts = {}) -> PathCover;

/// cc(G): fewest cliques covering every edge. Exact set cover over the maximal
/// cliques by branch and bound; the first branching level runs in parallel.
auto clique_cover_number(const Graph & g, const BoundsOptions & opts = {}) -> CliqueCover;

/// Maximal cliques (Bron-Kerbosch with pivoting), each sorted, list sorted.
auto maximal_cliques(const Graph & g) -> std::vector<VertexSet>;

/// Checks a witness: vertex-disjoint induced paths, consecutive vertices
/// adjacent, union V.
[[nodiscard]] auto is_path_cover(const Graph & g, const std::vector<std::vector<Vertex>> & paths) -> bool;

/// Checks a witness: every set a clique and every edge inside some set.
[[nodiscard]] auto is_clique_cover(const Graph & g, const std::vector<VertexSet> & cliques) -> bool;

/// Exact parameters and the maximum-nullity bounds they imply. M, M+, hM+ and
/// the minimum ranks are never computed, only bracketed:
///   n - cc <= M+ <= hM+ <= Z+ <= Z,   P <= Z,   delta <= Z+.
struct BoundsReport
{
    unsigned n = 0;
    unsigned delta = 0;
    unsigned path_cover = 0;
    unsigned clique_cover = 0;
    unsigned z = 0;
    unsigned zplus = 0;
    unsigned os = 0;
    /// n - cc; may be negative
    int lower_mplus = 0;

    VertexSet zfs;
    VertexSet psd_zfs;
    std::vector<std::vector<Vertex>> paths;
    std::vector<VertexSet> cliques;

    std::vector<std::string> notes;

    friend auto operator==(const BoundsReport &, const BoundsReport &) -> bool = default;
};

/// All fields computed exactly; a violated inequality throws InvariantViolation.
auto bounds_report(const Graph & g, const BoundsOptions & opts = {}) -> BoundsReport;

/// Records an externally known value of hM+ (not computed here) and how it
/// compares with Z+.
void annotate_external_hmplus(BoundsReport & report, unsigned hmplus, const std::string & source);

} // namespace zforce
