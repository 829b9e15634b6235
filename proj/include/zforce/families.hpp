#pragma once

#include "zforce/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zforce {

auto path_graph(unsigned n) -> Graph;
auto cycle_graph(unsigned n) -> Graph;
auto complete_graph(unsigned n) -> Graph;
auto complete_bipartite(unsigned a, unsigned b) -> Graph;

/// K_{1,m}; the centre is vertex 0.
auto star_graph(unsigned m) -> Graph;

/// The 12-vertex outerplanar 2-tree "pinwheel". Vertex v here is label v+1 in
/// the usual drawing. Central triangle {4,5,6}; blades {1,2,3} on edge
/// {4,5}, {7,8,9} on {5,6} and {10,11,12} on {6,4}, each blade a strip of
/// three triangles whose apex (1, 7, 10) touches both base vertices.
auto pinwheel12() -> Graph;

/// Generalised book B_m^t: m copies of a t-cycle sharing the edge {0, 1}.
/// Page p contributes the path 0 - x_1 - ... - x_{t-2} - 1 on vertices
/// 2 + p(t-2) + i. Requires m >= 2 and t >= 3.
auto book_graph(unsigned m, unsigned t) -> Graph;

/// Moebius ladder of the given even order 2k: the cycle 0..2k-1 plus the k
/// chords {i, i+k}. Requires order >= 6.
auto mobius_ladder(unsigned order) -> Graph;

/// k-wheel with 4 hubs H_4(k), k >= 3: cycle c_i = i for i < 4k and hubs
/// h_j = 4k + j adjacent to c_{j+4i}, i = 0..k-1. Order 4k + 4.
auto four_hub_wheel(unsigned k) -> Graph;

/// Labelled tree decoded from a Pruefer sequence over 0..n-1 (n = len + 2).
auto tree_from_pruefer(const std::vector<Vertex> & sequence) -> Graph;

/// Pruefer sequence of a labelled tree with at least two vertices.
auto pruefer_of(const Graph & tree) -> std::vector<Vertex>;

/// Named family dispatcher. Names: path, cycle, complete, complete_bipartite,
/// star, pinwheel12, book, mobius_ladder, four_hub_wheel, tree_from_pruefer.
/// Pruefer entries are given 0-based here.
auto family(std::string_view name, const std::vector<long> & params) -> Graph;

/// Names accepted by family().
auto family_names() -> std::vector<std::string>;

} // namespace zforce
