#pragma once

#include "zforce/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace zforce {

/// Isomorphism-invariant code for graphs of order <= 11: the largest
/// upper-triangle adjacency word over all degree-respecting relabellings.
/// Exponential in the sizes of the degree classes; meant for small graphs.
auto canonical_code(const Graph & g) -> std::uint64_t;

/// One representative per isomorphism class of graphs of order n (n <= 8),
/// each relabelled to its canonical form.
auto nonisomorphic_graphs(unsigned n) -> std::vector<Graph>;

/// As nonisomorphic_graphs, restricted to connected graphs.
auto connected_graphs(unsigned n) -> std::vector<Graph>;

/// Isomorphism-invariant string for a tree (rooted encoding at a centre).
auto tree_canonical_string(const Graph & tree) -> std::string;

/// One representative per isomorphism class of trees of order n, grown leaf by
/// leaf and deduplicated with tree_canonical_string.
auto nonisomorphic_trees(unsigned n) -> std::vector<Graph>;

/// Every labelled tree of order n, by decoding all n^(n-2) Pruefer sequences.
auto all_labelled_trees(unsigned n) -> std::vector<Graph>;

/// Uniform random spanning tree skeleton plus each remaining pair with
/// probability extra_edge_probability; always connected.
auto random_connected_graph(unsigned n, double extra_edge_probability, std::mt19937_64 & rng) -> Graph;

} // namespace zforce
