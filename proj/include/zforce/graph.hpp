#pragma once

#include "zforce/bitset.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace zforce {

/// Largest order any Graph may have. Kernels use a single-word fast path for
/// n <= 64 and a two-word representation above that.
inline constexpr unsigned max_order = 128;
inline constexpr unsigned fast_path_order = 64;

using Vertex = unsigned;
using Bits = FixedBitSet<max_order / bits_per_word>;

/// A subset of the vertices {0, ..., n-1} of some graph of order n.
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(unsigned ambient);
    VertexSet(unsigned ambient, std::initializer_list<Vertex> vertices);
    VertexSet(unsigned ambient, const std::vector<Vertex> & vertices);
    VertexSet(unsigned ambient, const Bits & bits);

    static auto full(unsigned ambient) -> VertexSet;

    [[nodiscard]] auto ambient() const noexcept -> unsigned { return n_; }
    [[nodiscard]] auto size() const -> unsigned { return bits_.count(); }
    [[nodiscard]] auto empty() const -> bool { return bits_.none(); }
    [[nodiscard]] auto contains(Vertex v) const -> bool { return v < n_ && bits_.test(v); }
    [[nodiscard]] auto bits() const noexcept -> const Bits & { return bits_; }

    void insert(Vertex v);
    void erase(Vertex v);

    /// Members in ascending order.
    [[nodiscard]] auto vertices() const -> std::vector<Vertex>;
    [[nodiscard]] auto is_subset_of(const VertexSet & o) const -> bool;
    [[nodiscard]] auto complement() const -> VertexSet;

    friend auto operator&(const VertexSet & a, const VertexSet & b) -> VertexSet;
    friend auto operator|(const VertexSet & a, const VertexSet & b) -> VertexSet;
    friend auto operator-(const VertexSet & a, const VertexSet & b) -> VertexSet;
    friend auto operator==(const VertexSet & a, const VertexSet & b) -> bool = default;

    /// Lexicographic order on the ascending member lists (shorter prefix first),
    /// which is the order k-subsets are enumerated in.
    friend auto operator<(const VertexSet & a, const VertexSet & b) -> bool;

private:
    unsigned n_ = 0;
    Bits bits_;
};

/// 1-based, brace-delimited rendering, e.g. "{1,2,6,10}".
auto to_string(const VertexSet & s) -> std::string;

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph
{
public:
    Graph() = default;

    /// Edgeless graph of order n.
    explicit Graph(unsigned n);

    /// Validates every edge: endpoints in range, no loops. Duplicate edges are
    /// merged.
    static auto from_edges(unsigned n, const std::vector<Edge> & edges) -> Graph;

    [[nodiscard]] auto order() const noexcept -> unsigned { return n_; }
    [[nodiscard]] auto edge_count() const noexcept -> unsigned { return m_; }
    [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return adj_[u].test(v); }
    [[nodiscard]] auto neighbor_bits(Vertex v) const -> const Bits & { return adj_[v]; }
    [[nodiscard]] auto neighbors(Vertex v) const -> VertexSet { return {n_, adj_[v]}; }
    [[nodiscard]] auto degree(Vertex v) const -> unsigned { return adj_[v].count(); }
    [[nodiscard]] auto all() const -> VertexSet { return VertexSet::full(n_); }

    /// Edges (u, v) with u < v, sorted.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    friend auto operator==(const Graph & a, const Graph & b) -> bool;

private:
    unsigned n_ = 0;
    unsigned m_ = 0;
    std::vector<Bits> adj_;
};

/// Partition of `within` into the vertex sets of the connected components of
/// g[within], ordered by smallest member.
auto components(const Graph & g, const VertexSet & within) -> std::vector<VertexSet>;
auto components(const Graph & g) -> std::vector<VertexSet>;

[[nodiscard]] auto is_connected(const Graph & g) -> bool;

struct InducedSubgraph
{
    Graph graph;
    /// original id of each new vertex, ascending
    std::vector<Vertex> original;
};

/// g[w], vertices relabelled in ascending order of original id.
auto induced(const Graph & g, const VertexSet & w) -> InducedSubgraph;

/// Vertex (i, j) of g x h is numbered i * |h| + j.
auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

auto complement(const Graph & g) -> Graph;

/// Disjoint union; vertices of h follow those of g.
auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

/// Applies new_id = perm[old_id].
auto relabel(const Graph & g, const std::vector<Vertex> & perm) -> Graph;

[[nodiscard]] auto min_degree(const Graph & g) -> unsigned;

/// True iff the vertex set of g[w] induces a path (a single vertex counts).
[[nodiscard]] auto induces_path(const Graph & g, const VertexSet & w) -> bool;

/// True iff w is a clique of g.
[[nodiscard]] auto is_clique(const Graph & g, const VertexSet & w) -> bool;

/// Two-colouring if one exists: colour[v] in {0, 1}.
auto bipartition(const Graph & g) -> std::vector<int>;
[[nodiscard]] auto is_bipartite(const Graph & g) -> bool;

[[nodiscard]] auto is_tree(const Graph & g) -> bool;

} // namespace zforce
