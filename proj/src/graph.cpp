#include "zforce/graph.hpp"

#include "zforce/errors.hpp"

#include <algorithm>

namespace zforce {

namespace {

void check_ambient(unsigned n)
{
    if (n > max_order)
        throw SizeLimitError("order " + std::to_string(n) + " exceeds the supported maximum of "
                             + std::to_string(max_order));
}

void check_same_ambient(const VertexSet & a, const VertexSet & b)
{
    if (a.ambient() != b.ambient())
        throw InvalidArgument("vertex sets over different ambient orders");
}

} // namespace

VertexSet::VertexSet(unsigned ambient) : n_(ambient) { check_ambient(ambient); }

VertexSet::VertexSet(unsigned ambient, std::initializer_list<Vertex> vertices) : VertexSet(ambient)
{
    for (auto v : vertices)
        insert(v);
}

VertexSet::VertexSet(unsigned ambient, const std::vector<Vertex> & vertices) : VertexSet(ambient)
{
    for (auto v : vertices)
        insert(v);
}

VertexSet::VertexSet(unsigned ambient, const Bits & bits) : n_(ambient), bits_(bits)
{
    check_ambient(ambient);
    if (! bits.is_subset_of(Bits::first_n(ambient)))
        throw InvalidArgument("vertex set has members outside 0.." + std::to_string(ambient) + "-1");
}

auto VertexSet::full(unsigned ambient) -> VertexSet
{
    check_ambient(ambient);
    return {ambient, Bits::first_n(ambient)};
}

void VertexSet::insert(Vertex v)
{
    if (v >= n_)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    bits_.set(v);
}

void VertexSet::erase(Vertex v)
{
    if (v < n_)
        bits_.reset(v);
}

auto VertexSet::vertices() const -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    out.reserve(size());
    bits_.for_each([&](unsigned v) { out.push_back(v); });
    return out;
}

auto VertexSet::is_subset_of(const VertexSet & o) const -> bool
{
    check_same_ambient(*this, o);
    return bits_.is_subset_of(o.bits_);
}

auto VertexSet::complement() const -> VertexSet { return {n_, Bits::first_n(n_) - bits_}; }

auto operator&(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    check_same_ambient(a, b);
    return {a.n_, a.bits_ & b.bits_};
}

auto operator|(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    check_same_ambient(a, b);
    return {a.n_, a.bits_ | b.bits_};
}

auto operator-(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    check_same_ambient(a, b);
    return {a.n_, a.bits_ - b.bits_};
}

auto operator<(const VertexSet & a, const VertexSet & b) -> bool
{
    auto x = a.vertices();
    auto y = b.vertices();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

auto to_string(const VertexSet & s) -> std::string
{
    std::string out = "{";
    bool first = true;
    for (auto v : s.vertices()) {
        if (! first)
            out += ',';
        out += std::to_string(v + 1);
        first = false;
    }
    return out + "}";
}

Graph::Graph(unsigned n) : n_(n), adj_(n)
{
    check_ambient(n);
}

auto Graph::from_edges(unsigned n, const std::vector<Edge> & edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v)
                                  + "} has an endpoint outside 0.." + std::to_string(n) + "-1");
        if (u == v)
            throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        if (! g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.m_;
        }
    }
    return g;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        adj_[u].for_each([&](unsigned v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

auto operator==(const Graph & a, const Graph & b) -> bool { return a.n_ == b.n_ && a.adj_ == b.adj_; }

auto components(const Graph & g, const VertexSet & within) -> std::vector<VertexSet>
{
    if (within.ambient() != g.order())
        throw InvalidArgument("vertex set ambient order does not match the graph");
    std::vector<VertexSet> out;
    Bits remaining = within.bits();
    while (remaining.any()) {
        Bits comp = Bits::single(remaining.first());
        Bits frontier = comp;
        while (frontier.any()) {
            Bits grown;
            frontier.for_each([&](unsigned v) { grown |= g.neighbor_bits(v); });
            grown &= remaining;
            grown.subtract(comp);
            comp |= grown;
            frontier = grown;
        }
        remaining.subtract(comp);
        out.emplace_back(g.order(), comp);
    }
    return out;
}

auto components(const Graph & g) -> std::vector<VertexSet> { return components(g, g.all()); }

auto is_connected(const Graph & g) -> bool { return g.order() > 0 && components(g).size() == 1; }

auto induced(const Graph & g, const VertexSet & w) -> InducedSubgraph
{
    if (w.empty())
        throw InvalidArgument("induced subgraph on an empty vertex set");
    if (w.ambient() != g.order())
        throw InvalidArgument("vertex set ambient order does not match the graph");
    InducedSubgraph out;
    out.original = w.vertices();
    std::vector<Vertex> index(g.order(), max_order);
    for (Vertex i = 0; i < out.original.size(); ++i)
        index[out.original[i]] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] != max_order && index[v] != max_order)
            edges.emplace_back(index[u], index[v]);
    out.graph = Graph::from_edges(static_cast<unsigned>(out.original.size()), edges);
    return out;
}

auto cartesian_product(const Graph & g, const Graph & h) -> Graph
{
    auto order = static_cast<unsigned long long>(g.order()) * h.order();
    if (order > max_order)
        throw SizeLimitError("product order " + std::to_string(order) + " exceeds the supported maximum of "
                             + std::to_string(max_order));
    auto nh = h.order();
    std::vector<Edge> edges;
    for (Vertex i = 0; i < g.order(); ++i)
        for (auto [a, b] : h.edges())
            edges.emplace_back(i * nh + a, i * nh + b);
    for (auto [a, b] : g.edges())
        for (Vertex j = 0; j < nh; ++j)
            edges.emplace_back(a * nh + j, b * nh + j);
    return Graph::from_edges(static_cast<unsigned>(order), edges);
}

auto complement(const Graph & g) -> Graph
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph::from_edges(g.order(), edges);
}

auto disjoint_union(const Graph & g, const Graph & h) -> Graph
{
    auto edges = g.edges();
    for (auto [a, b] : h.edges())
        edges.emplace_back(a + g.order(), b + g.order());
    return Graph::from_edges(g.order() + h.order(), edges);
}

auto relabel(const Graph & g, const std::vector<Vertex> & perm) -> Graph
{
    if (perm.size() != g.order())
        throw InvalidArgument("permutation length does not match graph order");
    std::vector<bool> seen(g.order(), false);
    for (auto p : perm) {
        if (p >= g.order() || seen[p])
            throw InvalidArgument("relabelling is not a permutation");
        seen[p] = true;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), edges);
}

auto min_degree(const Graph & g) -> unsigned
{
    if (g.order() == 0)
        return 0;
    unsigned best = g.order();
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

auto induces_path(const Graph & g, const VertexSet & w) -> bool
{
    auto k = w.size();
    if (k == 0)
        return false;
    unsigned edge_ends = 0;
    bool ok = true;
    w.bits().for_each([&](unsigned v) {
        auto d = (g.neighbor_bits(v) & w.bits()).count();
        if (d > 2)
            ok = false;
        edge_ends += d;
    });
    return ok && edge_ends == 2 * (k - 1) && components(g, w).size() == 1;
}

auto is_clique(const Graph & g, const VertexSet & w) -> bool
{
    bool ok = true;
    w.bits().for_each([&](unsigned v) {
        if (! (w.bits() - Bits::single(v)).is_subset_of(g.neighbor_bits(v)))
            ok = false;
    });
    return ok;
}

auto bipartition(const Graph & g) -> std::vector<int>
{
    std::vector<int> colour(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::vector<Vertex> stack{s};
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            bool clash = false;
            g.neighbor_bits(u).for_each([&](unsigned v) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    stack.push_back(v);
                }
                else if (colour[v] == colour[u])
                    clash = true;
            });
            if (clash)
                return {};
        }
    }
    return colour;
}

auto is_bipartite(const Graph & g) -> bool { return g.order() == 0 || ! bipartition(g).empty(); }

auto is_tree(const Graph & g) -> bool { return g.order() >= 1 && g.edge_count() + 1 == g.order() && is_connected(g); }

} // namespace zforce
