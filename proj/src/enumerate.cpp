#include "zforce/enumerate.hpp"

#include "zforce/errors.hpp"
#include "zforce/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace zforce {

namespace {

constexpr unsigned canonical_code_limit = 11;

auto code_under(const Graph & g, const std::vector<Vertex> & order) -> std::uint64_t
{
    std::uint64_t code = 0;
    auto n = static_cast<unsigned>(order.size());
    for (unsigned j = 1; j < n; ++j)
        for (unsigned i = 0; i < j; ++i)
            code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    return code;
}

auto graph_from_code(unsigned n, std::uint64_t code) -> Graph
{
    std::vector<Edge> edges;
    int bit = static_cast<int>(n * (n - 1) / 2) - 1;
    for (unsigned j = 1; j < n; ++j)
        for (unsigned i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1U)
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

auto rooted_encoding(const Graph & t, Vertex v, Vertex parent) -> std::string
{
    std::vector<std::string> children;
    t.neighbor_bits(v).for_each([&](unsigned c) {
        if (c != parent)
            children.push_back(rooted_encoding(t, c, v));
    });
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (auto & c : children)
        out += c;
    return out + ")";
}

} // namespace

auto canonical_code(const Graph & g) -> std::uint64_t
{
    auto n = g.order();
    if (n > canonical_code_limit)
        throw SizeLimitError("canonical_code supports order <= " + std::to_string(canonical_code_limit));
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });

    // Degree classes [start, end) in `order`; permute within each class.
    std::vector<std::pair<unsigned, unsigned>> classes;
    for (unsigned i = 0; i < n;) {
        unsigned j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i]))
            ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    std::uint64_t best = 0;
    // Odometer over per-class permutations.
    for (;;) {
        best = std::max(best, code_under(g, order));
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            auto [s, e] = classes[c];
            if (std::next_permutation(order.begin() + s, order.begin() + e))
                break;
        }
        if (c == classes.size())
            break;
    }
    return best;
}

auto nonisomorphic_graphs(unsigned n) -> std::vector<Graph>
{
    if (n == 0 || n > 8)
        throw SizeLimitError("nonisomorphic_graphs supports 1 <= n <= 8");
    std::set<std::uint64_t> codes{0};
    for (unsigned k = 2; k <= n; ++k) {
        std::set<std::uint64_t> grown;
        for (auto code : codes) {
            auto base = graph_from_code(k - 1, code);
            auto base_edges = base.edges();
            for (unsigned mask = 0; mask < (1U << (k - 1)); ++mask) {
                auto edges = base_edges;
                for (Vertex v = 0; v + 1 < k; ++v)
                    if ((mask >> v) & 1U)
                        edges.emplace_back(v, k - 1);
                grown.insert(canonical_code(Graph::from_edges(k, edges)));
            }
        }
        codes = std::move(grown);
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (auto code : codes)
        out.push_back(graph_from_code(n, code));
    return out;
}

auto connected_graphs(unsigned n) -> std::vector<Graph>
{
    auto all = nonisomorphic_graphs(n);
    std::vector<Graph> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Graph & g) { return is_connected(g); });
    return out;
}

auto tree_canonical_string(const Graph & tree) -> std::string
{
    if (! is_tree(tree))
        throw InvalidArgument("tree_canonical_string needs a tree");
    auto n = tree.order();
    if (n == 1)
        return "()";
    // Peel leaves to find the centre(s).
    std::vector<unsigned> degree(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] == 1)
            layer.push_back(v);
    }
    unsigned left = n;
    while (left > 2) {
        left -= static_cast<unsigned>(layer.size());
        std::vector<Vertex> next;
        for (auto leaf : layer)
            tree.neighbor_bits(leaf).for_each([&](unsigned u) {
                if (--degree[u] == 1)
                    next.push_back(u);
            });
        layer = std::move(next);
    }
    std::string best;
    for (auto c : layer) {
        auto s = rooted_encoding(tree, c, max_order);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

auto nonisomorphic_trees(unsigned n) -> std::vector<Graph>
{
    if (n == 0)
        throw InvalidArgument("trees need n >= 1");
    std::vector<Graph> current{Graph(1)};
    for (unsigned k = 2; k <= n; ++k) {
        std::map<std::string, Graph> grown;
        for (auto & t : current)
            for (Vertex v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, k - 1);
                auto g = Graph::from_edges(k, edges);
                grown.emplace(tree_canonical_string(g), g);
            }
        current.clear();
        for (auto & [key, g] : grown)
            current.push_back(g);
    }
    return current;
}

auto all_labelled_trees(unsigned n) -> std::vector<Graph>
{
    if (n < 2 || n > 9)
        throw SizeLimitError("all_labelled_trees supports 2 <= n <= 9");
    std::vector<Graph> out;
    std::vector<Vertex> seq(n - 2, 0);
    for (;;) {
        out.push_back(tree_from_pruefer(seq));
        std::size_t i = 0;
        for (; i < seq.size(); ++i) {
            if (++seq[i] < n)
                break;
            seq[i] = 0;
        }
        if (i == seq.size())
            break;
    }
    return out;
}

auto random_connected_graph(unsigned n, double extra_edge_probability, std::mt19937_64 & rng) -> Graph
{
    if (n < 1)
        throw InvalidArgument("random graph needs n >= 1");
    std::vector<Edge> edges;
    if (n >= 2) {
        std::vector<Vertex> seq(n - 2);
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        for (auto & s : seq)
            s = pick(rng);
        edges = tree_from_pruefer(seq).edges();
    }
    std::bernoulli_distribution coin(extra_edge_probability);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace zforce
