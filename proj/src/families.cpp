#include "zforce/families.hpp"

#include "zforce/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace zforce {

namespace {

void require(bool ok, const std::string & message)
{
    if (! ok)
        throw InvalidArgument(message);
}

} // namespace

auto path_graph(unsigned n) -> Graph
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

auto cycle_graph(unsigned n) -> Graph
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

auto complete_graph(unsigned n) -> Graph
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

auto complete_bipartite(unsigned a, unsigned b) -> Graph
{
    require(a >= 1 && b >= 1, "complete bipartite graph needs both parts non-empty");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

auto star_graph(unsigned m) -> Graph
{
    require(m >= 1, "star needs m >= 1 leaves");
    return complete_bipartite(1, m);
}

auto pinwheel12() -> Graph
{
    // 1-based drawing labels, converted below. 21 edges = 2n - 3.
    static constexpr std::pair<int, int> drawn_edges[] = {
        {4, 5}, {5, 6}, {4, 6},                          // central triangle
        {1, 4}, {1, 5}, {1, 3}, {3, 5}, {1, 2}, {2, 3},  // blade on {4,5}
        {7, 5}, {7, 6}, {7, 9}, {9, 6}, {7, 8}, {8, 9},  // blade on {5,6}
        {10, 6}, {10, 4}, {10, 12}, {12, 4}, {10, 11}, {11, 12}, // blade on {6,4}
    };
    std::vector<Edge> edges;
    for (auto [a, b] : drawn_edges)
        edges.emplace_back(a - 1, b - 1);
    return Graph::from_edges(12, edges);
}

auto book_graph(unsigned m, unsigned t) -> Graph
{
    require(m >= 2, "book needs m >= 2 pages");
    require(t >= 3, "book pages need t >= 3");
    auto per_page = t - 2;
    auto n = 2 + m * per_page;
    require(n <= max_order, "book order exceeds the supported maximum");
    std::vector<Edge> edges{{0, 1}};
    for (unsigned p = 0; p < m; ++p) {
        Vertex first = 2 + p * per_page;
        edges.emplace_back(0, first);
        for (unsigned i = 0; i + 1 < per_page; ++i)
            edges.emplace_back(first + i, first + i + 1);
        edges.emplace_back(first + per_page - 1, 1);
    }
    return Graph::from_edges(n, edges);
}

auto mobius_ladder(unsigned order) -> Graph
{
    require(order >= 6 && order % 2 == 0, "Moebius ladder needs an even order >= 6");
    auto k = order / 2;
    std::vector<Edge> edges;
    for (Vertex i = 0; i < order; ++i)
        edges.emplace_back(i, (i + 1) % order);
    for (Vertex i = 0; i < k; ++i)
        edges.emplace_back(i, i + k);
    return Graph::from_edges(order, edges);
}

auto four_hub_wheel(unsigned k) -> Graph
{
    require(k >= 3, "four-hub wheel needs k >= 3");
    auto cycle = 4 * k;
    require(cycle + 4 <= max_order, "four-hub wheel order exceeds the supported maximum");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < cycle; ++i)
        edges.emplace_back(i, (i + 1) % cycle);
    for (Vertex j = 0; j < 4; ++j)
        for (Vertex i = 0; i < k; ++i)
            edges.emplace_back(cycle + j, j + 4 * i);
    return Graph::from_edges(cycle + 4, edges);
}

auto tree_from_pruefer(const std::vector<Vertex> & sequence) -> Graph
{
    auto n = static_cast<unsigned>(sequence.size() + 2);
    require(n <= max_order, "tree order exceeds the supported maximum");
    std::vector<unsigned> degree(n, 1);
    for (auto v : sequence) {
        require(v < n, "Pruefer entry " + std::to_string(v) + " out of range for order " + std::to_string(n));
        ++degree[v];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);
    std::vector<Edge> edges;
    for (auto v : sequence) {
        auto leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1)
            leaves.push(v);
    }
    auto a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Graph::from_edges(n, edges);
}

auto pruefer_of(const Graph & tree) -> std::vector<Vertex>
{
    require(is_tree(tree) && tree.order() >= 2, "Pruefer encoding needs a tree with at least two vertices");
    auto n = tree.order();
    std::vector<unsigned> degree(n);
    for (Vertex v = 0; v < n; ++v)
        degree[v] = tree.degree(v);
    std::vector<bool> removed(n, false);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);
    std::vector<Vertex> out;
    while (out.size() + 2 < n) {
        auto leaf = leaves.top();
        leaves.pop();
        removed[leaf] = true;
        Vertex parent = 0;
        tree.neighbor_bits(leaf).for_each([&](unsigned v) {
            if (! removed[v])
                parent = v;
        });
        out.push_back(parent);
        if (--degree[parent] == 1)
            leaves.push(parent);
    }
    return out;
}

auto family(std::string_view name, const std::vector<long> & params) -> Graph
{
    auto arity = [&](std::size_t k) {
        if (params.size() != k)
            throw InvalidArgument("family '" + std::string(name) + "' takes " + std::to_string(k) + " parameter(s), got "
                                  + std::to_string(params.size()));
    };
    auto param = [&](std::size_t i) -> unsigned {
        if (params[i] < 0 || params[i] > static_cast<long>(max_order) * max_order)
            throw InvalidArgument("family '" + std::string(name) + "' parameter out of range: "
                                  + std::to_string(params[i]));
        return static_cast<unsigned>(params[i]);
    };

    if (name == "path") {
        arity(1);
        return path_graph(param(0));
    }
    if (name == "cycle") {
        arity(1);
        return cycle_graph(param(0));
    }
    if (name == "complete") {
        arity(1);
        return complete_graph(param(0));
    }
    if (name == "complete_bipartite") {
        arity(2);
        return complete_bipartite(param(0), param(1));
    }
    if (name == "star") {
        arity(1);
        return star_graph(param(0));
    }
    if (name == "pinwheel12") {
        arity(0);
        return pinwheel12();
    }
    if (name == "book") {
        arity(2);
        return book_graph(param(0), param(1));
    }
    if (name == "mobius_ladder") {
        arity(1);
        return mobius_ladder(param(0));
    }
    if (name == "four_hub_wheel") {
        arity(1);
        return four_hub_wheel(param(0));
    }
    if (name == "tree_from_pruefer") {
        std::vector<Vertex> seq;
        for (std::size_t i = 0; i < params.size(); ++i)
            seq.push_back(param(i));
        return tree_from_pruefer(seq);
    }
    throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

auto family_names() -> std::vector<std::string>
{
    return {"path", "cycle", "complete", "complete_bipartite", "star", "pinwheel12",
            "book", "mobius_ladder", "four_hub_wheel", "tree_from_pruefer"};
}

} // namespace zforce
