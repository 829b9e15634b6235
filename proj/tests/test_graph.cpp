#include "doctest.h"

#include "zforce/errors.hpp"
#include "zforce/families.hpp"
#include "zforce/graph.hpp"

using namespace zforce;

TEST_CASE("vertex set basics")
{
    VertexSet s(5, {0, 3});
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK(s.complement() == VertexSet(5, {1, 2, 4}));
    CHECK((s | VertexSet(5, {1})) == VertexSet(5, {0, 1, 3}));
    CHECK((s & VertexSet(5, {3, 4})) == VertexSet(5, {3}));
    CHECK((s - VertexSet(5, {0})) == VertexSet(5, {3}));
    CHECK(to_string(s) == "{1,4}");
    CHECK_THROWS_AS(s.insert(5), InvalidArgument);
}

TEST_CASE("vertex set order is lexicographic on member lists")
{
    CHECK(VertexSet(6, {0, 1, 5}) < VertexSet(6, {0, 2, 3}));
    CHECK(VertexSet(6, {0, 1}) < VertexSet(6, {0, 1, 2}));
    CHECK_FALSE(VertexSet(6, {1}) < VertexSet(6, {0, 5}));
}

TEST_CASE("vertex set over the wide representation")
{
    VertexSet s(100, {0, 63, 64, 99});
    CHECK(s.size() == 4);
    CHECK(s.complement().size() == 96);
    CHECK(s.vertices() == std::vector<Vertex>{0, 63, 64, 99});
}

TEST_CASE("graph construction validates edges")
{
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidArgument);
    auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(Graph(max_order + 1), SizeLimitError);
}

TEST_CASE("components partition the given set")
{
    auto p = path_graph(3);
    auto parts = components(p, VertexSet(3, {0, 2}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet(3, {0}));
    CHECK(parts[1] == VertexSet(3, {2}));
    CHECK(components(p, p.all()).size() == 1);
    CHECK(components(p, VertexSet(3)).empty());

    // pinwheel minus its central triangle (labels 4,5,6)
    auto g = pinwheel12();
    auto rest = g.all() - VertexSet(12, {3, 4, 5});
    auto blades = components(g, rest);
    CHECK(blades.size() == 3);
    VertexSet seen(12);
    for (const auto & c : blades) {
        CHECK((seen & c).empty());
        seen = seen | c;
    }
    CHECK(seen == rest);
}

TEST_CASE("induced subgraphs relabel in ascending order")
{
    auto k4 = complete_graph(4);
    auto sub = induced(k4, VertexSet(4, {0, 2, 3}));
    CHECK(sub.graph == complete_graph(3));
    CHECK(sub.original == std::vector<Vertex>{0, 2, 3});
    CHECK(induced(path_graph(3), VertexSet(3, {1})).graph.order() == 1);
    CHECK_THROWS_AS(induced(k4, VertexSet(4)), InvalidArgument);

    auto fan = induced(pinwheel12(), VertexSet(12, {0, 1, 2, 3, 4, 5})).graph;
    CHECK(fan.edge_count() == 9); // a 2-tree on 6 vertices
    CHECK(is_connected(fan));
}

TEST_CASE("cartesian product")
{
    auto sq = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(sq.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(sq.degree(v) == 2);
    CHECK(is_connected(sq));

    auto prism = cartesian_product(path_graph(2), complete_graph(3));
    CHECK(prism.order() == 6);
    CHECK(prism.edge_count() == 9);
    // (i,j) -> 3i + j
    CHECK(prism.adjacent(0, 3));
    CHECK(prism.adjacent(4, 5));
    CHECK_FALSE(prism.adjacent(0, 4));

    auto c5 = cycle_graph(5);
    CHECK(cartesian_product(c5, Graph(1)) == c5);

    auto g = cartesian_product(path_graph(3), cycle_graph(4));
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 4; ++j)
            CHECK(g.degree(i * 4 + j) == path_graph(3).degree(i) + 2);
    CHECK_THROWS_AS(cartesian_product(complete_graph(12), complete_graph(11)), SizeLimitError);
}

TEST_CASE("complement, union, relabel")
{
    auto c5 = cycle_graph(5);
    auto cc = complement(c5);
    CHECK(cc.edge_count() == 5);
    CHECK(complement(cc) == c5);
    auto u = disjoint_union(path_graph(2), path_graph(3));
    CHECK(u.order() == 5);
    CHECK(u.adjacent(2, 3));
    CHECK(components(u).size() == 2);
    auto r = relabel(path_graph(3), {2, 0, 1});
    CHECK(r.adjacent(2, 0));
    CHECK(r.adjacent(0, 1));
    CHECK_FALSE(r.adjacent(2, 1));
    CHECK_THROWS_AS(relabel(path_graph(3), {0, 0, 1}), InvalidArgument);
}

TEST_CASE("minimum degree")
{
    CHECK(min_degree(complete_graph(5)) == 4);
    CHECK(min_degree(pinwheel12()) == 2);
    CHECK(min_degree(star_graph(4)) == 1);
    CHECK(min_degree(Graph(3)) == 0);
}

TEST_CASE("structural predicates")
{
    auto c6 = cycle_graph(6);
    CHECK(induces_path(c6, VertexSet(6, {0, 1, 2})));
    CHECK_FALSE(induces_path(c6, c6.all()));
    CHECK_FALSE(induces_path(c6, VertexSet(6, {0, 2})));
    CHECK(induces_path(c6, VertexSet(6, {4})));
    CHECK(is_clique(complete_graph(4), VertexSet(4, {0, 1, 3})));
    CHECK_FALSE(is_clique(c6, VertexSet(6, {0, 1, 2})));
    CHECK(is_bipartite(c6));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_tree(star_graph(3)));
    CHECK_FALSE(is_tree(c6));
    CHECK_FALSE(is_tree(Graph(2)));
}
