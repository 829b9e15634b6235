#include "doctest.h"

#include "zforce/enumerate.hpp"
#include "zforce/families.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace zforce;

TEST_CASE("canonical code is a relabelling invariant")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto g = random_connected_graph(7, 0.3, rng);
        std::vector<Vertex> perm(7);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(relabel(g, perm)) == canonical_code(g));
    }
    CHECK(canonical_code(path_graph(4)) != canonical_code(star_graph(3)));
}

TEST_CASE("graph counts match the known sequences")
{
    // all graphs: 1, 2, 4, 11, 34, 156, 1044; connected: 1, 1, 2, 6, 21, 112, 853
    std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (unsigned n = 1; n <= 7; ++n) {
        CHECK(nonisomorphic_graphs(n).size() == all[n - 1]);
        auto c = connected_graphs(n);
        CHECK(c.size() == connected[n - 1]);
        for (const auto & g : c)
            CHECK(is_connected(g));
    }
}

TEST_CASE("tree counts")
{
    std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (unsigned n = 1; n <= 10; ++n) {
        auto trees = nonisomorphic_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        std::set<std::string> strings;
        for (const auto & t : trees) {
            CHECK(is_tree(t));
            strings.insert(tree_canonical_string(t));
        }
        CHECK(strings.size() == trees.size());
    }
}

TEST_CASE("labelled trees collapse onto the isomorphism classes")
{
    for (unsigned n = 2; n <= 7; ++n) {
        auto labelled = all_labelled_trees(n);
        std::size_t expected = 1;
        for (unsigned i = 0; i + 2 < n; ++i)
            expected *= n;
        CHECK(labelled.size() == expected);
        std::set<std::string> classes;
        for (const auto & t : labelled)
            classes.insert(tree_canonical_string(t));
        CHECK(classes.size() == nonisomorphic_trees(n).size());
    }
}

TEST_CASE("random connected graphs are connected and seeded")
{
    std::mt19937_64 a(11);
    std::mt19937_64 b(11);
    for (int i = 0; i < 20; ++i) {
        auto g = random_connected_graph(9, 0.2, a);
        CHECK(is_connected(g));
        CHECK(g == random_connected_graph(9, 0.2, b));
    }
}
