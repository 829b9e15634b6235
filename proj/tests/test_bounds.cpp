#include "doctest.h"

#include "oracles.hpp"

#include "zforce/bounds.hpp"
#include "zforce/enumerate.hpp"
#include "zforce/errors.hpp"
#include "zforce/families.hpp"

#include <algorithm>
#include <random>

using namespace zforce;

TEST_CASE("path cover examples")
{
    CHECK(path_cover_number(pinwheel12()).value == 3);
    CHECK(path_cover_number(path_graph(7)).value == 1);
    CHECK(path_cover_number(star_graph(3)).value == 2);
    CHECK(path_cover_number(Graph(4)).value == 4);
    CHECK(path_cover_number(complete_graph(5)).value == 3);
    CHECK_THROWS_AS(path_cover_number(path_graph(17)), SizeLimitError);
}

TEST_CASE("path cover matches the partition oracle")
{
    for (unsigned n = 1; n <= 7; ++n)
        for (const auto & g : nonisomorphic_graphs(n)) {
            auto pc = path_cover_number(g);
            REQUIRE(pc.value == oracle::path_cover(g));
            REQUIRE(pc.paths.size() == pc.value);
            REQUIRE(is_path_cover(g, pc.paths));
        }
}

TEST_CASE("path cover witness checker")
{
    auto c4 = cycle_graph(4);
    CHECK(is_path_cover(c4, {{0, 1, 2}, {3}}));
    CHECK_FALSE(is_path_cover(c4, {{0, 1, 2, 3}})); // not induced
    CHECK_FALSE(is_path_cover(c4, {{0, 2}, {1, 3}}));
    CHECK_FALSE(is_path_cover(c4, {{0, 1}}));
    CHECK_FALSE(is_path_cover(c4, {{0, 1}, {1, 2}, {3}}));
}

TEST_CASE("clique cover examples")
{
    CHECK(clique_cover_number(pinwheel12()).value == 9);
    CHECK(clique_cover_number(complete_graph(6)).value == 1);
    CHECK(clique_cover_number(cycle_graph(5)).value == 5);
    CHECK(clique_cover_number(Graph(3)).value == 0);
    CHECK(clique_cover_number(complete_bipartite(3, 3)).value == 9);
    CHECK_THROWS_AS(clique_cover_number(complete_graph(10)), SizeLimitError);
}

TEST_CASE("clique cover matches the combination oracle")
{
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto & g : nonisomorphic_graphs(n)) {
            auto cc = clique_cover_number(g);
            REQUIRE(cc.value == oracle::clique_cover(g));
            REQUIRE(cc.cliques.size() == cc.value);
            REQUIRE(is_clique_cover(g, cc.cliques));
        }
}

TEST_CASE("clique cover is deterministic across worker counts")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_connected_graph(9, 0.4, rng);
        if (g.edge_count() > 40)
            continue;
        BoundsOptions one;
        one.search.workers = 1;
        BoundsOptions many;
        many.search.workers = 6;
        auto a = clique_cover_number(g, one);
        auto b = clique_cover_number(g, many);
        CHECK(a.value == b.value);
        CHECK(a.cliques == b.cliques);
    }
}

TEST_CASE("maximal cliques")
{
    auto cl = maximal_cliques(pinwheel12());
    CHECK(cl.size() == 10); // 2-tree on 12 vertices: n - 2 triangles
    for (const auto & c : cl)
        CHECK(c.size() == 3);
    CHECK(maximal_cliques(Graph(2)).size() == 2);
}

TEST_CASE("bounds report on the pinwheel")
{
    auto r = bounds_report(pinwheel12());
    CHECK(r.n == 12);
    CHECK(r.delta == 2);
    CHECK(r.path_cover == 3);
    CHECK(r.clique_cover == 9);
    CHECK(r.z == 4);
    CHECK(r.zplus == 3);
    CHECK(r.os == 9);
    CHECK(r.lower_mplus == 3);
    CHECK(is_forcing_set(pinwheel12(), r.zfs, Rule::standard));
    CHECK(is_forcing_set(pinwheel12(), r.psd_zfs, Rule::psd));
    CHECK(std::any_of(r.notes.begin(), r.notes.end(),
                      [](const std::string & s) { return s.find("not certified") != std::string::npos; }));
}

TEST_CASE("bounds report on trees and edgeless graphs")
{
    for (const auto & t : nonisomorphic_trees(8)) {
        auto r = bounds_report(t);
        CHECK(r.zplus == 1);
        CHECK(r.path_cover == r.z);
        CHECK(r.clique_cover == 7);
        CHECK(r.lower_mplus == 1);
    }
    auto e = bounds_report(Graph(4));
    CHECK(e.clique_cover == 0);
    CHECK(e.z == 4);
    CHECK(e.zplus == 4);
}

TEST_CASE("external hM+ annotation")
{
    auto r = bounds_report(mobius_ladder(8));
    CHECK(r.zplus == 4);
    annotate_external_hmplus(r, 3, "literature");
    CHECK(r.notes.back().find("Z+ = 4 > hM+ = 3") != std::string::npos);
}

TEST_CASE("sandwich on every connected graph up to order 7")
{
    for (unsigned n = 1; n <= 7; ++n)
        for (const auto & g : connected_graphs(n)) {
            auto r = bounds_report(g);
            REQUIRE(r.delta <= r.zplus);
            REQUIRE(r.zplus <= r.z);
            REQUIRE(r.path_cover <= r.z);
            REQUIRE(r.lower_mplus <= static_cast<int>(r.zplus));
            REQUIRE(r.os + r.zplus == n);
        }
}
