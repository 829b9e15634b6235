#include "doctest.h"

#include "oracles.hpp"

#include "zforce/enumerate.hpp"
#include "zforce/errors.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"

#include <random>

using namespace zforce;

namespace {

auto from_mask(unsigned n, unsigned mask) -> VertexSet
{
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1u)
            s.insert(v);
    return s;
}

auto to_set(unsigned n, const std::vector<bool> & black) -> VertexSet
{
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if (black[v])
            s.insert(v);
    return s;
}

} // namespace

TEST_CASE("path forced from an endpoint")
{
    auto log = derived_set(path_graph(4), VertexSet(4, {0}), Rule::standard);
    CHECK(log.complete());
    REQUIRE(log.forces.size() == 3);
    for (unsigned i = 0; i < 3; ++i) {
        CHECK(log.forces[i].forcer == i);
        CHECK(log.forces[i].forced == i + 1);
        CHECK(log.forces[i].step == i + 1);
    }
}

TEST_CASE("any single vertex psd-forces a tree")
{
    for (const auto & t : nonisomorphic_trees(7))
        for (Vertex v = 0; v < 7; ++v)
            CHECK(derived_set(t, VertexSet(7, {v}), Rule::psd).complete());
}

TEST_CASE("pinwheel forcing sets")
{
    auto g = pinwheel12();
    CHECK(derived_set(g, VertexSet(12, {0, 1, 5, 9}), Rule::standard).complete());
    CHECK(derived_set(g, VertexSet(12, {3, 4, 5}), Rule::psd).complete());
    CHECK(is_forcing_set(g, g.all(), Rule::standard));
    // no 3-subset forces under the standard rule
    unsigned forcing = 0;
    for (unsigned mask = 0; mask < (1u << 12); ++mask)
        if (__builtin_popcount(mask) == 3 && is_forcing_set(g, from_mask(12, mask), Rule::standard))
            ++forcing;
    CHECK(forcing == 0);
}

TEST_CASE("batch closure and logged engine agree with the oracle")
{
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto & g : nonisomorphic_graphs(n)) {
            auto a = oracle::adjacency(g);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                auto s = from_mask(n, mask);
                std::vector<bool> black(n);
                for (unsigned v = 0; v < n; ++v)
                    black[v] = (mask >> v) & 1u;
                for (auto rule : {Rule::standard, Rule::psd}) {
                    auto expect = to_set(n, oracle::closure(a, black, rule == Rule::psd));
                    auto log = derived_set(g, s, rule);
                    REQUIRE(log.derived == expect);
                    REQUIRE(closure(g, s, rule) == expect);
                    REQUIRE_FALSE(verify_force_log(g, log).has_value());
                    REQUIRE(is_fixpoint(g, log.derived, rule));
                }
            }
        }
}

TEST_CASE("monotonicity and rule dominance on random graphs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned n = 4 + static_cast<unsigned>(rng() % 9);
        auto g = random_connected_graph(n, 0.25, rng);
        unsigned mask = static_cast<unsigned>(rng()) & ((1u << n) - 1);
        unsigned bigger = mask | (static_cast<unsigned>(rng()) & ((1u << n) - 1));
        auto s = from_mask(n, mask);
        auto t = from_mask(n, bigger);
        for (auto rule : {Rule::standard, Rule::psd})
            CHECK(closure(g, s, rule).is_subset_of(closure(g, t, rule)));
        CHECK(closure(g, s, Rule::standard).is_subset_of(closure(g, s, Rule::psd)));
    }
}

TEST_CASE("wide graphs use the multi-word kernels")
{
    auto p = path_graph(100);
    CHECK(is_forcing_set(p, VertexSet(100, {0}), Rule::standard));
    CHECK_FALSE(is_forcing_set(p, VertexSet(100, {50}), Rule::standard));
    CHECK(is_forcing_set(p, VertexSet(100, {50}), Rule::psd));
    auto log = derived_set(p, VertexSet(100, {99}), Rule::standard);
    CHECK(log.forces.size() == 99);
    CHECK(reversal(log) == VertexSet(100, {0}));
}

TEST_CASE("tampered logs are rejected")
{
    auto g = path_graph(4);
    auto log = derived_set(g, VertexSet(4, {0}), Rule::standard);
    auto bad = log;
    std::swap(bad.forces[0], bad.forces[1]);
    CHECK(verify_force_log(g, bad).has_value());
    auto short_log = log;
    short_log.forces.pop_back();
    CHECK(verify_force_log(g, short_log).has_value());
}

TEST_CASE("chains and reversals")
{
    auto p = path_graph(5);
    auto log = derived_set(p, VertexSet(5, {0}), Rule::standard);
    auto c = chains(log);
    REQUIRE(c.chains.size() == 1);
    CHECK(c.chains[0] == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(reversal(log) == VertexSet(5, {4}));

    auto all = derived_set(p, p.all(), Rule::standard);
    CHECK(chains(all).chains.size() == 5);
    CHECK(reversal(all) == p.all());

    auto g = pinwheel12();
    auto pl = derived_set(g, VertexSet(12, {0, 1, 5, 9}), Rule::standard);
    auto pc = chains(pl);
    CHECK(pc.chains.size() == 4);
    VertexSet covered(12);
    for (const auto & chain : pc.chains) {
        VertexSet members(12, chain);
        CHECK((covered & members).empty());
        covered = covered | members;
        CHECK(induces_path(g, members));
    }
    CHECK(covered == g.all());
    auto rev = reversal(pl);
    CHECK(rev.size() == 4);
    CHECK(is_forcing_set(g, rev, Rule::standard));

    auto rl = reversed_log(g, pl);
    CHECK(rl.initial == rev);
    CHECK_FALSE(verify_force_log(g, rl).has_value());
    CHECK(rl.complete());

    CHECK_THROWS_AS(chains(derived_set(g, VertexSet(12, {3, 4, 5}), Rule::psd)), InvalidArgument);
    CHECK_THROWS_AS(chains(derived_set(p, VertexSet(5, {2}), Rule::standard)), InvalidArgument);
}

TEST_CASE("reversal theorem over small connected graphs")
{
    for (unsigned n = 2; n <= 6; ++n)
        for (const auto & g : connected_graphs(n))
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                auto s = from_mask(n, mask);
                auto log = derived_set(g, s, Rule::standard);
                if (! log.complete())
                    continue;
                auto rev = reversal(log);
                REQUIRE(rev.size() == s.size());
                REQUIRE(is_forcing_set(g, rev, Rule::standard));
            }
}

TEST_CASE("certificates")
{
    auto log = derived_set(path_graph(3), VertexSet(3, {0}), Rule::standard);
    CHECK(certificate(log) == "rule standard\ninitial {1}\n1 1 -> 2\n2 2 -> 3\nderived {1,2,3}\n");
    auto psd = derived_set(star_graph(2), VertexSet(3, {0}), Rule::psd);
    auto text = certificate(psd);
    CHECK(text.find("rule psd\n") == 0);
    CHECK(text.find("1 1 -> 2 [2]") != std::string::npos);
}

TEST_CASE("rule names")
{
    CHECK(parse_rule("psd") == Rule::psd);
    CHECK(to_string(Rule::standard) == "standard");
    CHECK_THROWS_AS(parse_rule("fast"), InvalidArgument);
}
