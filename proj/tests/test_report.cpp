#include "doctest.h"

#include "zforce/enumerate.hpp"
#include "zforce/errors.hpp"
#include "zforce/families.hpp"
#include "zforce/report.hpp"

using namespace zforce;

TEST_CASE("bounds JSON round trips")
{
    for (const auto & g : {pinwheel12(), mobius_ladder(8), Graph(3), star_graph(4)}) {
        auto r = bounds_report(g);
        auto text = to_json(r).dump();
        CHECK(bounds_from_json(Json::parse(text)) == r);
    }
    for (const auto & g : connected_graphs(5)) {
        auto r = bounds_report(g);
        CHECK(bounds_from_json(Json::parse(to_json(r).dump())) == r);
    }
}

TEST_CASE("bounds JSON carries both label bases")
{
    auto r = bounds_report(pinwheel12());
    auto j = to_json(r);
    CHECK(j["Z"] == 4);
    CHECK(j["Zplus"] == 3);
    CHECK(j["lower_Mplus"] == 3);
    auto first = j["psd_zfs"][0].get<unsigned>();
    CHECK(j["zero_based"]["psd_zfs"][0].get<unsigned>() == first - 1);
}

TEST_CASE("malformed bounds JSON")
{
    CHECK_THROWS_AS(bounds_from_json(Json::parse("{}")), ParseError);
    auto j = to_json(bounds_report(path_graph(3)));
    j["zfs"] = Json::array({7});
    CHECK_THROWS_AS(bounds_from_json(j), ParseError);
}

TEST_CASE("search JSON")
{
    auto r = minimum_forcing_sets(path_graph(3), Rule::standard);
    auto j = search_json("P3", 3, Rule::standard, r);
    CHECK(j["value"] == 1);
    CHECK(j["rule"] == "standard");
    CHECK(j["sets"] == Json::parse("[[1],[3]]"));
    CHECK(j["sets_zero_based"] == Json::parse("[[0],[2]]"));
    CHECK(j.contains("nodes_explored"));
}

TEST_CASE("bounds table")
{
    auto text = format_bounds(bounds_report(cycle_graph(5)));
    CHECK(text.find("Z+") != std::string::npos);
    CHECK(text.find("cc          5") != std::string::npos);
}
