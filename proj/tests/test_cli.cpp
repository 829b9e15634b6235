#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run
{
    int status;
    std::string out;
};

auto zforce(const std::string & args) -> Run
{
    const char * bin = std::getenv("ZFORCE_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (auto got = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("param")
{
    auto r = zforce("param --family pinwheel12 --rule psd");
    CHECK(r.status == 0);
    CHECK(r.out.find("Z+ = 3") != std::string::npos);
    CHECK(zforce("param --family path 5 --rule standard").out.find("Z = 1") != std::string::npos);
    auto k4 = zforce("--json param --g6 C~ --rule standard --all-min");
    auto j = nlohmann::json::parse(k4.out);
    CHECK(j["value"] == 3);
    CHECK(j["sets"].size() == 4);
    auto cert = zforce("param --family path 3 --certificate");
    CHECK(cert.out.find("1 1 -> 2") != std::string::npos);
}

TEST_CASE("bounds")
{
    auto r = zforce("--json bounds --family pinwheel12");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["Z"] == 4);
    CHECK(j["path_cover"] == 3);
    CHECK(j["clique_cover"] == 9);
    auto e = nlohmann::json::parse(zforce("--json bounds --g6 D??").out);
    CHECK(e["clique_cover"] == 0);
    CHECK(e["Z"] == 5);
}

TEST_CASE("inputs from files")
{
    {
        std::ofstream f("cli_test_graph.g6");
        f << ">>graph6<<Bg\n";
        std::ofstream e("cli_test_graph.txt");
        e << "n 4\n1 2\n2 3\n3 4\n4 1\n";
    }
    CHECK(zforce("param --g6 cli_test_graph.g6").out.find("Z = 1") != std::string::npos);
    CHECK(zforce("param --edges cli_test_graph.txt").out.find("Z = 2") != std::string::npos);
    CHECK(zforce("-o cli_test_out.txt param --family cycle 5").status == 0);
    std::ifstream back("cli_test_out.txt");
    std::string first;
    std::getline(back, first);
    CHECK(first.find("cycle 5") != std::string::npos);
}

TEST_CASE("os and witness")
{
    auto os = nlohmann::json::parse(zforce("--json os --family mobius_ladder 8").out);
    CHECK(os["OS"] == 4);
    auto tc = nlohmann::json::parse(zforce("--json witness tree-clique --tree Bg --r 2").out);
    CHECK(tc["rank"] == 4);
    CHECK(tc["nullity"] == 2);
    auto h = nlohmann::json::parse(zforce("--json witness h43").out);
    CHECK(h["rank"] == 3);
    CHECK(h["pattern_ok"] == true);
    CHECK(zforce("witness h43 --params 2 1 1 --root omega-bar").out.find("# rank 3") != std::string::npos);
    CHECK(zforce("witness h43 --root real").status == 1);
}

TEST_CASE("exit codes")
{
    CHECK(zforce("param --g6 A_x").status == 2);
    CHECK(zforce("param --family path x").status == 2);
    CHECK(zforce("param --nonsense").status == 2);
    CHECK(zforce("param --family complete 30").status == 3);
    CHECK(zforce("param --family path 10 --search-limit 5").status == 3);
    CHECK(zforce("param --family complete 30 --search-limit 40").out.find("Z = 29") != std::string::npos);
    CHECK(zforce("param --family path 5 --json").out.find("\"value\": 1") != std::string::npos);
    CHECK(zforce("param --family nope").status == 1);
    CHECK(zforce("param").status == 1);
    CHECK(zforce("param --g6 A_ --family path 3").status == 1);
}

TEST_CASE("reproduce")
{
    auto r = zforce("reproduce --only h43");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS 11 h43") != std::string::npos);
    CHECK(r.out.find("not reproduced") != std::string::npos);
    auto d = zforce("reproduce --only duality --max-n 6");
    CHECK(d.status == 0);
    CHECK(zforce("reproduce --only nothing").status == 1);
}
