#include "doctest.h"

#include "zforce/enumerate.hpp"
#include "zforce/errors.hpp"
#include "zforce/families.hpp"
#include "zforce/search.hpp"
#include "zforce/witness.hpp"

#include <cmath>

using namespace zforce;

namespace {

void check_tree_witness(const Graph & t, unsigned r)
{
    auto w = build_tree_clique_witness(t, r);
    auto n = t.order();
    CHECK(w.matrix.rows() == n * r);
    CHECK(w.matrix.is_real());
    CHECK(w.matrix.is_hermitian());
    CHECK(is_psd(w.matrix));
    CHECK(pattern_matches(w.matrix, w.pattern));
    CHECK(w.pattern == cartesian_product(t, complete_graph(r)));
    CHECK(numeric_rank(w.matrix) == (n - 1) * r);
    auto sv = singular_values(w.matrix);
    auto size = sv.size();
    CHECK(sv[size - r - 1] / std::max(sv[size - r], 1e-300) >= 1e4);
    CHECK(w.alphas.size() == n - 1);
}

} // namespace

TEST_CASE("tree box clique witnesses")
{
    check_tree_witness(path_graph(2), 3);
    check_tree_witness(path_graph(2), 2);
    check_tree_witness(path_graph(3), 2);
    check_tree_witness(star_graph(3), 2);
    for (unsigned n = 2; n <= 6; ++n)
        for (const auto & t : nonisomorphic_trees(n))
            for (unsigned r : {2u, 3u})
                check_tree_witness(t, r);
}

TEST_CASE("nullity meets Z+ on tree box clique")
{
    for (const auto & t : nonisomorphic_trees(5)) {
        auto w = build_tree_clique_witness(t, 2);
        CHECK(zero_forcing_number(w.pattern, Rule::psd).value == 2);
        CHECK(w.matrix.rows() - numeric_rank(w.matrix) == 2);
    }
}

TEST_CASE("tree witness input checks")
{
    CHECK_THROWS_AS(build_tree_clique_witness(cycle_graph(4), 2), InvalidArgument);
    CHECK_THROWS_AS(build_tree_clique_witness(Graph(1), 2), InvalidArgument);
    CHECK_THROWS_AS(build_tree_clique_witness(path_graph(3), 1), InvalidArgument);
    CHECK_THROWS_AS(build_tree_clique_witness(path_graph(40), 4), SizeLimitError);
}

TEST_CASE("an exhausted alpha schedule names the cancelled entry")
{
    // alpha = 0 is skipped, so nothing is ever accepted
    AlphaSchedule none;
    none.fixed = {0.0};
    none.random_tries = 0;
    try {
        build_tree_clique_witness(path_graph(3), 2, none);
        FAIL("expected a failure");
    }
    catch (const InvariantViolation & e) {
        CHECK(std::string(e.what()).find("alpha schedule exhausted") != std::string::npos);
    }
}

TEST_CASE("H4(3) witness has complex rank 3")
{
    for (auto root : {CubeRoot::omega, CubeRoot::omega_bar}) {
        H43Params p;
        p.root = root;
        auto a = build_h43_witness(p);
        CHECK(a.rows() == 8);
        CHECK_FALSE(a.is_real());
        CHECK(numeric_rank(a) == 3);
        auto sv = singular_values(a);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(sv[i] > 1e-4 * sv[0]);
        for (std::size_t i = 3; i < 8; ++i)
            CHECK(sv[i] < 1e-8 * sv[0]);
        CHECK(support_matches(a, h43_support()));
        CHECK(row_space_residual(a, {0, 1, 2}, {3, 4, 5, 6, 7}) < 1e-8);
    }
}

TEST_CASE("conjugate root gives the conjugate matrix")
{
    auto a = build_h43_witness();
    H43Params p;
    p.root = CubeRoot::omega_bar;
    auto b = build_h43_witness(p);
    CHECK((a.data().conjugate() - b.data()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("other free parameters keep rank 3")
{
    for (Complex x : {Complex(2, 0), Complex(-0.5, 0), Complex(1, 1)})
        for (Complex y : {Complex(1, 0), Complex(3, 0)}) {
            H43Params p;
            p.a_15_6 = x;
            p.a_3_12 = y;
            p.a_3_14 = x * y;
            auto a = build_h43_witness(p);
            CHECK(numeric_rank(a) == 3);
            CHECK(support_matches(a, h43_support()));
        }
    H43Params zero;
    zero.a_3_12 = 0.0;
    CHECK_THROWS_AS(build_h43_witness(zero), InvalidArgument);
}

TEST_CASE("real ratios are rejected")
{
    for (double x : {1.0, 2.0, -0.5, -1.0})
        CHECK_THROWS_AS(build_h43_witness_with_ratio(x, 1.0, 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(parse_cube_root("real"), InvalidArgument);
    CHECK(parse_cube_root("omega-bar") == CubeRoot::omega_bar);
}

TEST_CASE("sticky equation")
{
    CHECK(std::abs(sticky_equation_residual(cube_root_value(CubeRoot::omega))) < 1e-12);
    CHECK(std::abs(sticky_equation_residual(cube_root_value(CubeRoot::omega_bar))) < 1e-12);
    CHECK(sticky_equation_residual(1.0) == Complex(3, 0));
    CHECK(sticky_equation_residual(-0.5) == Complex(0.75, 0));
    CHECK(sticky_real_minimum == 0.75);
    // (x + 1/2)^2 + 3/4 on a grid never dips below the closed form
    for (int i = -400; i <= 400; ++i) {
        double x = i / 100.0;
        CHECK(std::real(sticky_equation_residual(x)) >= sticky_real_minimum);
    }
}

TEST_CASE("rank-3 zero pattern is the edge set of H4(3)")
{
    auto h = four_hub_wheel(3);
    const auto & labels = h43_labels();
    REQUIRE(labels.size() == 16);
    std::vector<Vertex> by_label(17);
    for (Vertex v = 0; v < 16; ++v)
        by_label[labels[v]] = v;
    const auto & y = h43_support();
    unsigned zeros = 0;
    for (unsigned i = 0; i < 8; ++i)
        for (unsigned j = 0; j < 8; ++j) {
            auto odd = by_label[2 * i + 1];
            auto even = by_label[2 * j + 2];
            CHECK(y[i][j] == ! h.adjacent(odd, even));
            zeros += y[i][j] ? 0 : 1;
        }
    CHECK(zeros == h.edge_count());
    // odd labels form one colour class
    auto colour = bipartition(h);
    for (unsigned l = 1; l <= 16; ++l)
        CHECK((colour[by_label[l]] == colour[by_label[1]]) == (l % 2 == 1));
}
