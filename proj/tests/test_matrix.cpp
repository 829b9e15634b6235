#include "doctest.h"

#include "zforce/errors.hpp"
#include "zforce/families.hpp"
#include "zforce/matrix.hpp"

#include <cmath>
#include <limits>
#include <sstream>

using namespace zforce;

namespace {

auto ones_plus_identity(unsigned n) -> DenseMatrix
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Ones(n, n) + Eigen::MatrixXd::Identity(n, n);
    return DenseMatrix::from_real(m);
}

} // namespace

TEST_CASE("numeric rank")
{
    CHECK(numeric_rank(DenseMatrix::from_real(Eigen::MatrixXd::Identity(5, 5))) == 5);
    CHECK(numeric_rank(DenseMatrix::from_real(Eigen::MatrixXd::Ones(4, 4))) == 1);
    CHECK(numeric_rank(DenseMatrix(3, 3)) == 0);
    Eigen::MatrixXd near = Eigen::MatrixXd::Identity(3, 3);
    near(2, 2) = 1e-10;
    CHECK(numeric_rank(DenseMatrix::from_real(near)) == 2);
    CHECK(numeric_rank(DenseMatrix::from_real(near), 1e-12) == 3);
    auto sv = singular_values(ones_plus_identity(3));
    REQUIRE(sv.size() == 3);
    CHECK(sv[0] == doctest::Approx(4.0));
    CHECK(sv[2] == doctest::Approx(1.0));
}

TEST_CASE("non-finite entries are rejected")
{
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(DenseMatrix{m}, InvalidArgument);
    DenseMatrix a(2, 2);
    CHECK_THROWS_AS(a.set(0, 0, Complex(INFINITY, 0)), InvalidArgument);
}

TEST_CASE("pattern checks")
{
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
    d.diagonal() << 1, 2, 3;
    CHECK(pattern_matches(DenseMatrix::from_real(d), Graph(3)));
    auto m = ones_plus_identity(4);
    CHECK(pattern_matches(m, complete_graph(4)));
    m.set(1, 3, 0.0);
    auto check = pattern_matches(m, complete_graph(4));
    CHECK_FALSE(check.verdict);
    REQUIRE(check.mismatch.has_value());
    CHECK(*check.mismatch == std::pair<std::size_t, std::size_t>{1, 3});
    // tiny entries count as zero relative to the largest entry
    auto p = ones_plus_identity(3);
    p.set(0, 2, 1e-12);
    p.set(2, 0, 1e-12);
    CHECK(pattern_matches(p, path_graph(3)));
    CHECK_THROWS_AS(pattern_matches(p, path_graph(4)), InvalidArgument);
    CHECK(support_matches(p, ZeroPattern{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}));
    CHECK_THROWS_AS(support_matches(p, ZeroPattern{{1}}), InvalidArgument);
}

TEST_CASE("positive semidefiniteness")
{
    CHECK(is_psd(ones_plus_identity(5)));
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = -1;
    CHECK_FALSE(is_psd(DenseMatrix::from_real(d)));
    CHECK(is_psd(DenseMatrix::from_real(Eigen::MatrixXd::Ones(3, 3))));
    Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(2, 2);
    asym(0, 1) = 1;
    CHECK_THROWS_AS(is_psd(DenseMatrix::from_real(asym)), InvalidArgument);
    Eigen::MatrixXcd herm(2, 2);
    herm << 2, Complex(0, 1), Complex(0, -1), 2;
    DenseMatrix h{herm};
    CHECK(h.is_hermitian());
    CHECK_FALSE(h.is_real());
    CHECK(is_psd(h));
}

TEST_CASE("row space residual")
{
    Eigen::MatrixXd m(3, 3);
    m << 1, 0, 0, 0, 1, 0, 2, -3, 0;
    auto a = DenseMatrix::from_real(m);
    CHECK(row_space_residual(a, {0, 1}, {2}) < 1e-14);
    m(2, 2) = 1;
    CHECK(row_space_residual(DenseMatrix::from_real(m), {0, 1}, {2}) > 0.1);
}

TEST_CASE("matrix text format round trips")
{
    Eigen::MatrixXcd z(2, 3);
    z << Complex(1, 0), Complex(-0.5, 0.8660254037844386), Complex(0, -2), Complex(1e-20, 3), Complex(-7, 0),
        Complex(0.125, 0);
    DenseMatrix a{z};
    std::stringstream text;
    write_matrix(text, a);
    CHECK(text.str().rfind("2 3 C\n", 0) == 0);
    auto b = read_matrix(text);
    CHECK(b.data() == a.data());

    auto r = ones_plus_identity(2);
    std::stringstream rt;
    write_matrix(rt, r);
    CHECK(rt.str() == "2 2 R\n2 1\n1 2\n");
    CHECK(read_matrix(rt).data() == r.data());

    std::istringstream parsed("1 2 C\n1-2i 3e-1+1e+1i\n");
    auto p = read_matrix(parsed);
    CHECK(p(0, 0) == Complex(1, -2));
    CHECK(p(0, 1) == Complex(0.3, 10));
}

TEST_CASE("matrix text format errors")
{
    auto fails = [](const std::string & text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_matrix(in), ParseError);
    };
    fails("");
    fails("2 2 X\n1 2 3 4");
    fails("2 2 R\n1 2 3");
    fails("1 1 R\n1+2i");
    fails("1 1 R\nabc");
    fails("1 1 R\n1 2");
    fails("1 1 C\n1+zi");
}
