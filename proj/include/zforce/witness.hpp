#pragma once

#include "zforce/graph.hpp"
#include "zforce/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zforce {

/// Step sizes tried in order when adding a new block; once the fixed values
/// run out, random draws from (0,1) are used.
struct AlphaSchedule
{
    std::vector<double> fixed{1.0, 0.5, 1.0 / 3.0};
    unsigned random_tries = 64;
    std::uint64_t seed = 0x5eed;
};

struct TreeCliqueWitness
{
    DenseMatrix matrix;
    Graph pattern;              ///< t box K_r, vertex (i,j) -> i*r + j
    std::vector<Vertex> order;  ///< leaf-last insertion order of tree vertices
    std::vector<double> alphas; ///< alpha used for each inserted vertex after the first edge
};

/// Real symmetric psd matrix of rank (n-1)r whose graph is t box K_r.
auto build_tree_clique_witness(const Graph & t, unsigned r, const AlphaSchedule & schedule = {})
    -> TreeCliqueWitness;

enum class CubeRoot
{
    omega,     ///< exp(2 pi i / 3)
    omega_bar, ///< its conjugate
};

auto parse_cube_root(const std::string & text) -> CubeRoot;
auto cube_root_value(CubeRoot root) -> Complex;

struct H43Params
{
    Complex a_15_6{1.0, 0.0};
    Complex a_3_12{1.0, 0.0};
    Complex a_3_14{1.0, 0.0};
    CubeRoot root = CubeRoot::omega;
};

/// Rows are the odd vertices 1,3,...,15 and columns the even vertices
/// 2,4,...,16 of H_4(3), in drawing labels. Entry names below use those
/// labels, e.g. a_7_4 sits in row 7 and column 4.
auto build_h43_witness(const H43Params & params = {}) -> DenseMatrix;

/// Same construction with an arbitrary ratio x = a_7_4 / a_15_6. Rejected
/// unless 1 + x + x^2 vanishes, which needs a primitive cube root of unity.
auto build_h43_witness_with_ratio(Complex ratio, Complex a_15_6, Complex a_3_12, Complex a_3_14) -> DenseMatrix;

/// Support of the rank-3 pattern: true marks a nonzero entry.
auto h43_support() -> const ZeroPattern &;

/// Drawing label (1..16) of each vertex of four_hub_wheel(3).
auto h43_labels() -> const std::vector<unsigned> &;

/// 1 + x + x^2
auto sticky_equation_residual(Complex x) -> Complex;

/// Exact minimum of 1 + x + x^2 over real x, attained at x = -1/2.
constexpr double sticky_real_minimum = 0.75;

} // namespace zforce
