#include "zforce/witness.hpp"

#include "zforce/errors.hpp"
#include "zforce/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>
#include <sstream>

namespace zforce {

namespace {

// leaf-last order: every vertex after the first is adjacent to exactly one earlier vertex
auto bfs_order(const Graph & t) -> std::pair<std::vector<Vertex>, std::vector<Vertex>>
{
    std::vector<Vertex> order;
    std::vector<Vertex> parent(t.order(), 0);
    std::vector<bool> seen(t.order(), false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop();
        order.push_back(u);
        for (auto w : t.neighbors(u).vertices())
            if (! seen[w]) {
                seen[w] = true;
                parent[w] = u;
                queue.push(w);
            }
    }
    return {order, parent};
}

auto block_name(Vertex v, unsigned r, std::size_t index) -> std::string
{
    std::ostringstream out;
    out << "(" << v + 1 << "," << index % r + 1 << ")";
    return out.str();
}

} // namespace

auto build_tree_clique_witness(const Graph & t, unsigned r, const AlphaSchedule & schedule) -> TreeCliqueWitness
{
    if (t.order() < 2 || ! is_tree(t))
        throw InvalidArgument("tree-clique witness needs a tree with at least 2 vertices");
    if (r < 2)
        throw InvalidArgument("tree-clique witness needs r >= 2");
    auto n = t.order();
    if (static_cast<std::size_t>(n) * r > max_order)
        throw SizeLimitError("t box K_r has order " + std::to_string(static_cast<std::size_t>(n) * r)
                             + ", above the limit " + std::to_string(max_order));

    auto ri = static_cast<Eigen::Index>(r);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(ri, ri) + Eigen::MatrixXd::Ones(ri, ri);
    Eigen::MatrixXd m_inv = Eigen::MatrixXd::Identity(ri, ri) - Eigen::MatrixXd::Ones(ri, ri) / double(r + 1);

    TreeCliqueWitness out;
    out.pattern = cartesian_product(t, complete_graph(r));
    auto [order, parent] = bfs_order(t);
    out.order = order;

    auto total = static_cast<Eigen::Index>(n * r);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(total, total);
    auto add_block = [&](Eigen::MatrixXd & target, Vertex p, Vertex v, double alpha) {
        auto pi = static_cast<Eigen::Index>(p * r);
        auto vi = static_cast<Eigen::Index>(v * r);
        target.block(pi, pi, ri, ri) += alpha * m;
        target.block(vi, vi, ri, ri) += alpha * m_inv;
        target.block(pi, vi, ri, ri) += alpha * Eigen::MatrixXd::Identity(ri, ri);
        target.block(vi, pi, ri, ri) += alpha * Eigen::MatrixXd::Identity(ri, ri);
    };

    // pattern check on the blocks placed so far
    std::vector<bool> placed(n, false);
    placed[order[0]] = true;
    auto first_cancelled = [&](const Eigen::MatrixXd & cand) -> std::optional<std::pair<std::size_t, std::size_t>> {
        double threshold = 1e-9 * cand.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < total; ++i) {
            if (! placed[static_cast<std::size_t>(i) / r])
                continue;
            for (Eigen::Index j = 0; j < total; ++j) {
                if (i == j || ! placed[static_cast<std::size_t>(j) / r])
                    continue;
                bool nonzero = std::abs(cand(i, j)) > threshold;
                if (nonzero != out.pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
                    return std::pair{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
            }
        }
        return std::nullopt;
    };

    std::mt19937_64 rng(schedule.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t k = 1; k < order.size(); ++k) {
        auto v = order[k];
        auto p = parent[v];
        placed[v] = true;
        std::size_t tries = schedule.fixed.size() + schedule.random_tries;
        std::optional<std::pair<std::size_t, std::size_t>> last;
        bool done = false;
        for (std::size_t attempt = 0; attempt < tries && ! done; ++attempt) {
            double alpha = attempt < schedule.fixed.size() ? schedule.fixed[attempt] : unit(rng);
            if (! (alpha > 0.0))
                continue;
            Eigen::MatrixXd cand = a;
            add_block(cand, p, v, alpha);
            last = first_cancelled(cand);
            if (! last) {
                a = std::move(cand);
                out.alphas.push_back(alpha);
                done = true;
            }
        }
        if (! done) {
            auto [i, j] = last.value_or(std::pair<std::size_t, std::size_t>{0, 0});
            throw InvariantViolation("alpha schedule exhausted adding tree vertex " + std::to_string(v + 1)
                                     + ": entry " + block_name(static_cast<Vertex>(i / r), r, i) + " x "
                                     + block_name(static_cast<Vertex>(j / r), r, j) + " keeps cancelling");
        }
    }
    out.matrix = DenseMatrix::from_real(a);
    return out;
}

auto parse_cube_root(const std::string & text) -> CubeRoot
{
    if (text == "omega" || text == "w")
        return CubeRoot::omega;
    if (text == "omega-bar" || text == "omega_bar" || text == "wbar")
        return CubeRoot::omega_bar;
    throw InvalidArgument("root must be omega or omega-bar, got '" + text
                          + "'; no real x solves 1 + x + x^2 = 0 since its real minimum is 3/4");
}

auto cube_root_value(CubeRoot root) -> Complex
{
    auto w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    return root == CubeRoot::omega ? w : std::conj(w);
}

auto sticky_equation_residual(Complex x) -> Complex { return 1.0 + x + x * x; }

auto h43_support() -> const ZeroPattern &
{
    static const ZeroPattern pattern = [] {
        const char * rows[] = {"01111001", "00111110", "10011101", "11001110",
                               "11100101", "11110010", "01010111", "10101011"};
        ZeroPattern out;
        for (const auto * row : rows) {
            std::vector<bool> bits;
            for (const auto * c = row; *c; ++c)
                bits.push_back(*c == '1');
            out.push_back(bits);
        }
        return out;
    }();
    return pattern;
}

auto h43_labels() -> const std::vector<unsigned> &
{
    // cycle vertex i carries label i+1; the hubs were matched by comparing
    // zero patterns
    static const std::vector<unsigned> labels = [] {
        std::vector<unsigned> out;
        for (unsigned i = 0; i < 12; ++i)
            out.push_back(i + 1);
        for (unsigned hub : {14u, 13u, 16u, 15u})
            out.push_back(hub);
        return out;
    }();
    return labels;
}

auto build_h43_witness(const H43Params & params) -> DenseMatrix
{
    return build_h43_witness_with_ratio(cube_root_value(params.root), params.a_15_6, params.a_3_12, params.a_3_14);
}

auto build_h43_witness_with_ratio(Complex ratio, Complex a_15_6, Complex a_3_12, Complex a_3_14) -> DenseMatrix
{
    for (auto [name, value] : {std::pair{"a_15_6", a_15_6}, std::pair{"a_3_12", a_3_12}, std::pair{"a_3_14", a_3_14}})
        if (std::abs(value) == 0.0)
            throw InvalidArgument(std::string("free parameter ") + name + " must be nonzero");
    auto residual = sticky_equation_residual(ratio);
    if (std::abs(residual) > 1e-12) {
        std::ostringstream msg;
        msg << "ratio a_7_4/a_15_6 = " << ratio.real() << (ratio.imag() < 0 ? "" : "+") << ratio.imag()
            << "i leaves 1 + x + x^2 = " << std::abs(residual) << " != 0";
        if (std::abs(ratio.imag()) == 0.0)
            msg << "; over the reals 1 + x + x^2 >= 3/4";
        throw InvalidArgument(msg.str());
    }

    // dependency order; each line only reads symbols fixed above it
    Complex a156 = a_15_6;
    Complex a312 = a_3_12;
    Complex a314 = a_3_14;
    Complex a74 = ratio * a156;
    Complex a310 = 1.0;
    Complex a116 = a74 + a156;
    Complex a38 = a310 * (a74 - a116) / a74;
    Complex a94 = (1.0 - a38) * a74;
    Complex a96 = a94;
    Complex a58 = (a38 - 1.0) * a74;
    Complex a710 = a74 - a310 * a74 - a94;
    Complex a510 = (a310 - 1.0) * a74 + a710;
    Complex a712 = -a312 * a116;
    Complex a512 = a312 * a74 + a712;
    Complex a516 = -a74;
    Complex a714 = -a314 * a74;
    Complex a916 = a94 - a74;
    Complex a912 = a312 * a74 + a712 - a312 * a94 + a312 * a96;
    Complex a114 = a74;
    Complex a1114 = a314 * (a116 - a114);
    Complex a118 = a38 * a116;
    Complex a1316 = 1.0;
    Complex a1314 = -a314;
    Complex a1312 = -a312;
    Complex a138 = a116 / a74;
    Complex a1516 = -a74;
    Complex a1514 = a314 * a156;
    Complex a1510 = -a116 + a156;

    const Complex o = 0.0;
    const Complex l = 1.0;
    const Complex rows[8][8] = {
        {o, l, l, l, l, o, o, l},
        {o, o, l, a38, a310, a312, a314, o},
        {l, o, o, a58, a510, a512, o, a516},
        {l, a74, o, o, a710, a712, a714, o},
        {l, a94, a96, o, o, a912, o, a916},
        {l, a114, a116, a118, o, o, a1114, o},
        {o, l, o, a138, o, a1312, a1314, a1316},
        {l, o, a156, o, a1510, o, a1514, a1516},
    };
    DenseMatrix out(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            out.set(i, j, rows[i][j]);

    auto check = support_matches(out, h43_support());
    if (! check) {
        auto [i, j] = *check.mismatch;
        throw InvariantViolation("entry a_" + std::to_string(2 * i + 1) + "_" + std::to_string(2 * j + 2)
                                 + " vanished for these free parameters; try other values of a_15_6, "
                                   "a_3_12, a_3_14");
    }
    return out;
}

} // namespace zforce
