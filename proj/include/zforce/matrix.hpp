#pragma once

#include "zforce/graph.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace zforce {

using Complex = std::complex<double>;

/// Dense complex matrix; real matrices have zero imaginary parts.
class DenseMatrix
{
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    /// Throws on non-finite entries.
    explicit DenseMatrix(Eigen::MatrixXcd data);
    static auto from_real(const Eigen::MatrixXd & data) -> DenseMatrix;

    [[nodiscard]] auto rows() const -> std::size_t { return static_cast<std::size_t>(data_.rows()); }
    [[nodiscard]] auto cols() const -> std::size_t { return static_cast<std::size_t>(data_.cols()); }
    [[nodiscard]] auto operator()(std::size_t i, std::size_t j) const -> Complex
    {
        return data_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    void set(std::size_t i, std::size_t j, Complex value);

    [[nodiscard]] auto data() const -> const Eigen::MatrixXcd & { return data_; }
    [[nodiscard]] auto max_abs() const -> double;
    [[nodiscard]] auto is_real() const -> bool;
    /// A = A* entrywise within an absolute tolerance.
    [[nodiscard]] auto is_hermitian(double tol = 1e-12) const -> bool;

private:
    Eigen::MatrixXcd data_;
};

/// Singular values, descending.
auto singular_values(const DenseMatrix & a) -> std::vector<double>;

/// Number of singular values above tol * sigma_max.
auto numeric_rank(const DenseMatrix & a, double tol = 1e-8) -> unsigned;

struct PatternCheck
{
    bool verdict = true;
    double tau = 1e-9;
    /// first (row, col) where support and pattern disagree
    std::optional<std::pair<std::size_t, std::size_t>> mismatch;

    explicit operator bool() const { return verdict; }
};

/// Off-diagonal support of a (|a_ij| > tau * max|a|) equals the edge set of g.
/// The diagonal is ignored.
auto pattern_matches(const DenseMatrix & a, const Graph & g, double tau = 1e-9) -> PatternCheck;

/// Rectangular zero-nonzero pattern, row-major; true marks a required nonzero.
using ZeroPattern = std::vector<std::vector<bool>>;

/// Every entry, diagonal included, nonzero exactly where the pattern says.
auto support_matches(const DenseMatrix & a, const ZeroPattern & pattern, double tau = 1e-9) -> PatternCheck;

/// Smallest eigenvalue >= -tol * max(1, |lambda|_max). Throws on a
/// non-Hermitian argument.
auto is_psd(const DenseMatrix & a, double tol = 1e-9) -> bool;

/// Eigenvalues of a Hermitian matrix, ascending.
auto hermitian_eigenvalues(const DenseMatrix & a) -> std::vector<double>;

/// Largest residual, relative to the row norm, of projecting each target row
/// onto the span of the basis rows (complex linear combinations).
auto row_space_residual(const DenseMatrix & a, const std::vector<std::size_t> & basis_rows,
                        const std::vector<std::size_t> & target_rows) -> double;

/// Plain-text dense format: "rows cols R|C", then row-major entries separated
/// by whitespace; complex entries as re+imi (e.g. -0.5+0.866i).
auto read_matrix(std::istream & in) -> DenseMatrix;
void write_matrix(std::ostream & out, const DenseMatrix & a);

} // namespace zforce
