#include "zforce/matrix.hpp"

#include "zforce/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>

namespace zforce {

namespace {

void check_finite(const Eigen::MatrixXcd & m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (! std::isfinite(m(i, j).real()) || ! std::isfinite(m(i, j).imag()))
                throw InvalidArgument("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                                      + ") is not finite");
}

auto parse_entry(const std::string & token, std::size_t index) -> Complex
{
    auto bad = [&]() {
        return ParseError("matrix entry " + std::to_string(index + 1) + " '" + token + "' is not a number");
    };
    if (token.empty())
        throw bad();
    if (token.back() != 'i') {
        std::size_t used = 0;
        double re = 0;
        try {
            re = std::stod(token, &used);
        }
        catch (const std::exception &) {
            throw bad();
        }
        if (used != token.size())
            throw bad();
        return {re, 0.0};
    }
    auto body = token.substr(0, token.size() - 1);
    // split at the last sign that is not the leading one or an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    try {
        std::size_t used = 0;
        if (split == std::string::npos) {
            if (body.empty() || body == "+" || body == "-")
                return {0.0, body == "-" ? -1.0 : 1.0};
            double im = std::stod(body, &used);
            if (used != body.size())
                throw bad();
            return {0.0, im};
        }
        auto re_text = body.substr(0, split);
        auto im_text = body.substr(split);
        double re = std::stod(re_text, &used);
        if (used != re_text.size())
            throw bad();
        double im = 0;
        if (im_text == "+" || im_text == "-")
            im = im_text == "-" ? -1.0 : 1.0;
        else {
            im = std::stod(im_text, &used);
            if (used != im_text.size())
                throw bad();
        }
        return {re, im};
    }
    catch (const ParseError &) {
        throw;
    }
    catch (const std::exception &) {
        throw bad();
    }
}

} // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : data_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols)))
{
}

DenseMatrix::DenseMatrix(Eigen::MatrixXcd data) : data_(std::move(data)) { check_finite(data_); }

auto DenseMatrix::from_real(const Eigen::MatrixXd & data) -> DenseMatrix
{
    return DenseMatrix(Eigen::MatrixXcd(data.cast<Complex>()));
}

void DenseMatrix::set(std::size_t i, std::size_t j, Complex value)
{
    if (! std::isfinite(value.real()) || ! std::isfinite(value.imag()))
        throw InvalidArgument("non-finite matrix entry");
    data_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
}

auto DenseMatrix::max_abs() const -> double { return data_.size() == 0 ? 0.0 : data_.cwiseAbs().maxCoeff(); }

auto DenseMatrix::is_real() const -> bool { return data_.imag().isZero(0.0); }

auto DenseMatrix::is_hermitian(double tol) const -> bool
{
    if (data_.rows() != data_.cols())
        return false;
    return (data_ - data_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

auto singular_values(const DenseMatrix & a) -> std::vector<double>
{
    if (a.rows() == 0 || a.cols() == 0)
        return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.data());
    const auto & s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

auto numeric_rank(const DenseMatrix & a, double tol) -> unsigned
{
    auto s = singular_values(a);
    if (s.empty() || s.front() == 0.0)
        return 0;
    auto threshold = tol * s.front();
    return static_cast<unsigned>(std::count_if(s.begin(), s.end(), [&](double x) { return x > threshold; }));
}

auto pattern_matches(const DenseMatrix & a, const Graph & g, double tau) -> PatternCheck
{
    if (a.rows() != g.order() || a.cols() != g.order())
        throw InvalidArgument("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols())
                              + " but the graph has order " + std::to_string(g.order()));
    PatternCheck out;
    out.tau = tau;
    auto threshold = tau * a.max_abs();
    for (std::size_t i = 0; i < a.rows() && out.verdict; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i == j)
                continue;
            bool nonzero = std::abs(a(i, j)) > threshold;
            if (nonzero != g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
                out.verdict = false;
                out.mismatch = std::pair{i, j};
                break;
            }
        }
    return out;
}

auto support_matches(const DenseMatrix & a, const ZeroPattern & pattern, double tau) -> PatternCheck
{
    if (pattern.size() != a.rows() || std::any_of(pattern.begin(), pattern.end(),
                                                  [&](const auto & row) { return row.size() != a.cols(); }))
        throw InvalidArgument("pattern shape does not match the matrix");
    PatternCheck out;
    out.tau = tau;
    auto threshold = tau * a.max_abs();
    for (std::size_t i = 0; i < a.rows() && out.verdict; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if ((std::abs(a(i, j)) > threshold) != pattern[i][j]) {
                out.verdict = false;
                out.mismatch = std::pair{i, j};
                break;
            }
    return out;
}

auto hermitian_eigenvalues(const DenseMatrix & a) -> std::vector<double>
{
    if (! a.is_hermitian())
        throw InvalidArgument("eigenvalue routine needs a Hermitian matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.data(), Eigen::EigenvaluesOnly);
    const auto & ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

auto is_psd(const DenseMatrix & a, double tol) -> bool
{
    auto ev = hermitian_eigenvalues(a);
    if (ev.empty())
        return true;
    double largest = std::max(std::abs(ev.front()), std::abs(ev.back()));
    return ev.front() >= -tol * std::max(1.0, largest);
}

auto row_space_residual(const DenseMatrix & a, const std::vector<std::size_t> & basis_rows,
                        const std::vector<std::size_t> & target_rows) -> double
{
    Eigen::MatrixXcd basis(static_cast<Eigen::Index>(basis_rows.size()), a.data().cols());
    for (std::size_t i = 0; i < basis_rows.size(); ++i)
        basis.row(static_cast<Eigen::Index>(i)) = a.data().row(static_cast<Eigen::Index>(basis_rows[i]));
    Eigen::MatrixXcd bt = basis.transpose();
    auto qr = bt.colPivHouseholderQr();
    double worst = 0;
    for (auto r : target_rows) {
        Eigen::VectorXcd target = a.data().row(static_cast<Eigen::Index>(r)).transpose();
        Eigen::VectorXcd coeffs = qr.solve(target);
        double residual = (bt * coeffs - target).norm();
        worst = std::max(worst, residual / std::max(1.0, target.norm()));
    }
    return worst;
}

auto read_matrix(std::istream & in) -> DenseMatrix
{
    long rows = 0;
    long cols = 0;
    std::string field;
    if (! (in >> rows >> cols >> field))
        throw ParseError("matrix header must be 'rows cols R|C'");
    if (rows < 0 || cols < 0 || rows * cols > 1'000'000)
        throw ParseError("matrix dimensions out of range");
    if (field != "R" && field != "C")
        throw ParseError("matrix field must be R or C, got '" + field + "'");
    DenseMatrix out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t index = 0;
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j, ++index) {
            std::string token;
            if (! (in >> token))
                throw ParseError("matrix text ends after " + std::to_string(index) + " of "
                                 + std::to_string(rows * cols) + " entries");
            auto value = parse_entry(token, index);
            if (field == "R" && value.imag() != 0.0)
                throw ParseError("complex entry " + std::to_string(index + 1) + " in a real matrix");
            out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), value);
        }
    std::string extra;
    if (in >> extra)
        throw ParseError("trailing data after matrix entries");
    return out;
}

void write_matrix(std::ostream & out, const DenseMatrix & a)
{
    bool real = a.is_real();
    out << a.rows() << ' ' << a.cols() << ' ' << (real ? 'R' : 'C') << '\n';
    std::ostringstream cell;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            cell.str({});
            cell << std::setprecision(17);
            auto z = a(i, j);
            cell << z.real();
            if (! real)
                cell << (std::signbit(z.imag()) ? "" : "+") << z.imag() << 'i';
            out << (j == 0 ? "" : " ") << cell.str();
        }
        out << '\n';
    }
}

} // namespace zforce
