#include "real_schubert/wronski.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace real_schubert {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// Rows spanning {v : A·vᵀ = 0}, assuming A has full row rank.
CMatrix null_space_rows(const CMatrix& a) {
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    const auto cols = a.cols();
    const auto rank = a.rows();
    return svd.matrixV().rightCols(cols - rank).transpose();
}

CMatrix orthonormal_columns(const CMatrix& rows) {
    Eigen::HouseholderQR<CMatrix> qr(rows.transpose());
    return qr.householderQ() * CMatrix::Identity(rows.cols(), rows.rows());
}

}  // namespace

SubspaceBasis::SubspaceBasis(CMatrix mat) : mat_(std::move(mat)) {
    if (mat_.rows() < 1 || mat_.cols() != 2 * mat_.rows())
        throw std::invalid_argument("subspace basis must be m×2m");
    Eigen::JacobiSVD<CMatrix> svd(mat_);
    const auto& sv = svd.singularValues();
    if (!(sv(sv.size() - 1) > 1e-9 * sv(0))) throw std::invalid_argument("subspace basis is rank deficient");
}

SubspaceBasis random_subspace(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    CMatrix mat(m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < 2 * m; ++k) mat(i, k) = Complex(gauss(rng), gauss(rng));
    return SubspaceBasis(std::move(mat));
}

SymplecticForm::SymplecticForm(RMatrix j) : j_(std::move(j)) {
    if (j_.rows() != j_.cols() || j_.rows() % 2 != 0) throw std::invalid_argument("form must be 2m×2m");
    if ((j_ + j_.transpose()).norm() != 0.0) throw std::invalid_argument("form must be antisymmetric");
    if (std::abs(j_.determinant()) < 1e-12) throw std::invalid_argument("form must be nondegenerate");
}

SymplecticForm SymplecticForm::osculating(int m) {
    RMatrix j = RMatrix::Zero(2 * m, 2 * m);
    for (int i = 0; i < 2 * m; ++i) j(i, 2 * m - 1 - i) = (i % 2 == 0) ? 1.0 : -1.0;
    return SymplecticForm(std::move(j));
}

SymplecticForm SymplecticForm::block(int m) {
    RMatrix j = RMatrix::Zero(2 * m, 2 * m);
    j.topRightCorner(m, m) = RMatrix::Identity(m, m);
    j.bottomLeftCorner(m, m) = -RMatrix::Identity(m, m);
    return SymplecticForm(std::move(j));
}

Complex SymplecticForm::operator()(const Eigen::RowVectorXcd& p, const Eigen::RowVectorXcd& q) const {
    return (p * j_.cast<Complex>() * q.transpose())(0, 0);
}

RMatrix block_to_osculating(int m) {
    RMatrix b = RMatrix::Zero(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        b(i, i) = 1.0;
        b(m + i, 2 * m - 1 - i) = (i % 2 == 0) ? 1.0 : -1.0;
    }
    return b;
}

RMatrix eta_matrix(int m) {
    RMatrix eta = RMatrix::Zero(2 * m, 2 * m);
    for (int i = 0; i + 1 < 2 * m; ++i) eta(i + 1, i) = 1.0;
    return eta;
}

SubspaceBasis annihilator(const SubspaceBasis& h, const SymplecticForm& form) {
    if (form.m() != h.m()) throw std::invalid_argument("form and subspace dimensions differ");
    return SubspaceBasis(null_space_rows(h.mat() * form.matrix().cast<Complex>()));
}

double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b) {
    const CMatrix qa = orthonormal_columns(a.mat());
    const CMatrix qb = orthonormal_columns(b.mat());
    const CMatrix residual = qa - qb * (qb.adjoint() * qa);
    Eigen::JacobiSVD<CMatrix> svd(residual);
    return svd.singularValues()(0);
}

bool same_subspace(const SubspaceBasis& a, const SubspaceBasis& b, double tol) {
    return a.m() == b.m() && subspace_distance(a, b) < tol;
}

bool is_lagrangian(const SubspaceBasis& h, const SymplecticForm& form, double tol) {
    const CMatrix& mat = h.mat();
    const double scale = mat.squaredNorm();
    return (mat * form.matrix().cast<Complex>() * mat.transpose()).norm() < tol * scale;
}

bool is_hermitian(const SubspaceBasis& h, const SymplecticForm& form, double tol) {
    return same_subspace(h.conjugate(), annihilator(h, form), tol);
}

CMatrix osculating_rows(int m, int j, Complex t) {
    if (j < 1 || j > 2 * m) throw std::invalid_argument("osculating subspace index out of range");
    CMatrix mat = CMatrix::Zero(j, 2 * m);
    for (int i = 0; i < j; ++i) {
        Complex power = 1.0;
        for (int k = i; k < 2 * m; ++k) {
            mat(i, k) = power / factorial(k - i);
            power *= t;
        }
    }
    return mat;
}

CMatrix osculating_rows_at_infinity(int m, int j) {
    if (j < 1 || j > 2 * m) throw std::invalid_argument("osculating subspace index out of range");
    CMatrix mat = CMatrix::Zero(j, 2 * m);
    for (int i = 0; i < j; ++i) mat(i, 2 * m - j + i) = 1.0;
    return mat;
}

SubspaceBasis osculating_subspace(int m, Complex t) { return SubspaceBasis(osculating_rows(m, m, t)); }

SubspaceBasis osculating_subspace_at_infinity(int m) { return SubspaceBasis(osculating_rows_at_infinity(m, m)); }

std::vector<Poly> dual_subspace(const SubspaceBasis& h) {
    const int m = h.m();
    const CMatrix u = null_space_rows(h.mat());
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        std::vector<Complex> c(static_cast<std::size_t>(2 * m));
        for (int i = 0; i < 2 * m; ++i) c[static_cast<std::size_t>(i)] = u(r, i) / factorial(i);
        out.emplace_back(std::move(c));
    }
    return out;
}

SubspaceBasis subspace_from_dual(std::span<const Poly> polys, int m) {
    if (static_cast<int>(polys.size()) != m) throw std::invalid_argument("need exactly m polynomials");
    CMatrix u(m, 2 * m);
    for (int r = 0; r < m; ++r) {
        if (polys[static_cast<std::size_t>(r)].degree() > 2 * m - 1)
            throw std::invalid_argument("dual polynomial degree exceeds 2m-1");
        for (int i = 0; i < 2 * m; ++i) u(r, i) = polys[static_cast<std::size_t>(r)].coeff(i) * factorial(i);
    }
    Eigen::JacobiSVD<CMatrix> svd(u);
    const auto& sv = svd.singularValues();
    if (!(sv(sv.size() - 1) > 1e-9 * sv(0))) throw std::invalid_argument("dual polynomials are dependent");
    return SubspaceBasis(null_space_rows(u));
}

namespace {

Complex stacked_determinant(const SubspaceBasis& h, Complex s) {
    const int m = h.m();
    CMatrix full(2 * m, 2 * m);
    full.topRows(m) = h.mat();
    full.bottomRows(m) = osculating_rows(m, m, s);
    return full.partialPivLu().determinant();
}

}  // namespace

double meets_nontrivially(const SubspaceBasis& h, Complex s) { return std::abs(stacked_determinant(h, s)); }

Poly intersection_polynomial(const SubspaceBasis& h) {
    const int n = h.m() * h.m() + 1;
    std::vector<Complex> values(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        values[static_cast<std::size_t>(k)] = stacked_determinant(h, std::polar(1.0, 2.0 * std::numbers::pi * k / n));
    std::vector<Complex> coeffs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Complex acc{};
        for (int k = 0; k < n; ++k)
            acc += values[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / n);
        coeffs[static_cast<std::size_t>(j)] = acc / static_cast<double>(n);
    }
    return Poly(std::move(coeffs));
}

Poly wronski_of_subspace(const SubspaceBasis& h) {
    const auto polys = dual_subspace(h);
    return wronskian(polys).monic();
}

namespace {

// Greedy matching of two root lists of equal length.
double root_set_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const auto& r : a) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < b.size(); ++k) {
            const double d = std::abs(r - b[k]);
            if (d < best_d) best_d = d, best = k;
        }
        worst = std::max(worst, best_d / std::max(1.0, std::abs(r)));
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

}  // namespace

InvolutionReport involution_check(int m, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto form = SymplecticForm::osculating(m);
    InvolutionReport report;
    for (int k = 0; k < samples; ++k) {
        const auto h = random_subspace(m, rng);
        const auto wr = wronski_of_subspace(h);
        const auto wr_dual = wronski_of_subspace(annihilator(h, form));
        report.wronskian_deviation = std::max(report.wronskian_deviation, relative_distance(wr, wr_dual));
        report.root_deviation =
            std::max(report.root_deviation, root_set_distance(roots(wr), roots(intersection_polynomial(h).monic())));
        ++report.samples;
    }
    return report;
}

}  // namespace real_schubert
