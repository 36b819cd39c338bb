#include "real_schubert/chart.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace real_schubert {

int ChartSpec::dimension() const {
    int n = 0;
    for (const auto& row : free) n += static_cast<int>(row.size());
    return n;
}

int ChartSpec::variable(int row, int exponent) const {
    int offset = 0;
    for (int r = 0; r < row; ++r) offset += static_cast<int>(free[static_cast<std::size_t>(r)].size());
    const auto& exps = free[static_cast<std::size_t>(row)];
    const auto it = std::find(exps.begin(), exps.end(), exponent);
    return it == exps.end() ? -1 : offset + static_cast<int>(it - exps.begin());
}

std::string ChartSpec::to_string() const {
    std::ostringstream out;
    out << "m=" << m << " lambda=" << lambda.to_string() << " mu=" << mu.to_string() << " rows:";
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        out << " [t^" << pivots[i];
        for (int e : free[i]) out << " +x t^" << e;
        out << ']';
    }
    return out.str();
}

ChartSpec build_chart(int m, const Partition& lambda, const Partition& mu) {
    if (m < 1) throw std::invalid_argument("chart needs m >= 1");
    if (!lambda.fits(m, m) || !mu.fits(m, m)) throw std::invalid_argument("partitions must fit the m×m box");
    if (!complement(lambda, m, m).contains(mu))
        throw std::invalid_argument("mu " + mu.to_string() + " is not contained in the complement of lambda " +
                                    lambda.to_string());

    ChartSpec chart;
    chart.m = m;
    chart.lambda = lambda;
    chart.mu = mu;
    for (int i = 1; i <= m; ++i) chart.pivots.push_back(i - 1 + mu.part(m + 1 - i));

    for (int i = 1; i <= m; ++i) {
        const int pivot = chart.pivots[static_cast<std::size_t>(i - 1)];
        std::vector<int> exps;
        if (lambda.part(i) > 0) {
            const int cap = m + i - 1 - lambda.part(i);
            for (int e = pivot + 1; e <= cap; ++e) exps.push_back(e);
        } else {
            const auto later = chart.pivots.begin() + i;
            for (int e = pivot + 1; e <= 2 * m - 1; ++e)
                if (std::find(later, chart.pivots.end(), e) == chart.pivots.end()) exps.push_back(e);
        }
        chart.free.push_back(std::move(exps));
    }

    const int expected = m * m - weight(lambda) - weight(mu);
    if (chart.dimension() != expected)
        throw std::invalid_argument("chart bookkeeping produced " + std::to_string(chart.dimension()) +
                                    " coordinates, expected " + std::to_string(expected));
    return chart;
}

std::vector<Poly> chart_polys(const ChartSpec& chart, std::span<const Complex> x) {
    if (static_cast<int>(x.size()) != chart.dimension()) throw std::invalid_argument("wrong number of coordinates");
    std::vector<Poly> out;
    std::size_t k = 0;
    for (int i = 0; i < chart.m; ++i) {
        std::vector<Complex> c(static_cast<std::size_t>(2 * chart.m), Complex{});
        c[static_cast<std::size_t>(chart.pivots[static_cast<std::size_t>(i)])] = 1.0;
        for (int e : chart.free[static_cast<std::size_t>(i)]) c[static_cast<std::size_t>(e)] = x[k++];
        out.emplace_back(std::move(c));
    }
    return out;
}

SubspaceBasis chart_subspace(const ChartSpec& chart, std::span<const Complex> x) {
    const auto polys = chart_polys(chart, x);
    return subspace_from_dual(polys, chart.m);
}

ChartFit chart_coordinates(const ChartSpec& chart, std::span<const Poly> basis) {
    const int m = chart.m;
    if (static_cast<int>(basis.size()) != m) throw std::invalid_argument("need m basis polynomials");
    CMatrix p(m, 2 * m);
    for (int r = 0; r < m; ++r)
        for (int e = 0; e < 2 * m; ++e) p(r, e) = basis[static_cast<std::size_t>(r)].coeff(e);

    ChartFit fit;
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        const int pivot = chart.pivots[static_cast<std::size_t>(i)];
        const auto& exps = chart.free[static_cast<std::size_t>(i)];
        // Row i is c·P with a unit pivot and zeros off its support.
        std::vector<int> pinned{pivot};
        for (int e = 0; e < 2 * m; ++e)
            if (e != pivot && std::find(exps.begin(), exps.end(), e) == exps.end()) pinned.push_back(e);
        CMatrix a(static_cast<Eigen::Index>(pinned.size()), m);
        Eigen::VectorXcd b = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(pinned.size()));
        for (std::size_t k = 0; k < pinned.size(); ++k) a.row(static_cast<Eigen::Index>(k)) = p.col(pinned[k]).transpose();
        b(0) = 1.0;
        const Eigen::VectorXcd c = a.colPivHouseholderQr().solve(b);
        const Eigen::RowVectorXcd row = c.transpose() * p;
        const double scale = std::max(1.0, row.cwiseAbs().maxCoeff());
        worst = std::max(worst, std::abs(row(pivot) - 1.0) / scale);
        for (std::size_t k = 1; k < pinned.size(); ++k) worst = std::max(worst, std::abs(row(pinned[k])) / scale);
        for (int e : exps) fit.coords.push_back(row(e));
    }
    fit.residual = worst;
    return fit;
}

}  // namespace real_schubert
