#pragma once

#include <span>
#include <string>
#include <vector>

#include "real_schubert/partition.hpp"
#include "real_schubert/poly.hpp"
#include "real_schubert/wronski.hpp"

namespace real_schubert {

/// Affine chart on the intersection of the Schubert varieties of λ at ∞ and
/// μ at 0, written on the dual side: row i of H^⊥ is the polynomial
/// t^{pivots[i]} + Σ_e x_{i,e} t^e over e ∈ free[i].
///
/// Pivots a_i = i−1+μ_{m+1−i} fix the orders of vanishing at 0. A row with
/// λ_i > 0 is capped at degree m+i−1−λ_i; the remaining rows run up to 2m−1
/// and are reduced against the later pivots.
struct ChartSpec {
    int m = 0;
    Partition lambda;
    Partition mu;
    std::vector<int> pivots;
    std::vector<std::vector<int>> free;

    /// Number of free coordinates, |λ^c/μ|.
    int dimension() const;
    int mu_weight() const { return weight(mu); }
    /// Position of x_{row,exponent} in the flattened coordinate vector, or −1.
    int variable(int row, int exponent) const;
    std::string to_string() const;
};

/// Throws std::invalid_argument when λ or μ leave the m×m box, μ ⊄ λ^c, or
/// the free coordinates do not number m² − |λ| − |μ|.
ChartSpec build_chart(int m, const Partition& lambda, const Partition& mu);

/// The m chart polynomials at the given coordinates (row-major order).
std::vector<Poly> chart_polys(const ChartSpec& chart, std::span<const Complex> x);
SubspaceBasis chart_subspace(const ChartSpec& chart, std::span<const Complex> x);

struct ChartFit {
    std::vector<Complex> coords;
    /// Largest violation of the chart's support pattern after the fit,
    /// relative to each fitted row's scale; near zero when the span lies in the chart.
    double residual = 0.0;
};

/// Recovers chart coordinates of span(basis) by least squares.
ChartFit chart_coordinates(const ChartSpec& chart, std::span<const Poly> basis);

}  // namespace real_schubert
