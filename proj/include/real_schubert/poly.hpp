#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace real_schubert {

using Complex = std::complex<double>;

/// Univariate polynomial with complex coefficients in the monomial basis;
/// coeffs[i] multiplies t^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Complex> coeffs);

    /// Parses "1+2t^3", "t+t^2", "(1+2i)*t^2-3", "t^9-1". Terms are
    /// `c*t^k`, `c t^k`, `ct^k` or bare constants; coefficients may be complex
    /// in parenthesised `a+bi` form or a bare imaginary `bi`.
    static Poly parse(std::string_view text);
    static Poly monomial(int degree, Complex coeff = 1.0);
    /// Π (t − r) over the given roots.
    static Poly from_roots(std::span<const Complex> roots);

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    /// Index of the highest nonzero coefficient, −1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    Complex coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : Complex{};
    }

    Complex operator()(Complex t) const;
    Poly derivative(int order = 1) const;
    /// Drops trailing exact zeros.
    Poly& normalize();
    /// Scales so the top coefficient is 1. Zero polynomials are returned as is.
    Poly monic() const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator*(Complex scalar) const;

    std::string to_string() const;

private:
    std::vector<Complex> coeffs_;
};

/// det[f_j^{(i-1)}] for the given polynomials, computed exactly from the
/// monomial identity Wr(t^{k_1}, …, t^{k_m}) = Π_{i<j}(k_j − k_i)·t^{Σk − C(m,2)}.
Poly wronskian(std::span<const Poly> polys);

/// Canonical form on C_r[t] in divided-power coordinates u_i = i!·p_i:
/// ⟨u, v⟩ = Σ_i (−1)^i u_i v_{r−i}. Alternating when r is odd.
Complex symplectic_pairing(const Poly& u, const Poly& v, int r);

/// Roots via eigenvalues of the companion matrix.
std::vector<Complex> roots(const Poly& p);

/// Largest |a_i − b_i| / max(1, max|b_j|) over coefficients.
double relative_distance(const Poly& a, const Poly& b);

}  // namespace real_schubert
