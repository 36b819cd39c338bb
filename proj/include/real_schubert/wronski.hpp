#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "real_schubert/poly.hpp"

namespace real_schubert {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

/// An m-dimensional subspace of V = C^{2m}, stored as the row space of an
/// m×2m matrix in the basis e_0, …, e_{2m−1}.
class SubspaceBasis {
public:
    /// Throws std::invalid_argument when the rows are numerically dependent
    /// (smallest singular value below 1e-9 of the largest) or the shape is
    /// not m×2m.
    explicit SubspaceBasis(CMatrix mat);

    int m() const { return static_cast<int>(mat_.rows()); }
    const CMatrix& mat() const { return mat_; }
    SubspaceBasis conjugate() const { return SubspaceBasis(mat_.conjugate()); }

private:
    CMatrix mat_;
};

/// Random subspace with independent standard complex Gaussian entries.
SubspaceBasis random_subspace(int m, std::mt19937_64& rng);

/// Alternating form ⟨p, q⟩ = p·J·qᵀ on C^{2m}.
class SymplecticForm {
public:
    explicit SymplecticForm(RMatrix j);

    /// J = Σ (−1)^i e_i* ⊗ e_{2m−1−i}*, the form preserved by the osculating flag.
    static SymplecticForm osculating(int m);
    /// J = [[0, I], [−I, 0]], the basis in which the Lagrangian chart is the
    /// space of symmetric matrices.
    static SymplecticForm block(int m);

    int m() const { return static_cast<int>(j_.rows() / 2); }
    const RMatrix& matrix() const { return j_; }
    Complex operator()(const Eigen::RowVectorXcd& p, const Eigen::RowVectorXcd& q) const;

private:
    RMatrix j_;
};

/// Rows f_0, …, f_{2m−1} written in the e basis with ⟨f_i, f_{m+j}⟩ = δ_ij
/// under the osculating form: f_i = e_i and f_{m+i} = (−1)^i e_{2m−1−i}.
/// A subspace with rows M in f-coordinates is M·B in e-coordinates, and
/// B·J_osc·Bᵀ = J_block.
RMatrix block_to_osculating(int m);

/// Nilpotent η with η e_i = e_{i+1} (columns act on column vectors).
RMatrix eta_matrix(int m);

/// H^∠ = {v : ⟨u, v⟩ = 0 for all u ∈ H}.
SubspaceBasis annihilator(const SubspaceBasis& h, const SymplecticForm& form);

/// sin of the largest principal angle between the two row spaces.
double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b);
bool same_subspace(const SubspaceBasis& a, const SubspaceBasis& b, double tol = 1e-8);

bool is_lagrangian(const SubspaceBasis& h, const SymplecticForm& form, double tol = 1e-9);
/// conj(H) = H^∠.
bool is_hermitian(const SubspaceBasis& h, const SymplecticForm& form, double tol = 1e-8);

/// Basis of F_j(t) = e^{ηt}·span{e_0, …, e_{j−1}} as a j×2m matrix; row i has
/// entry t^{k−i}/(k−i)! in column k ≥ i.
CMatrix osculating_rows(int m, int j, Complex t);
/// Basis of F_j(∞) = span{e_{2m−j}, …, e_{2m−1}}.
CMatrix osculating_rows_at_infinity(int m, int j);

/// F_m(t), the member of the flag that is a point of Gr(m, 2m).
SubspaceBasis osculating_subspace(int m, Complex t);
SubspaceBasis osculating_subspace_at_infinity(int m);

/// Basis of H^⊥ ⊂ V*, each covector u read as the polynomial Σ u_i t^i / i!.
std::vector<Poly> dual_subspace(const SubspaceBasis& h);
/// Inverse of dual_subspace: the subspace annihilated by the given m
/// polynomials of degree ≤ 2m−1.
SubspaceBasis subspace_from_dual(std::span<const Poly> polys, int m);

/// |det [H; F_m(s)]|, zero exactly when H meets F_m(s).
double meets_nontrivially(const SubspaceBasis& h, Complex s);
/// det [H; F_m(s)] as a polynomial in s of degree ≤ m², recovered by
/// interpolation on a circle.
Poly intersection_polynomial(const SubspaceBasis& h);

/// Monic Wronskian of a basis of H^⊥.
Poly wronski_of_subspace(const SubspaceBasis& h);

struct InvolutionReport {
    int samples = 0;
    /// Largest relative distance between Wr(H) and Wr(H^∠).
    double wronskian_deviation = 0.0;
    /// Largest distance between roots of Wr(H) and of det [H; F_m(s)],
    /// relative to max(1, |root|).
    double root_deviation = 0.0;
};

/// Compares the Wronskians of random H and H^∠ under the osculating form.
InvolutionReport involution_check(int m, int samples, std::uint64_t seed);

}  // namespace real_schubert
