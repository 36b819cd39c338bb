#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "real_schubert/poly.hpp"

namespace real_schubert {

using CVector = Eigen::VectorXcd;

/// Square system of polynomials in which every variable occurs at most once
/// per term. Each equation is Σ coeff·Π x_v over its terms.
class MultilinearSystem {
public:
    explicit MultilinearSystem(int variables = 0) : variables_(variables) {}

    /// Appends an empty equation and returns its index.
    int add_equation();
    void add_term(int equation, Complex coeff, std::span<const int> vars);

    int size() const { return static_cast<int>(equations_.size()); }
    int variables() const { return variables_; }
    int terms(int equation) const;
    /// Largest number of variables in one term of the equation.
    int degree(int equation) const;

    /// f_i(x) for every equation, and the Jacobian when `jac` is non-null.
    void evaluate(const CVector& x, CVector& f, Eigen::MatrixXcd* jac) const;

private:
    struct Term {
        Complex coeff;
        int begin = 0;
        int count = 0;
    };

    int variables_;
    std::vector<std::vector<Term>> equations_;
    std::vector<int> vars_;
};

/// H(x, s) for s ∈ [0, 1], together with ∂H/∂x and ∂H/∂s.
class Homotopy {
public:
    virtual ~Homotopy() = default;
    virtual int size() const = 0;
    virtual void evaluate(const CVector& x, double s, CVector& h, Eigen::MatrixXcd& hx, CVector& hs) const = 0;
};

/// (1−s)·γ·G(x) + s·(F(x) − c) with G_i = x_i^{d_i} − 1.
class TotalDegreeHomotopy final : public Homotopy {
public:
    TotalDegreeHomotopy(const MultilinearSystem& target, CVector constants, std::vector<int> degrees, Complex gamma);

    int size() const override { return target_.size(); }
    void evaluate(const CVector& x, double s, CVector& h, Eigen::MatrixXcd& hx, CVector& hs) const override;

    const std::vector<int>& degrees() const { return degrees_; }
    /// Number of start solutions, Π d_i.
    std::uint64_t path_count() const;
    /// The start solution with the given index (mixed-radix digits pick the roots of unity).
    CVector start_point(std::uint64_t index) const;

private:
    const MultilinearSystem& target_;
    CVector constants_;
    std::vector<int> degrees_;
    Complex gamma_;
};

/// F(x) − p(s) with p(s) = ((1−s)γ·p₀ + s·p₁) / ((1−s)γ + s), a path of
/// right-hand sides normalised along the straight line (1−s)γΦ₀ + sΦ₁.
class ParameterHomotopy final : public Homotopy {
public:
    ParameterHomotopy(const MultilinearSystem& system, CVector from, CVector to, Complex gamma);

    int size() const override { return system_.size(); }
    void evaluate(const CVector& x, double s, CVector& h, Eigen::MatrixXcd& hx, CVector& hs) const override;

private:
    const MultilinearSystem& system_;
    CVector from_;
    CVector to_;
    Complex gamma_;
};

struct TrackerOptions {
    double newton_tol = 1e-12;
    double step_min = 1e-7;
    double step_max = 1e-1;
    double step_init = 1e-2;
    /// First corrector update allowed after a predictor step, relative to 1+‖x‖.
    double predictor_tol = 1e-5;
    double divergence = 1e8;
    double singular_condition = 1e10;
    int max_steps = 200000;
};

enum class PathStatus { finite, diverged, stalled };

const char* to_string(PathStatus status);

struct PathEnd {
    CVector x;
    PathStatus status = PathStatus::stalled;
    double s = 0.0;         ///< where tracking stopped
    double residual = 0.0;  ///< ‖H(x, 1)‖∞ after refinement
    double condition = 0.0; ///< σ_max/σ_min of ∂H/∂x at the endpoint
    int steps = 0;
};

/// Fourth-order Runge–Kutta predictor on dx/ds = −H_x⁻¹·H_s with a Newton
/// corrector; the step doubles after three accepted steps and halves on
/// rejection.
PathEnd track_path(const Homotopy& homotopy, const CVector& start, const TrackerOptions& options);

/// Newton's method on H(·, s). Returns the final update norm.
double newton_refine(const Homotopy& homotopy, CVector& x, double s, int iterations, double tol);

/// Runs `work(i)` for i in [0, count) on up to `threads` workers (0 means
/// the REAL_SCHUBERT_THREADS cap or the hardware concurrency).
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& work);
int resolve_threads(int requested);

struct Endpoint {
    std::vector<Complex> x;
    double residual = 0.0;
    double condition = 0.0;
    std::size_t path = 0;
};

struct Cluster {
    std::vector<Complex> centroid;
    std::vector<std::size_t> members;  ///< indices into SolutionSet::points

    int multiplicity() const { return static_cast<int>(members.size()); }
};

/// Tracked solutions of a square system with their clustering.
struct SolutionSet {
    std::vector<Endpoint> points;
    std::vector<Cluster> clusters;
    std::uint64_t paths = 0;
    std::uint64_t diverged = 0;
    std::uint64_t failed = 0;

    int finite_count() const { return static_cast<int>(points.size()); }
    bool has_multiple_clusters() const;
};

/// Groups points whose coordinates agree within radius·max(1, ‖x‖∞);
/// clusters are ordered by their smallest member.
std::vector<Cluster> cluster_points(const std::vector<Endpoint>& points, double radius);

}  // namespace real_schubert
