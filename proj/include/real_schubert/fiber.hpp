#pragma once

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "real_schubert/chart.hpp"
#include "real_schubert/homotopy.hpp"
#include "real_schubert/poly.hpp"

namespace real_schubert {

/// Equations for the fiber of the restricted Wronski map over Φ on a chart.
///
/// Wr(chart polynomials)/t^{|μ|} = W_0 + W_1(x)·t + ⋯ + W_N(x)·t^N, where the
/// constant W_0 comes from the pivots alone. Proportionality to Φ is
/// removed by matching W_0, which leaves W_k(x) = W_0·Φ_k/Φ_0 for k = 1..N.
class FiberSystem {
public:
    /// Throws std::invalid_argument when deg Φ ≠ |λ^c/μ| or Φ(0) is
    /// negligible against the other coefficients.
    FiberSystem(ChartSpec chart, const Poly& target);

    const ChartSpec& chart() const { return *chart_; }
    const Poly& target() const { return target_; }
    const MultilinearSystem& equations() const { return *equations_; }
    /// Right-hand sides W_0·Φ_k/Φ_0, k = 1..N.
    const CVector& rhs() const { return rhs_; }
    Complex leading() const { return leading_; }
    int size() const { return equations_->size(); }

    /// Same chart and equations, new target.
    FiberSystem retarget(const Poly& target) const;

    /// F(x) = W(x) − rhs.
    CVector residual(const CVector& x) const;

private:
    FiberSystem(std::shared_ptr<const ChartSpec> chart, std::shared_ptr<const MultilinearSystem> equations,
                Complex leading, const Poly& target);

    std::shared_ptr<const ChartSpec> chart_;
    std::shared_ptr<const MultilinearSystem> equations_;
    Complex leading_;
    Poly target_;
    CVector rhs_;
};

FiberSystem build_system(const ChartSpec& chart, const Poly& target);

struct SolveOptions {
    TrackerOptions tracker;
    double cluster_radius = 1e-6;
    int threads = 0;
    /// Use each equation's own degree for the start system instead of m.
    bool tight_degrees = false;
    /// Abort when more than this fraction of total-degree paths stall before s = 0.99.
    double max_failure_fraction = 0.05;
    /// Finite endpoints must satisfy the system to this residual (relative to 1+‖rhs‖).
    double residual_tol = 1e-8;
    int parameter_retries = 3;
};

/// Total-degree homotopy from x_i^{d_i} = 1, with γ drawn from the seed.
/// Every equation gets start degree m unless `tight_degrees` is set.
SolutionSet total_degree_solve(const FiberSystem& system, std::uint64_t seed, const SolveOptions& options = {});

struct TrackResult {
    SolutionSet solutions;
    int attempts = 0;
    /// Endpoints with Jacobian condition above the singular threshold.
    int singular_points = 0;
};

/// Moves the fiber `start` (solutions of `from`) to the fiber over `to`'s
/// target. Re-runs with a fresh γ when paths stall or two paths land on one
/// regular point.
TrackResult parameter_track(const FiberSystem& from, const SolutionSet& start, const FiberSystem& to,
                            std::uint64_t seed, const SolveOptions& options = {});

class ConjugationClosureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RealClassification {
    int real_count = 0;       ///< with multiplicity
    int real_clusters = 0;
    int conjugate_pairs = 0;
    int hermitian_count = 0;  ///< with multiplicity, fixed by conjugate∘annihilator
    std::vector<int> cluster_is_real;
};

/// Throws ConjugationClosureError when a non-real cluster has no conjugate partner.
RealClassification classify_real(const FiberSystem& system, const SolutionSet& solutions, double tau_real = 1e-8,
                                 double pair_radius = 1e-6);

nlohmann::json to_json(const SolutionSet& solutions);
SolutionSet solution_set_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace real_schubert
