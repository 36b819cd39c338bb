#include "real_schubert/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "real_schubert/wronski.hpp"

namespace real_schubert {

namespace {

struct Option {
    int exponent;
    int variable;  // −1 for the pivot
};

class EquationBuilder {
public:
    EquationBuilder(const ChartSpec& chart, MultilinearSystem& system, int order)
        : chart_(chart), system_(system), order_(order) {
        for (int i = 0; i < chart.m; ++i) {
            std::vector<Option> row{{chart.pivots[static_cast<std::size_t>(i)], -1}};
            for (int e : chart.free[static_cast<std::size_t>(i)]) row.push_back({e, chart.variable(i, e)});
            options_.push_back(std::move(row));
        }
        for (int k = 0; k < system.variables(); ++k) system_.add_equation();
    }

    Complex run() {
        exps_.assign(static_cast<std::size_t>(chart_.m), 0);
        walk(0);
        return leading_;
    }

private:
    void walk(int row) {
        const int m = chart_.m;
        if (row == m) {
            double vandermonde = 1.0;
            int total = 0;
            for (int i = 0; i < m; ++i) {
                total += exps_[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < m; ++j)
                    vandermonde *= exps_[static_cast<std::size_t>(j)] - exps_[static_cast<std::size_t>(i)];
            }
            const int k = total - m * (m - 1) / 2 - order_;
            if (k < 0 || k > system_.variables())
                throw std::logic_error("chart Wronskian term outside the expected degree range");
            if (vars_.empty()) {
                if (k != 0) throw std::logic_error("pivot term of the chart Wronskian is not the lowest");
                leading_ += vandermonde;
            } else {
                if (k == 0) throw std::logic_error("free term of the chart Wronskian reached the lowest order");
                system_.add_term(k - 1, vandermonde, vars_);
            }
            return;
        }
        for (const auto& opt : options_[static_cast<std::size_t>(row)]) {
            if (std::find(exps_.begin(), exps_.begin() + row, opt.exponent) != exps_.begin() + row) continue;
            exps_[static_cast<std::size_t>(row)] = opt.exponent;
            if (opt.variable >= 0) vars_.push_back(opt.variable);
            walk(row + 1);
            if (opt.variable >= 0) vars_.pop_back();
        }
    }

    const ChartSpec& chart_;
    MultilinearSystem& system_;
    int order_;
    std::vector<std::vector<Option>> options_;
    std::vector<int> exps_;
    std::vector<int> vars_;
    Complex leading_{};
};

CVector rhs_for(const Poly& target, Complex leading, int n) {
    if (target.degree() != n)
        throw std::invalid_argument("target degree " + std::to_string(target.degree()) + " does not match the fiber size " +
                                    std::to_string(n));
    double scale = 0.0;
    for (const auto& c : target.coeffs()) scale = std::max(scale, std::abs(c));
    const Complex phi0 = target.coeff(0);
    if (std::abs(phi0) <= 1e-10 * scale) throw std::invalid_argument("target has a vanishing constant coefficient");
    CVector rhs(n);
    for (int k = 1; k <= n; ++k) rhs(k - 1) = leading * target.coeff(k) / phi0;
    return rhs;
}

double vector_scale(const CVector& v) { return 1.0 + v.lpNorm<Eigen::Infinity>(); }

Endpoint make_endpoint(const PathEnd& end, std::size_t path) {
    Endpoint e;
    e.x.assign(end.x.data(), end.x.data() + end.x.size());
    e.residual = end.residual;
    e.condition = end.condition;
    e.path = path;
    return e;
}

Complex random_gamma(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, angle(rng));
}

}  // namespace

FiberSystem::FiberSystem(ChartSpec chart, const Poly& target) {
    chart_ = std::make_shared<const ChartSpec>(std::move(chart));
    auto system = std::make_shared<MultilinearSystem>(chart_->dimension());
    EquationBuilder builder(*chart_, *system, chart_->mu_weight());
    leading_ = builder.run();
    equations_ = std::move(system);
    target_ = target;
    rhs_ = rhs_for(target_, leading_, equations_->size());
}

FiberSystem::FiberSystem(std::shared_ptr<const ChartSpec> chart, std::shared_ptr<const MultilinearSystem> equations,
                         Complex leading, const Poly& target)
    : chart_(std::move(chart)), equations_(std::move(equations)), leading_(leading), target_(target) {
    rhs_ = rhs_for(target_, leading_, equations_->size());
}

FiberSystem FiberSystem::retarget(const Poly& target) const { return FiberSystem(chart_, equations_, leading_, target); }

CVector FiberSystem::residual(const CVector& x) const {
    CVector f;
    equations_->evaluate(x, f, nullptr);
    return f - rhs_;
}

FiberSystem build_system(const ChartSpec& chart, const Poly& target) { return FiberSystem(chart, target); }

SolutionSet total_degree_solve(const FiberSystem& system, std::uint64_t seed, const SolveOptions& options) {
    const auto& eqs = system.equations();
    std::vector<int> degrees;
    for (int i = 0; i < eqs.size(); ++i)
        degrees.push_back(options.tight_degrees ? std::max(1, eqs.degree(i)) : system.chart().m);
    const TotalDegreeHomotopy homotopy(eqs, system.rhs(), degrees, random_gamma(seed));

    const std::uint64_t paths = homotopy.path_count();
    std::vector<PathEnd> ends(static_cast<std::size_t>(paths));
    parallel_for(ends.size(), options.threads, [&](std::size_t i) {
        ends[i] = track_path(homotopy, homotopy.start_point(i), options.tracker);
    });

    SolutionSet out;
    out.paths = paths;
    const double tol = options.residual_tol * vector_scale(system.rhs());
    for (std::size_t i = 0; i < ends.size(); ++i) {
        const auto& end = ends[i];
        if (end.status == PathStatus::finite && end.residual <= tol)
            out.points.push_back(make_endpoint(end, i));
        else if (end.status == PathStatus::diverged || end.s >= 0.99)
            ++out.diverged;
        else
            ++out.failed;
    }
    if (static_cast<double>(out.failed) > options.max_failure_fraction * static_cast<double>(paths))
        throw std::runtime_error("total-degree solve: " + std::to_string(out.failed) + " of " + std::to_string(paths) +
                                 " paths stalled");
    out.clusters = cluster_points(out.points, options.cluster_radius);
    return out;
}

TrackResult parameter_track(const FiberSystem& from, const SolutionSet& start, const FiberSystem& to,
                            std::uint64_t seed, const SolveOptions& options) {
    if (&from.equations() != &to.equations() && from.chart().to_string() != to.chart().to_string())
        throw std::invalid_argument("parameter homotopy needs both systems on the same chart");
    if (start.has_multiple_clusters()) throw std::invalid_argument("start fiber is not regular");

    std::vector<CVector> starts;
    for (const auto& c : start.clusters)
        starts.push_back(Eigen::Map<const CVector>(c.centroid.data(), static_cast<Eigen::Index>(c.centroid.size())));

    TrackResult result;
    std::mt19937_64 rng(seed);
    const double tol = options.residual_tol * vector_scale(to.rhs());
    for (int attempt = 0; attempt <= options.parameter_retries; ++attempt) {
        ++result.attempts;
        const ParameterHomotopy homotopy(to.equations(), from.rhs(), to.rhs(), random_gamma(rng()));
        std::vector<PathEnd> ends(starts.size());
        parallel_for(ends.size(), options.threads,
                     [&](std::size_t i) { ends[i] = track_path(homotopy, starts[i], options.tracker); });

        SolutionSet sol;
        sol.paths = starts.size();
        result.singular_points = 0;
        for (std::size_t i = 0; i < ends.size(); ++i) {
            if (ends[i].status == PathStatus::finite && ends[i].residual <= tol) {
                sol.points.push_back(make_endpoint(ends[i], i));
                if (ends[i].condition > options.tracker.singular_condition) ++result.singular_points;
            } else if (ends[i].status == PathStatus::diverged) {
                ++sol.diverged;
            } else {
                ++sol.failed;
            }
        }
        sol.clusters = cluster_points(sol.points, options.cluster_radius);
        result.solutions = std::move(sol);
        const bool crossing = result.solutions.has_multiple_clusters() && result.singular_points == 0;
        const bool lost = result.solutions.failed + result.solutions.diverged > 0;
        if (!crossing && !lost) break;
    }
    return result;
}

RealClassification classify_real(const FiberSystem& system, const SolutionSet& solutions, double tau_real,
                                 double pair_radius) {
    RealClassification out;
    const auto& clusters = solutions.clusters;
    const auto norm = [](const std::vector<Complex>& x) {
        double n = 1.0;
        for (const auto& v : x) n = std::max(n, std::abs(v));
        return n;
    };
    const auto conj_distance = [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        double d = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - std::conj(b[k])));
        return d;
    };

    std::vector<int> partner(clusters.size(), -1);
    out.cluster_is_real.assign(clusters.size(), 0);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        const auto& c = clusters[i].centroid;
        double imag = 0.0;
        for (const auto& v : c) imag = std::max(imag, std::abs(v.imag()));
        if (imag < tau_real * norm(c)) {
            out.cluster_is_real[i] = 1;
            out.real_count += clusters[i].multiplicity();
            ++out.real_clusters;
        }
    }
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (out.cluster_is_real[i] || partner[i] >= 0) continue;
        const auto& c = clusters[i].centroid;
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = i;
        for (std::size_t j = 0; j < clusters.size(); ++j) {
            if (j == i || out.cluster_is_real[j] || partner[j] >= 0) continue;
            const double d = conj_distance(c, clusters[j].centroid);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        if (best_j == i || best > pair_radius * norm(c))
            throw ConjugationClosureError("non-real cluster " + std::to_string(i) + " has no conjugate partner");
        partner[i] = static_cast<int>(best_j);
        partner[best_j] = static_cast<int>(i);
        ++out.conjugate_pairs;
    }

    const int m = system.chart().m;
    const auto form = SymplecticForm::osculating(m);
    for (const auto& cl : clusters) {
        try {
            const auto h = chart_subspace(system.chart(), cl.centroid);
            if (is_hermitian(h, form, 1e-6)) out.hermitian_count += cl.multiplicity();
        } catch (const std::invalid_argument&) {
            // Degenerate chart points cannot be Hermitian subspaces of full rank.
        }
    }
    return out;
}

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

nlohmann::json to_json(const SolutionSet& solutions) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : solutions.points) {
        nlohmann::json x = nlohmann::json::array();
        for (const auto& v : p.x) x.push_back(complex_to_json(v));
        points.push_back({{"path", p.path}, {"x", x}, {"residual", p.residual}, {"condition", p.condition}});
    }
    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : solutions.clusters) {
        nlohmann::json centroid = nlohmann::json::array();
        for (const auto& v : c.centroid) centroid.push_back(complex_to_json(v));
        clusters.push_back({{"members", c.members}, {"multiplicity", c.multiplicity()}, {"centroid", centroid}});
    }
    return {{"paths", solutions.paths},     {"diverged", solutions.diverged}, {"failed", solutions.failed},
            {"points", points},             {"clusters", clusters}};
}

SolutionSet solution_set_from_json(const nlohmann::json& j) {
    SolutionSet out;
    out.paths = j.at("paths").get<std::uint64_t>();
    out.diverged = j.at("diverged").get<std::uint64_t>();
    out.failed = j.at("failed").get<std::uint64_t>();
    for (const auto& p : j.at("points")) {
        Endpoint e;
        e.path = p.at("path").get<std::size_t>();
        e.residual = p.at("residual").get<double>();
        e.condition = p.at("condition").get<double>();
        for (const auto& v : p.at("x")) e.x.push_back(complex_from_json(v));
        out.points.push_back(std::move(e));
    }
    for (const auto& c : j.at("clusters")) {
        Cluster cl;
        cl.members = c.at("members").get<std::vector<std::size_t>>();
        for (const auto& v : c.at("centroid")) cl.centroid.push_back(complex_from_json(v));
        out.clusters.push_back(std::move(cl));
    }
    return out;
}

}  // namespace real_schubert
