#include "real_schubert/homotopy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace real_schubert {

int MultilinearSystem::add_equation() {
    equations_.emplace_back();
    return size() - 1;
}

void MultilinearSystem::add_term(int equation, Complex coeff, std::span<const int> vars) {
    for (int v : vars)
        if (v < 0 || v >= variables_) throw std::out_of_range("term variable out of range");
    Term term{coeff, static_cast<int>(vars_.size()), static_cast<int>(vars.size())};
    vars_.insert(vars_.end(), vars.begin(), vars.end());
    equations_.at(static_cast<std::size_t>(equation)).push_back(term);
}

int MultilinearSystem::terms(int equation) const {
    return static_cast<int>(equations_.at(static_cast<std::size_t>(equation)).size());
}

int MultilinearSystem::degree(int equation) const {
    int d = 0;
    for (const auto& t : equations_.at(static_cast<std::size_t>(equation))) d = std::max(d, t.count);
    return d;
}

void MultilinearSystem::evaluate(const CVector& x, CVector& f, Eigen::MatrixXcd* jac) const {
    const int n = size();
    f.setZero(n);
    if (jac) jac->setZero(n, variables_);
    Complex prefix[32];
    for (int i = 0; i < n; ++i) {
        Complex acc{};
        for (const auto& t : equations_[static_cast<std::size_t>(i)]) {
            const int* v = vars_.data() + t.begin;
            if (!jac) {
                Complex prod = t.coeff;
                for (int k = 0; k < t.count; ++k) prod *= x(v[k]);
                acc += prod;
                continue;
            }
            // prefix[k] = coeff·x_{v0}⋯x_{v(k−1)}; the suffix is accumulated backwards.
            prefix[0] = t.coeff;
            for (int k = 0; k < t.count; ++k) prefix[k + 1] = prefix[k] * x(v[k]);
            acc += prefix[t.count];
            Complex suffix = 1.0;
            for (int k = t.count - 1; k >= 0; --k) {
                (*jac)(i, v[k]) += prefix[k] * suffix;
                suffix *= x(v[k]);
            }
        }
        f(i) = acc;
    }
}

TotalDegreeHomotopy::TotalDegreeHomotopy(const MultilinearSystem& target, CVector constants, std::vector<int> degrees,
                                         Complex gamma)
    : target_(target), constants_(std::move(constants)), degrees_(std::move(degrees)), gamma_(gamma) {
    if (target_.size() != target_.variables()) throw std::invalid_argument("total-degree homotopy needs a square system");
    if (static_cast<int>(degrees_.size()) != target_.size() || constants_.size() != target_.size())
        throw std::invalid_argument("degree and constant vectors must match the system size");
    for (int i = 0; i < target_.size(); ++i)
        if (degrees_[static_cast<std::size_t>(i)] < std::max(1, target_.degree(i)))
            throw std::invalid_argument("start degree below the equation degree");
}

std::uint64_t TotalDegreeHomotopy::path_count() const {
    std::uint64_t n = 1;
    for (int d : degrees_) n *= static_cast<std::uint64_t>(d);
    return n;
}

CVector TotalDegreeHomotopy::start_point(std::uint64_t index) const {
    CVector x(size());
    for (int i = 0; i < size(); ++i) {
        const auto d = static_cast<std::uint64_t>(degrees_[static_cast<std::size_t>(i)]);
        const auto k = index % d;
        index /= d;
        x(i) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    }
    return x;
}

void TotalDegreeHomotopy::evaluate(const CVector& x, double s, CVector& h, Eigen::MatrixXcd& hx, CVector& hs) const {
    CVector f;
    target_.evaluate(x, f, &hx);
    f -= constants_;
    const int n = size();
    CVector g(n);
    const Complex a = (1.0 - s) * gamma_;
    hx *= s;
    for (int i = 0; i < n; ++i) {
        const int d = degrees_[static_cast<std::size_t>(i)];
        const Complex pm1 = std::pow(x(i), d - 1);
        g(i) = pm1 * x(i) - 1.0;
        hx(i, i) += a * static_cast<double>(d) * pm1;
    }
    h = a * g + s * f;
    hs = f - gamma_ * g;
}

ParameterHomotopy::ParameterHomotopy(const MultilinearSystem& system, CVector from, CVector to, Complex gamma)
    : system_(system), from_(std::move(from)), to_(std::move(to)), gamma_(gamma) {
    if (from_.size() != system_.size() || to_.size() != system_.size())
        throw std::invalid_argument("parameter vectors must match the system size");
}

void ParameterHomotopy::evaluate(const CVector& x, double s, CVector& h, Eigen::MatrixXcd& hx, CVector& hs) const {
    system_.evaluate(x, h, &hx);
    const Complex den = (1.0 - s) * gamma_ + s;
    const CVector num = (1.0 - s) * gamma_ * from_ + s * to_;
    const CVector dnum = to_ - gamma_ * from_;
    const Complex dden = 1.0 - gamma_;
    h -= num / den;
    hs = -(dnum * den - num * dden) / (den * den);
}

const char* to_string(PathStatus status) {
    switch (status) {
        case PathStatus::finite: return "finite";
        case PathStatus::diverged: return "diverged";
        case PathStatus::stalled: return "stalled";
    }
    return "?";
}

namespace {

bool all_finite(const CVector& v) { return v.allFinite(); }

bool velocity(const Homotopy& homotopy, const CVector& x, double s, CVector& out, CVector& h, Eigen::MatrixXcd& hx,
              CVector& hs) {
    homotopy.evaluate(x, s, h, hx, hs);
    out = hx.partialPivLu().solve(-hs);
    return all_finite(out);
}

}  // namespace

double newton_refine(const Homotopy& homotopy, CVector& x, double s, int iterations, double tol) {
    CVector h, hs;
    Eigen::MatrixXcd hx;
    double last = std::numeric_limits<double>::infinity();
    for (int it = 0; it < iterations; ++it) {
        homotopy.evaluate(x, s, h, hx, hs);
        const CVector dx = hx.partialPivLu().solve(-h);
        if (!all_finite(dx)) return std::numeric_limits<double>::infinity();
        x += dx;
        last = dx.lpNorm<Eigen::Infinity>();
        if (last <= tol * (1.0 + x.lpNorm<Eigen::Infinity>())) break;
    }
    return last;
}

PathEnd track_path(const Homotopy& homotopy, const CVector& start, const TrackerOptions& options) {
    PathEnd end;
    CVector x = start;
    double s = 0.0;
    double step = options.step_init;
    int streak = 0;
    CVector h, hs, k1, k2, k3, k4;
    Eigen::MatrixXcd hx;

    while (s < 1.0) {
        if (end.steps >= options.max_steps) break;
        ++end.steps;
        const double dt = std::min(step, 1.0 - s);
        const double target = (dt == 1.0 - s) ? 1.0 : s + dt;

        bool ok = velocity(homotopy, x, s, k1, h, hx, hs) &&
                  velocity(homotopy, x + 0.5 * dt * k1, s + 0.5 * dt, k2, h, hx, hs) &&
                  velocity(homotopy, x + 0.5 * dt * k2, s + 0.5 * dt, k3, h, hx, hs) &&
                  velocity(homotopy, x + dt * k3, target, k4, h, hx, hs);
        CVector y = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (ok) {
            const double scale = 1.0 + y.lpNorm<Eigen::Infinity>();
            ok = false;
            for (int it = 0; it < 3; ++it) {
                homotopy.evaluate(y, target, h, hx, hs);
                const CVector dy = hx.partialPivLu().solve(-h);
                if (!all_finite(dy)) break;
                const double norm = dy.lpNorm<Eigen::Infinity>();
                if (it == 0 && norm > options.predictor_tol * scale) break;
                y += dy;
                if (norm <= 1e-10 * scale) {
                    ok = true;
                    break;
                }
            }
        }

        if (ok) {
            x = y;
            s = target;
            if (++streak >= 3) {
                step = std::min(2.0 * step, options.step_max);
                streak = 0;
            }
            if (x.lpNorm<Eigen::Infinity>() > options.divergence) {
                end.status = PathStatus::diverged;
                end.x = x;
                end.s = s;
                return end;
            }
        } else {
            streak = 0;
            step *= 0.5;
            if (step < options.step_min) break;
        }
    }

    end.s = s;
    if (s < 1.0) {
        // A collapse far out along a growing path is the start of divergence.
        end.status = x.lpNorm<Eigen::Infinity>() > std::sqrt(options.divergence) ? PathStatus::diverged : PathStatus::stalled;
        end.x = x;
        return end;
    }
    newton_refine(homotopy, x, 1.0, 10, options.newton_tol);
    homotopy.evaluate(x, 1.0, h, hx, hs);
    end.x = x;
    end.residual = h.lpNorm<Eigen::Infinity>();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(hx);
    const auto& sv = svd.singularValues();
    end.condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
    end.status = all_finite(x) ? PathStatus::finite : PathStatus::stalled;
    return end;
}

int resolve_threads(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* cap = std::getenv("REAL_SCHUBERT_THREADS")) {
        const int limit = std::atoi(cap);
        if (limit > 0) n = std::min(n, limit);
    }
    return std::max(1, n);
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& work) {
    const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed = true;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

bool SolutionSet::has_multiple_clusters() const {
    return std::any_of(clusters.begin(), clusters.end(), [](const Cluster& c) { return c.multiplicity() > 1; });
}

std::vector<Cluster> cluster_points(const std::vector<Endpoint>& points, double radius) {
    const std::size_t n = points.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    const auto close = [&](const Endpoint& a, const Endpoint& b) {
        double dist = 0.0, norm = 1.0;
        for (std::size_t k = 0; k < a.x.size(); ++k) {
            dist = std::max(dist, std::abs(a.x[k] - b.x[k]));
            norm = std::max({norm, std::abs(a.x[k]), std::abs(b.x[k])});
        }
        return dist <= radius * norm;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (close(points[i], points[j])) {
                const auto a = find(i), b = find(j);
                parent[std::max(a, b)] = std::min(a, b);
            }

    std::vector<Cluster> clusters;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(clusters.size());
            clusters.emplace_back();
        }
        clusters[static_cast<std::size_t>(slot[root])].members.push_back(i);
    }
    for (auto& c : clusters) {
        const std::size_t dim = points[c.members.front()].x.size();
        c.centroid.assign(dim, Complex{});
        for (auto idx : c.members)
            for (std::size_t k = 0; k < dim; ++k) c.centroid[k] += points[idx].x[k];
        for (auto& v : c.centroid) v /= static_cast<double>(c.members.size());
    }
    return clusters;
}

}  // namespace real_schubert
