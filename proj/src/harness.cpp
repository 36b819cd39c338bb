#include "real_schubert/harness.hpp"

#include <boost/version.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace real_schubert {

namespace {

constexpr int kStateSchema = 1;
constexpr const char* kVersion = "0.1.0";

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(attempt)};
    return std::mt19937_64(seq);
}

double max_abs(const Poly& p) {
    double s = 0.0;
    for (const auto& c : p.coeffs()) s = std::max(s, std::abs(c));
    return s;
}

/// Φ(t + c).
Poly translate(const Poly& p, double c) {
    const Poly step({Complex(c), Complex(1.0)});
    Poly out;
    for (int k = p.degree(); k >= 0; --k) out = out * step + Poly({p.coeff(k)});
    return out;
}

bool small_constant(const Poly& p) { return std::abs(p.coeff(0)) < 1e-4 * max_abs(p); }

nlohmann::json complex_list(const std::vector<Complex>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : values) out.push_back(complex_to_json(v));
    return out;
}

std::vector<Complex> complex_list_from(const nlohmann::json& j) {
    std::vector<Complex> out;
    for (const auto& v : j) out.push_back(complex_from_json(v));
    return out;
}

}  // namespace

const char* to_string(SamplingMode mode) {
    switch (mode) {
        case SamplingMode::mixed: return "mixed";
        case SamplingMode::gaussian: return "gaussian";
        case SamplingMode::roots: return "roots";
    }
    return "?";
}

SamplingMode parse_sampling_mode(std::string_view text) {
    if (text == "mixed") return SamplingMode::mixed;
    if (text == "gaussian") return SamplingMode::gaussian;
    if (text == "roots") return SamplingMode::roots;
    throw std::invalid_argument("unknown sampling mode '" + std::string(text) + "'");
}

const char* to_string(InstanceStatus status) {
    switch (status) {
        case InstanceStatus::regular: return "regular";
        case InstanceStatus::singular_resampled: return "singular-resampled";
        case InstanceStatus::singular: return "singular";
        case InstanceStatus::failed: return "failed";
    }
    return "?";
}

InstanceStatus parse_instance_status(std::string_view text) {
    if (text == "regular") return InstanceStatus::regular;
    if (text == "singular-resampled") return InstanceStatus::singular_resampled;
    if (text == "singular") return InstanceStatus::singular;
    if (text == "failed") return InstanceStatus::failed;
    throw std::invalid_argument("unknown instance status '" + std::string(text) + "'");
}

nlohmann::json ExperimentConfig::to_json() const {
    return {{"m", m},
            {"lambda", lambda.to_string()},
            {"mu", mu.to_string()},
            {"samples", samples},
            {"seed", seed},
            {"mode", real_schubert::to_string(mode)},
            {"conjugate_pairs", conjugate_pairs},
            {"tau_real", tau_real},
            {"max_resamples", max_resamples},
            {"tight_degrees", solve.tight_degrees},
            {"cluster_radius", solve.cluster_radius}};
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    cfg.m = j.at("m").get<int>();
    cfg.lambda = Partition::parse(j.at("lambda").get<std::string>());
    cfg.mu = Partition::parse(j.at("mu").get<std::string>());
    cfg.samples = j.at("samples").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.mode = parse_sampling_mode(j.at("mode").get<std::string>());
    cfg.conjugate_pairs = j.at("conjugate_pairs").get<int>();
    cfg.tau_real = j.at("tau_real").get<double>();
    cfg.max_resamples = j.at("max_resamples").get<int>();
    cfg.solve.tight_degrees = j.at("tight_degrees").get<bool>();
    cfg.solve.cluster_radius = j.at("cluster_radius").get<double>();
    return cfg;
}

nlohmann::json ExperimentConfig::identity() const {
    auto j = to_json();
    j.erase("samples");
    return j;
}

int sampling_slot(const ExperimentConfig& cfg, std::size_t index, int degree) {
    switch (cfg.mode) {
        case SamplingMode::gaussian: return 0;
        case SamplingMode::roots:
            if (cfg.conjugate_pairs >= 0) return cfg.conjugate_pairs + 1;
            return 1 + static_cast<int>(index % static_cast<std::size_t>(degree / 2 + 1));
        case SamplingMode::mixed: break;
    }
    return static_cast<int>(index % static_cast<std::size_t>(degree / 2 + 2));
}

TargetDraw sample_target(const std::string& mode, int pairs, int degree, std::mt19937_64& rng) {
    TargetDraw draw;
    draw.mode = mode;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (mode == "gaussian") {
        std::normal_distribution<double> gauss;
        std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
        for (auto& v : c) v = gauss(rng);
        while (std::abs(c.back()) < 1e-3) c.back() = gauss(rng);
        draw.target = Poly(std::move(c));
        return draw;
    }
    if (mode != "roots") throw std::invalid_argument("unknown target mode '" + mode + "'");
    if (pairs < 0 || 2 * pairs > degree) throw std::invalid_argument("too many conjugate pairs for the degree");
    draw.pairs = pairs;
    const int real_roots = degree - 2 * pairs;
    for (int j = 0; j < real_roots; ++j) {
        const double node = std::numbers::pi * (j + 0.25 + 0.5 * unit(rng)) / real_roots;
        draw.roots.emplace_back(std::cos(node), 0.0);
    }
    for (int j = 0; j < pairs; ++j) {
        const double modulus = 0.2 + 1.3 * unit(rng);
        const double arg = 0.15 + (std::numbers::pi - 0.3) * unit(rng);
        const Complex z = std::polar(modulus, arg);
        draw.roots.push_back(z);
        draw.roots.push_back(std::conj(z));
    }
    std::vector<Complex> c = Poly::from_roots(draw.roots).coeffs();
    for (auto& v : c) v = v.real();
    draw.target = Poly(std::move(c));
    return draw;
}

int InstanceRecord::multiplicity_total() const {
    int total = 0;
    for (int k : multiplicities) total += k;
    return total;
}

nlohmann::json InstanceRecord::to_json() const {
    return {{"index", index},
            {"mode", mode},
            {"pairs", pairs},
            {"target", target},
            {"roots", complex_list(roots)},
            {"shift", shift},
            {"real_count", real_count},
            {"multiplicities", multiplicities},
            {"hermitian_count", hermitian_count},
            {"residual_max", residual_max},
            {"resamples", resamples},
            {"status", real_schubert::to_string(status)},
            {"note", note}};
}

InstanceRecord InstanceRecord::from_json(const nlohmann::json& j) {
    InstanceRecord r;
    r.index = j.at("index").get<std::size_t>();
    r.mode = j.at("mode").get<std::string>();
    r.pairs = j.at("pairs").get<int>();
    r.target = j.at("target").get<std::vector<double>>();
    r.roots = complex_list_from(j.at("roots"));
    r.shift = j.at("shift").get<double>();
    r.real_count = j.at("real_count").get<int>();
    r.multiplicities = j.at("multiplicities").get<std::vector<int>>();
    r.hermitian_count = j.at("hermitian_count").get<int>();
    r.residual_max = j.at("residual_max").get<double>();
    r.resamples = j.at("resamples").get<int>();
    r.status = parse_instance_status(j.at("status").get<std::string>());
    r.note = j.at("note").get<std::string>();
    return r;
}

nlohmann::json CongruenceVerdict::to_json() const {
    return {{"modulus", modulus}, {"residue", residue}, {"pass", pass}, {"violating", violating}};
}

void FrequencyTable::add(int real_count, std::size_t index) {
    ++counts[real_count];
    instances[real_count].push_back(index);
    ++total;
}

std::vector<int> FrequencyTable::support() const {
    std::vector<int> out;
    for (const auto& [k, n] : counts)
        if (n > 0) out.push_back(k);
    return out;
}

std::vector<int> FrequencyTable::columns() const {
    std::vector<int> out;
    for (int k = degree % 2; k <= degree; k += 2) out.push_back(k);
    for (const auto& [k, n] : counts)
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

FrequencyTable tabulate(const std::vector<InstanceRecord>& records, int degree, bool include_singular) {
    FrequencyTable table;
    table.degree = degree;
    for (const auto& r : records) {
        const bool regular = r.status == InstanceStatus::regular || r.status == InstanceStatus::singular_resampled;
        const bool clustered = r.status == InstanceStatus::singular && r.multiplicity_total() == degree;
        if (regular || (include_singular && clustered)) table.add(r.real_count, r.index);
    }
    return table;
}

CongruenceVerdict verify_congruence(const FrequencyTable& table, int degree, int modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    CongruenceVerdict v;
    v.modulus = modulus;
    v.residue = ((degree % modulus) + modulus) % modulus;
    for (const auto& [count, idx] : table.instances)
        if (((count % modulus) + modulus) % modulus != v.residue) v.violating.insert(v.violating.end(), idx.begin(), idx.end());
    std::sort(v.violating.begin(), v.violating.end());
    v.pass = v.violating.empty();
    return v;
}

ProblemSummary summarize_problem(int m, const Partition& lambda, const Partition& mu) {
    const int boxes = m * m - weight(lambda) - weight(mu);
    std::vector<Condition> conds{{lambda, 1}, {mu, 1}};
    if (boxes > 0) conds.push_back({Partition{1}, boxes});
    ProblemSummary s{SchubertProblem(m, m, conds), 0, {}, 2};
    s.degree = problem_degree(s.problem);
    s.theorem = check_theorem_condition(s.problem, lambda, mu);
    s.expected_modulus = s.theorem.holds ? 4 : 2;
    return s;
}

nlohmann::json start_fiber_to_json(const StartFiber& start) {
    return {{"target", complex_list(start.target.coeffs())},
            {"attempts", start.attempts},
            {"solutions", to_json(start.solutions)}};
}

StartFiber start_fiber_from_json(const nlohmann::json& j) {
    StartFiber start;
    start.target = Poly(complex_list_from(j.at("target")));
    start.attempts = j.at("attempts").get<int>();
    start.solutions = solution_set_from_json(j.at("solutions"));
    return start;
}

StartFiber solve_start_fiber(const ChartSpec& chart, int degree, std::uint64_t seed, const SolveOptions& options,
                             int max_attempts) {
    const int n = chart.dimension();
    StartFiber best;
    std::vector<Endpoint> pool;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto rng = instance_rng(seed, ~std::uint64_t{0}, static_cast<std::uint64_t>(attempt));
        if (attempt == 0) {
            std::normal_distribution<double> gauss;
            std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
            for (auto& v : c) v = Complex(gauss(rng), gauss(rng));
            best.target = Poly(std::move(c));
        }
        const FiberSystem system(chart, best.target);
        const SolutionSet found = total_degree_solve(system, rng(), options);
        ++best.attempts;
        pool.insert(pool.end(), found.points.begin(), found.points.end());
        auto clusters = cluster_points(pool, options.cluster_radius);
        // Keep one representative per cluster so later merges do not count repeats.
        std::vector<Endpoint> merged;
        for (const auto& c : clusters) merged.push_back(pool[c.members.front()]);
        pool = merged;
        best.solutions.paths += found.paths;
        best.solutions.diverged += found.diverged;
        best.solutions.failed += found.failed;
        if (static_cast<int>(pool.size()) >= degree) break;
    }
    best.solutions.points = pool;
    best.solutions.clusters = cluster_points(pool, options.cluster_radius);
    if (best.solutions.finite_count() != degree)
        throw std::runtime_error("start fiber has " + std::to_string(best.solutions.finite_count()) +
                                 " solutions, expected " + std::to_string(degree));
    return best;
}

InstanceRecord run_instance(const ExperimentConfig& cfg, const FiberSystem& start_system, const SolutionSet& start,
                            int degree, std::size_t index) {
    const int n = start_system.chart().dimension();
    const bool full_chart = start_system.chart().lambda.empty() && start_system.chart().mu.empty();
    SolveOptions solve = cfg.solve;
    solve.threads = 1;

    InstanceRecord best;
    best.index = index;
    for (int attempt = 0; attempt <= cfg.max_resamples; ++attempt) {
        auto rng = instance_rng(cfg.seed, index, static_cast<std::uint64_t>(attempt));
        const int slot = sampling_slot(cfg, index, n);
        const auto draw = sample_target(slot == 0 ? "gaussian" : "roots", std::max(0, slot - 1), n, rng);

        InstanceRecord rec;
        rec.index = index;
        rec.mode = draw.mode;
        rec.pairs = draw.pairs;
        rec.roots = draw.roots;
        rec.resamples = attempt;
        for (const auto& c : draw.target.coeffs()) rec.target.push_back(c.real());

        Poly phi = draw.target;
        if (small_constant(phi) && full_chart) {
            std::uniform_real_distribution<double> unit(0.25, 1.0);
            rec.shift = (rng() & 1 ? 1.0 : -1.0) * unit(rng);
            phi = translate(phi, rec.shift);
        }
        if (small_constant(phi)) {
            rec.note = "vanishing constant coefficient";
            best = rec;
            continue;
        }

        const FiberSystem target = start_system.retarget(phi);
        const TrackResult track = parameter_track(start_system, start, target, rng(), solve);
        const auto& sol = track.solutions;
        for (const auto& c : sol.clusters) rec.multiplicities.push_back(c.multiplicity());
        std::sort(rec.multiplicities.rbegin(), rec.multiplicities.rend());
        for (const auto& p : sol.points) rec.residual_max = std::max(rec.residual_max, p.residual);

        if (sol.failed + sol.diverged > 0) {
            rec.note = std::to_string(sol.failed + sol.diverged) + " paths lost";
            best = rec;
            continue;
        }
        try {
            const auto cls = classify_real(target, sol, cfg.tau_real, 1e-6);
            rec.real_count = cls.real_count;
            rec.hermitian_count = cls.hermitian_count;
        } catch (const ConjugationClosureError& e) {
            rec.note = e.what();
            best = rec;
            continue;
        }
        const bool singular = track.singular_points > 0 || sol.has_multiple_clusters();
        if (singular) {
            rec.status = InstanceStatus::singular;
            rec.note = "singular endpoints";
            best = rec;
            continue;
        }
        rec.status = attempt == 0 ? InstanceStatus::regular : InstanceStatus::singular_resampled;
        if (rec.multiplicity_total() != degree) {
            rec.status = InstanceStatus::failed;
            rec.note = "fiber has " + std::to_string(rec.multiplicity_total()) + " points";
        }
        return rec;
    }
    if (best.status != InstanceStatus::singular) best.status = InstanceStatus::failed;
    return best;
}

nlohmann::json state_to_json(const ExperimentConfig& cfg, const StartFiber& start,
                             const std::vector<InstanceRecord>& records) {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records) recs.push_back(r.to_json());
    return {{"schema", kStateSchema},
            {"config", cfg.to_json()},
            {"seed", cfg.seed},
            {"start", start_fiber_to_json(start)},
            {"records", recs}};
}

ExperimentState load_state(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    const auto j = nlohmann::json::parse(in);
    if (j.at("schema").get<int>() != kStateSchema) throw std::runtime_error("unsupported state schema in " + file.string());
    ExperimentState state;
    state.config = ExperimentConfig::from_json(j.at("config"));
    state.start = start_fiber_from_json(j.at("start"));
    for (const auto& r : j.at("records")) state.records.push_back(InstanceRecord::from_json(r));
    return state;
}

void write_atomically(const std::filesystem::path& file, const std::string& text) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    const auto tmp = std::filesystem::path(file.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("sample count must be at least 1");
    const auto clock_start = std::chrono::steady_clock::now();
    ExperimentResult result;
    result.config = cfg;
    result.summary = summarize_problem(cfg.m, cfg.lambda, cfg.mu);
    const int degree = static_cast<int>(result.summary.degree);
    const ChartSpec chart = build_chart(cfg.m, cfg.lambda, cfg.mu);

    StartFiber start;
    const auto state_file = cfg.out_dir.empty() ? std::filesystem::path{} : cfg.out_dir / "state.json";
    if (!state_file.empty() && std::filesystem::exists(state_file)) {
        auto state = load_state(state_file);
        if (state.config.identity() != cfg.identity())
            throw std::runtime_error(state_file.string() + " belongs to a different experiment");
        start = std::move(state.start);
        result.records = std::move(state.records);
        if (static_cast<int>(result.records.size()) > cfg.samples) result.records.resize(static_cast<std::size_t>(cfg.samples));
        result.resumed_from = static_cast<int>(result.records.size());
    } else {
        SolveOptions solve = cfg.solve;
        solve.threads = cfg.threads;
        start = solve_start_fiber(chart, degree, cfg.seed, solve);
    }
    const FiberSystem start_system(chart, start.target);

    const auto save = [&] {
        if (!state_file.empty()) write_atomically(state_file, state_to_json(cfg, start, result.records).dump(1) + "\n");
    };
    save();
    const std::size_t batch = static_cast<std::size_t>(std::max(1, cfg.checkpoint));
    while (result.records.size() < static_cast<std::size_t>(cfg.samples)) {
        const std::size_t first = result.records.size();
        const std::size_t count = std::min(batch, static_cast<std::size_t>(cfg.samples) - first);
        std::vector<InstanceRecord> fresh(count);
        parallel_for(count, cfg.threads, [&](std::size_t k) {
            fresh[k] = run_instance(cfg, start_system, start.solutions, degree, first + k);
        });
        result.records.insert(result.records.end(), fresh.begin(), fresh.end());
        save();
    }

    result.table = tabulate(result.records, degree);
    result.verdicts.push_back(verify_congruence(result.table, degree, 2));
    if (result.summary.expected_modulus == 4) result.verdicts.push_back(verify_congruence(result.table, degree, 4));
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
    if (!cfg.out_dir.empty()) emit_report(result, cfg.out_dir);
    return result;
}

std::string frequency_csv(const FrequencyTable& table) {
    std::ostringstream out;
    const auto cols = table.columns();
    out << "Num. real";
    for (int k : cols) out << ',' << k;
    out << "\nFrequency";
    for (int k : cols) {
        const auto it = table.counts.find(k);
        out << ',' << (it == table.counts.end() ? 0 : it->second);
    }
    out << '\n';
    return out.str();
}

nlohmann::json frequency_json(const FrequencyTable& table, const std::vector<CongruenceVerdict>& verdicts) {
    nlohmann::json freq = nlohmann::json::array();
    const auto cols = table.columns();
    for (int k : cols) {
        const auto it = table.counts.find(k);
        freq.push_back(it == table.counts.end() ? 0 : it->second);
    }
    nlohmann::json v = nlohmann::json::array();
    for (const auto& verdict : verdicts) v.push_back(verdict.to_json());
    return {{"degree", table.degree}, {"columns", cols},       {"frequencies", freq},
            {"total", table.total},   {"support", table.support()}, {"verdicts", v}};
}

void emit_report(const ExperimentResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_atomically(dir / "freq.csv", frequency_csv(result.table));
    write_atomically(dir / "freq.json", frequency_json(result.table, result.verdicts).dump(2) + "\n");

    int singular = 0, failed = 0;
    for (const auto& r : result.records) {
        singular += r.status == InstanceStatus::singular;
        failed += r.status == InstanceStatus::failed;
    }
    const FrequencyTable with_singular = tabulate(result.records, result.table.degree, true);
    const nlohmann::json manifest = {
        {"seed", result.config.seed},
        {"config", result.config.to_json()},
        {"problem", result.summary.problem.to_string()},
        {"degree", result.table.degree},
        {"theorem", result.summary.theorem.describe()},
        {"expected_modulus", result.summary.expected_modulus},
        {"records", result.records.size()},
        {"regular", result.table.total},
        {"singular", singular},
        {"failed", failed},
        {"verdicts_with_singular",
         {verify_congruence(with_singular, result.table.degree, 2).to_json(),
          verify_congruence(with_singular, result.table.degree, result.summary.expected_modulus).to_json()}},
        {"resumed_from", result.resumed_from},
        {"threads", resolve_threads(result.config.threads)},
        {"wall_seconds", result.wall_seconds},
        {"versions",
         {{"real_schubert", kVersion},
          {"compiler", __VERSION__},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"boost", BOOST_LIB_VERSION}}}};
    write_atomically(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace real_schubert
