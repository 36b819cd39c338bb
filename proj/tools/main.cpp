#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "real_schubert/chart.hpp"
#include "real_schubert/degrees.hpp"
#include "real_schubert/fiber.hpp"
#include "real_schubert/harness.hpp"
#include "real_schubert/partition.hpp"
#include "real_schubert/poly.hpp"
#include "real_schubert/tableaux.hpp"
#include "real_schubert/wronski.hpp"

namespace rs = real_schubert;
using nlohmann::json;

namespace {

std::string big(const rs::BigInt& n) {
    std::ostringstream out;
    out << n;
    return out.str();
}

// Picks λ and μ as the two largest conditions other than a single box.
std::pair<rs::Partition, rs::Partition> default_anchors(const rs::SchubertProblem& problem) {
    std::vector<rs::Partition> big_shapes;
    for (const auto& p : problem.expanded())
        if (rs::weight(p) > 1 && big_shapes.size() < 2) big_shapes.push_back(p);
    big_shapes.resize(2);
    return {big_shapes[0], big_shapes[1]};
}

int cmd_degree(int m, int p, const std::string& text) {
    const auto problem = rs::SchubertProblem::parse(m, p, text);
    std::cout << big(rs::problem_degree(problem)) << '\n';
    return 0;
}

int cmd_check(bool theorem, bool conjecture, int m, const std::string& text, const std::string& lambda,
              const std::string& mu) {
    const auto problem = rs::SchubertProblem::parse(m, m, text);
    int status = 0;
    if (theorem || !conjecture) {
        auto [l, u] = default_anchors(problem);
        if (!lambda.empty()) l = rs::Partition::parse(lambda);
        if (!mu.empty()) u = rs::Partition::parse(mu);
        const auto check = rs::check_theorem_condition(problem, l, u);
        std::cout << "theorem (lambda=" << l.to_string() << ", mu=" << u.to_string() << "): " << check.describe()
                  << '\n';
        status |= check.holds ? 0 : 2;
    }
    if (conjecture) {
        const auto check = rs::check_conjecture_condition(problem);
        std::cout << "conjecture: " << check.describe() << '\n';
        status |= check.holds ? 0 : 2;
    }
    return status == 0 ? 0 : 2;
}

int cmd_degzero(int m, bool as_json) {
    const auto found = rs::enumerate_degree_zero(m);
    if (as_json) {
        json out = json::array();
        for (const auto& d : found)
            out.push_back({{"lambda", d.lambda.to_string()},
                           {"mu", d.mu.to_string()},
                           {"skew_size", d.skew_size},
                           {"above_diagonal", d.above_diagonal},
                           {"degree", big(d.tableaux)}});
        std::cout << json{{"m", m}, {"count", found.size()}, {"problems", out}}.dump(2) << '\n';
        return 0;
    }
    std::cout << found.size() << " problems on Gr(" << m << ", " << 2 * m << ")\n";
    for (const auto& d : found)
        std::cout << "lambda=" << d.lambda.to_string() << " mu=" << d.mu.to_string() << " boxes=" << d.skew_size
                  << " above_diagonal=" << d.above_diagonal << " degree=" << big(d.tableaux) << '\n';
    return 0;
}

int cmd_sign_imbalance(int m, const std::string& outer, const std::string& inner, int cap) {
    const rs::SkewShape shape(rs::Partition::parse(outer), rs::Partition::parse(inner), m, m);
    const int above = shape.boxes_above_diagonal();
    std::cout << "shape: " << shape.to_string() << '\n'
              << "tableaux: " << big(rs::count_syt(shape)) << '\n'
              << "above_diagonal: " << above << (above % 2 ? " (odd)" : " (even)") << '\n'
              << "sign_imbalance: " << big(rs::sign_imbalance(shape, cap)) << '\n';
    return 0;
}

int cmd_wronskian(const std::string& text) {
    std::vector<rs::Poly> polys;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos) polys.push_back(rs::Poly::parse(item));
    std::cout << rs::wronskian(polys).to_string() << '\n';
    return 0;
}

int cmd_involution(int m, int samples, std::uint64_t seed) {
    const auto report = rs::involution_check(m, samples, seed);
    std::cout << "samples: " << report.samples << '\n'
              << "max_wronskian_deviation: " << report.wronskian_deviation << '\n'
              << "max_root_deviation: " << report.root_deviation << '\n';
    return report.wronskian_deviation < 1e-8 && report.root_deviation < 1e-6 ? 0 : 2;
}

rs::StartFiber load_or_solve_start(const rs::ChartSpec& chart, int degree, std::uint64_t seed,
                                   const rs::SolveOptions& options, const std::string& cache) {
    if (!cache.empty() && std::filesystem::exists(cache)) {
        std::ifstream in(cache);
        return rs::start_fiber_from_json(json::parse(in));
    }
    auto start = rs::solve_start_fiber(chart, degree, seed, options);
    if (!cache.empty()) rs::write_atomically(cache, rs::start_fiber_to_json(start).dump(1) + "\n");
    return start;
}

int cmd_solve_fiber(int m, const std::string& lambda, const std::string& mu, const std::string& phi,
                    std::uint64_t seed, const std::string& cache, bool tight, int threads) {
    const auto l = rs::Partition::parse(lambda);
    const auto u = rs::Partition::parse(mu);
    const auto chart = rs::build_chart(m, l, u);
    const auto summary = rs::summarize_problem(m, l, u);
    const int degree = static_cast<int>(summary.degree);
    rs::SolveOptions options;
    options.tight_degrees = tight;
    options.threads = threads;

    const auto target = rs::build_system(chart, rs::Poly::parse(phi));
    rs::SolutionSet solutions;
    int singular = 0;
    if (cache.empty()) {
        solutions = rs::total_degree_solve(target, seed, options);
        for (const auto& p : solutions.points) singular += p.condition > options.tracker.singular_condition;
    } else {
        const auto start = load_or_solve_start(chart, degree, seed, options, cache);
        const auto track =
            rs::parameter_track(rs::build_system(chart, start.target), start.solutions, target, seed, options);
        solutions = track.solutions;
        singular = track.singular_points;
    }

    json out = rs::to_json(solutions);
    json residuals = json::array();
    for (const auto& p : solutions.points) residuals.push_back(p.residual);
    json mult = json::array();
    for (const auto& c : solutions.clusters) mult.push_back(c.multiplicity());
    out["residuals"] = residuals;
    out["multiplicities"] = mult;
    out["degree"] = degree;
    out["singular_points"] = singular;
    try {
        const auto cls = rs::classify_real(target, solutions);
        out["real_count"] = cls.real_count;
        out["hermitian_count"] = cls.hermitian_count;
    } catch (const rs::ConjugationClosureError& e) {
        out["real_count"] = nullptr;
        out["classification_error"] = e.what();
    }
    std::cout << out.dump(2) << '\n';
    return solutions.finite_count() == degree ? 0 : 2;
}

void print_table(const rs::FrequencyTable& table, const std::vector<rs::CongruenceVerdict>& verdicts,
                 const std::string& format) {
    if (format == "json")
        std::cout << rs::frequency_json(table, verdicts).dump(2) << '\n';
    else
        std::cout << rs::frequency_csv(table);
}

int cmd_experiment(rs::ExperimentConfig cfg, const std::string& format) {
    const auto result = rs::run_experiment(cfg);
    std::cerr << "problem " << result.summary.problem.to_string() << ", degree " << big(result.summary.degree)
              << ", expected modulus " << result.summary.expected_modulus << ", " << result.table.total
              << " regular fibers in " << result.wall_seconds << " s\n";
    print_table(result.table, result.verdicts, format);
    for (const auto& v : result.verdicts)
        if (!v.pass) return 2;
    return 0;
}

int cmd_report(const std::string& dir, const std::string& format) {
    const auto state = rs::load_state(std::filesystem::path(dir) / "state.json");
    const auto& cfg = state.config;
    const auto summary = rs::summarize_problem(cfg.m, cfg.lambda, cfg.mu);
    const int degree = static_cast<int>(summary.degree);
    const auto table = rs::tabulate(state.records, degree);
    std::vector<rs::CongruenceVerdict> verdicts{rs::verify_congruence(table, degree, 2)};
    if (summary.expected_modulus == 4) verdicts.push_back(rs::verify_congruence(table, degree, 4));
    print_table(table, verdicts, format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real Schubert calculus on Gr(m, 2m): degrees, checks and Wronski fibers"};
    app.require_subcommand(1);

    int m = 3, p = 3;
    std::string problem;
    auto* degree = app.add_subcommand("degree", "Exact number of solutions of a Schubert problem");
    degree->add_option("--m", m, "Subspace dimension")->required();
    degree->add_option("--p", p, "Codimension")->required();
    degree->add_option("--problem", problem, "Conditions, e.g. \"3.2.1^1 3.1.1^1 1^5\"")->required();

    bool theorem = false, conjecture = false;
    std::string lambda, mu;
    auto* check = app.add_subcommand("check", "Evaluate the mod-four sufficient conditions");
    check->add_option("--m", m, "Half the ambient dimension")->required();
    check->add_option("--problem", problem, "Symmetric conditions")->required();
    check->add_flag("--theorem", theorem, "Condition on a pair lambda, mu");
    check->add_flag("--conjecture", conjecture, "Codimension inequality");
    std::string anchor_lambda, anchor_mu;
    check->add_option("--lambda", anchor_lambda, "Condition anchored at infinity");
    check->add_option("--mu", anchor_mu, "Condition anchored at zero");

    bool as_json = false;
    auto* degzero = app.add_subcommand("enumerate-degzero", "Problems whose real restricted Wronski map has degree zero");
    degzero->add_option("--m", m)->required()->check(CLI::Range(3, 12));
    degzero->add_flag("--json", as_json);

    std::string outer, inner;
    int cap = rs::kDefaultTableauCap;
    auto* imbalance = app.add_subcommand("sign-imbalance", "Tableau count and sign-imbalance of a skew shape");
    imbalance->add_option("--m", m, "Box size")->required();
    imbalance->add_option("--outer", outer)->required();
    imbalance->add_option("--inner", inner, "Inner shape")->default_val("0");
    imbalance->add_option("--cap", cap, "Largest shape enumerated")->default_val(rs::kDefaultTableauCap);

    std::string polys;
    auto* wr = app.add_subcommand("wronskian", "Wronskian of polynomials");
    wr->add_option("--polys", polys, "Polynomials separated by ';'")->required();

    int samples = 1000;
    std::uint64_t seed = 1;
    auto* involution = app.add_subcommand("involution-check", "Compare Wronskians of H and its annihilator");
    involution->add_option("--m", m)->default_val(3);
    involution->add_option("--samples", samples)->default_val(1000);
    involution->add_option("--seed", seed)->default_val(1);

    std::string phi, cache;
    bool tight = false;
    int threads = 0;
    auto* solve = app.add_subcommand("solve-fiber", "Solve one fiber of the restricted Wronski map");
    solve->add_option("--m", m)->required();
    solve->add_option("--lambda", lambda)->default_val("0");
    solve->add_option("--mu", mu)->default_val("0");
    solve->add_option("--phi", phi, "Target polynomial, e.g. \"t^9-1\"")->required();
    solve->add_option("--seed", seed)->default_val(1);
    solve->add_option("--start-cache", cache, "Start fiber file, created when missing");
    solve->add_flag("--tight-degrees", tight, "Start degrees equal to the equation degrees");
    solve->add_option("--threads", threads)->default_val(0);

    rs::ExperimentConfig cfg;
    std::string out_dir, mode = "mixed", format = "csv";
    auto* experiment = app.add_subcommand("experiment", "Sample real fibers and tabulate real solution counts");
    experiment->add_option("--m", cfg.m)->required();
    experiment->add_option("--lambda", lambda)->default_val("0");
    experiment->add_option("--mu", mu)->default_val("0");
    experiment->add_option("--samples", cfg.samples)->default_val(200);
    experiment->add_option("--seed", cfg.seed)->default_val(1);
    experiment->add_option("--out", out_dir, "Output directory (state.json, freq.csv, freq.json)");
    experiment->add_option("--mode", mode)->check(CLI::IsMember({"mixed", "gaussian", "roots"}))->default_val("mixed");
    experiment->add_option("--pairs", cfg.conjugate_pairs, "Conjugate pairs in roots mode")->default_val(-1);
    experiment->add_option("--tau-real", cfg.tau_real)->default_val(1e-8);
    experiment->add_option("--threads", cfg.threads)->default_val(0);
    experiment->add_option("--checkpoint", cfg.checkpoint)->default_val(25);
    experiment->add_flag("--tight-degrees", tight);
    experiment->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

    std::string in_dir;
    auto* report = app.add_subcommand("report", "Frequency table of a stored experiment");
    report->add_option("--in", in_dir)->required();
    report->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*degree) return cmd_degree(m, p, problem);
        if (*check) return cmd_check(theorem, conjecture, m, problem, anchor_lambda, anchor_mu);
        if (*degzero) return cmd_degzero(m, as_json);
        if (*imbalance) return cmd_sign_imbalance(m, outer, inner, cap);
        if (*wr) return cmd_wronskian(polys);
        if (*involution) return cmd_involution(m, samples, seed);
        if (*solve) return cmd_solve_fiber(m, lambda, mu, phi, seed, cache, tight, threads);
        if (*experiment) {
            cfg.lambda = rs::Partition::parse(lambda);
            cfg.mu = rs::Partition::parse(mu);
            cfg.mode = rs::parse_sampling_mode(mode);
            cfg.solve.tight_degrees = tight;
            cfg.out_dir = out_dir;
            return cmd_experiment(cfg, format);
        }
        if (*report) return cmd_report(in_dir, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
