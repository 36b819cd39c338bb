#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "real_schubert/degrees.hpp"
#include "real_schubert/fiber.hpp"

namespace real_schubert {

enum class SamplingMode { mixed, gaussian, roots };

const char* to_string(SamplingMode mode);
SamplingMode parse_sampling_mode(std::string_view text);

struct ExperimentConfig {
    int m = 3;
    Partition lambda;
    Partition mu;
    int samples = 200;
    std::uint64_t seed = 1;
    SamplingMode mode = SamplingMode::mixed;
    /// Only used with SamplingMode::roots; −1 cycles through every count.
    int conjugate_pairs = -1;
    double tau_real = 1e-8;
    int threads = 0;
    int max_resamples = 3;
    /// Instances between two writes of the state file.
    int checkpoint = 25;
    SolveOptions solve;
    std::filesystem::path out_dir;

    /// Everything that determines the records; threads, checkpoint and
    /// out_dir are left out.
    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
    /// Settings that must agree for a run to resume another.
    nlohmann::json identity() const;
};

/// How one instance's target was drawn.
struct TargetDraw {
    Poly target;
    std::string mode;  ///< "gaussian" or "roots"
    int pairs = 0;     ///< conjugate pairs among the roots
    std::vector<Complex> roots;
};

/// The sampling slot of instance `index`: slot 0 is Gaussian coefficients,
/// slot j ≥ 1 a root configuration with j−1 conjugate pairs.
int sampling_slot(const ExperimentConfig& cfg, std::size_t index, int degree);

/// Real polynomial of the given degree. Real roots are spread over [−1, 1]
/// around Chebyshev nodes; conjugate pairs get random modulus and argument.
TargetDraw sample_target(const std::string& mode, int pairs, int degree, std::mt19937_64& rng);

enum class InstanceStatus { regular, singular_resampled, singular, failed };

const char* to_string(InstanceStatus status);
InstanceStatus parse_instance_status(std::string_view text);

struct InstanceRecord {
    std::size_t index = 0;
    std::string mode;
    int pairs = 0;
    std::vector<double> target;      ///< coefficients of Φ, t^0 first
    std::vector<Complex> roots;      ///< when root-sampled
    double shift = 0.0;              ///< real translation t ↦ t + shift applied before solving
    int real_count = -1;
    std::vector<int> multiplicities; ///< cluster sizes, largest first
    int hermitian_count = -1;
    double residual_max = 0.0;
    int resamples = 0;
    InstanceStatus status = InstanceStatus::failed;
    std::string note;

    int multiplicity_total() const;
    nlohmann::json to_json() const;
    static InstanceRecord from_json(const nlohmann::json& j);
};

struct CongruenceVerdict {
    int modulus = 2;
    int residue = 0;
    bool pass = true;
    std::vector<std::size_t> violating;  ///< instance indices

    nlohmann::json to_json() const;
};

struct FrequencyTable {
    int degree = 0;
    std::map<int, int> counts;
    std::map<int, std::vector<std::size_t>> instances;
    int total = 0;

    void add(int real_count, std::size_t index);
    std::vector<int> support() const;
    /// Columns d mod 2, d mod 2 + 2, …, d.
    std::vector<int> columns() const;
};

/// Regular and resampled records; singular ones too when they clustered to
/// exactly `degree` points and `include_singular` is set.
FrequencyTable tabulate(const std::vector<InstanceRecord>& records, int degree, bool include_singular = false);

CongruenceVerdict verify_congruence(const FrequencyTable& table, int degree, int modulus);

/// Everything fixed by the chart: the problem, its degree and the expected
/// modulus (4 when the sufficient condition holds, else 2).
struct ProblemSummary {
    SchubertProblem problem{1, 1, {{Partition{1}, 1}}};
    BigInt degree;
    TheoremCheck theorem;
    int expected_modulus = 2;
};

ProblemSummary summarize_problem(int m, const Partition& lambda, const Partition& mu);

struct StartFiber {
    Poly target;
    SolutionSet solutions;
    int attempts = 0;
};

nlohmann::json start_fiber_to_json(const StartFiber& start);
StartFiber start_fiber_from_json(const nlohmann::json& j);

/// Total-degree solve at a random complex target, repeated with new seeds
/// and merged until exactly `degree` regular solutions are found.
StartFiber solve_start_fiber(const ChartSpec& chart, int degree, std::uint64_t seed, const SolveOptions& options,
                             int max_attempts = 3);

/// Solves one sampled instance against the start fiber.
InstanceRecord run_instance(const ExperimentConfig& cfg, const FiberSystem& start_system, const SolutionSet& start,
                            int degree, std::size_t index);

struct ExperimentResult {
    ExperimentConfig config;
    ProblemSummary summary;
    std::vector<InstanceRecord> records;
    FrequencyTable table;
    std::vector<CongruenceVerdict> verdicts;  ///< modulus 2, then the expected modulus if 4
    double wall_seconds = 0.0;
    int resumed_from = 0;
};

/// Runs or resumes an experiment. With an output directory, progress is
/// written to state.json (atomic replace) and resumed from it on the next
/// call with the same identity.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

nlohmann::json state_to_json(const ExperimentConfig& cfg, const StartFiber& start,
                             const std::vector<InstanceRecord>& records);

struct ExperimentState {
    ExperimentConfig config;
    StartFiber start;
    std::vector<InstanceRecord> records;
};

ExperimentState load_state(const std::filesystem::path& file);

/// Writes freq.csv, freq.json and manifest.json into `dir`.
void emit_report(const ExperimentResult& result, const std::filesystem::path& dir);
std::string frequency_csv(const FrequencyTable& table);
nlohmann::json frequency_json(const FrequencyTable& table, const std::vector<CongruenceVerdict>& verdicts);

/// Writes `text` to `file` through a temporary and a rename.
void write_atomically(const std::filesystem::path& file, const std::string& text);

}  // namespace real_schubert
