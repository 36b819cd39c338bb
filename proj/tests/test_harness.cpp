#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "real_schubert/harness.hpp"

using namespace real_schubert;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("real_schubert_test_" + name);
    fs::remove_all(dir);
    return dir;
}

ExperimentConfig small_config(const fs::path& dir, int samples) {
    ExperimentConfig cfg;
    cfg.m = 2;
    cfg.samples = samples;
    cfg.seed = 42;
    cfg.threads = 1;
    cfg.checkpoint = 4;
    cfg.out_dir = dir;
    return cfg;
}

InstanceRecord record(std::size_t index, int real_count, InstanceStatus status = InstanceStatus::regular) {
    InstanceRecord r;
    r.index = index;
    r.real_count = real_count;
    r.status = status;
    r.multiplicities = {1, 1};
    return r;
}

int real_roots(const Poly& p) {
    int n = 0;
    for (auto z : roots(p)) n += std::abs(z.imag()) < 1e-7;
    return n;
}

}  // namespace

TEST_CASE("sampling slots cycle through every root configuration") {
    ExperimentConfig cfg;
    std::set<int> slots;
    for (std::size_t k = 0; k < 12; ++k) slots.insert(sampling_slot(cfg, k, 9));
    CHECK(slots == std::set<int>{0, 1, 2, 3, 4, 5});
    cfg.mode = SamplingMode::gaussian;
    CHECK(sampling_slot(cfg, 7, 9) == 0);
    cfg.mode = SamplingMode::roots;
    cfg.conjugate_pairs = 2;
    CHECK(sampling_slot(cfg, 7, 9) == 3);
}

TEST_CASE("sampled targets") {
    std::mt19937_64 rng(1);
    for (int pairs = 0; pairs <= 4; ++pairs) {
        const auto draw = sample_target("roots", pairs, 9, rng);
        CHECK(draw.target.degree() == 9);
        CHECK(draw.roots.size() == 9);
        CHECK(real_roots(draw.target) == 9 - 2 * pairs);
        for (auto c : draw.target.coeffs()) CHECK(c.imag() == 0.0);
    }
    const auto g = sample_target("gaussian", 0, 5, rng);
    CHECK(g.target.degree() == 5);
    CHECK(g.roots.empty());
    CHECK_THROWS_AS(sample_target("roots", 5, 9, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_target("uniform", 0, 9, rng), std::invalid_argument);
}

TEST_CASE("frequency tables and congruences") {
    std::vector<InstanceRecord> recs{record(0, 2), record(1, 6), record(2, 42), record(3, 4),
                                     record(4, 0, InstanceStatus::failed), record(5, 10, InstanceStatus::singular_resampled)};
    const auto table = tabulate(recs, 42);
    CHECK(table.total == 5);
    CHECK(table.support() == std::vector<int>{2, 4, 6, 10, 42});
    CHECK(table.columns().front() == 0);
    CHECK(table.columns().size() == 22);
    CHECK(verify_congruence(table, 42, 2).pass);
    const auto mod4 = verify_congruence(table, 42, 4);
    CHECK(!mod4.pass);
    CHECK(mod4.residue == 2);
    CHECK(mod4.violating == std::vector<std::size_t>{3});

    auto singular = record(6, 3, InstanceStatus::singular);
    singular.multiplicities = {2, 1};
    recs.push_back(singular);
    CHECK(tabulate(recs, 3).total == 5);
    CHECK(tabulate(recs, 3, true).total == 6);
}

TEST_CASE("odd degrees get odd columns") {
    FrequencyTable t;
    t.degree = 5;
    t.add(1, 0);
    t.add(5, 1);
    CHECK(t.columns() == std::vector<int>{1, 3, 5});
    CHECK(frequency_csv(t) == "Num. real,1,3,5\nFrequency,1,0,1\n");
    const auto j = frequency_json(t, {verify_congruence(t, 5, 2)});
    CHECK(j["frequencies"] == nlohmann::json{1, 0, 1});
    CHECK(j["verdicts"][0]["pass"] == true);
}

TEST_CASE("problem summaries") {
    const auto full = summarize_problem(3, {}, {});
    CHECK(full.degree == 42);
    CHECK(full.expected_modulus == 4);
    const auto t40 = summarize_problem(4, Partition{3, 2, 1}, Partition{3, 1, 1});
    CHECK(t40.degree == 40);
    CHECK(t40.expected_modulus == 4);
    CHECK(summarize_problem(4, Partition{3, 3, 2}, {}).degree == 90);
    CHECK(summarize_problem(2, {}, {}).expected_modulus == 2);
}

TEST_CASE("records and configs round-trip through json") {
    auto r = record(3, 2);
    r.roots = {Complex(0.5), Complex(0.1, 0.2)};
    r.note = "x";
    CHECK(InstanceRecord::from_json(r.to_json()).to_json() == r.to_json());
    ExperimentConfig cfg;
    cfg.lambda = Partition{3, 2, 1};
    cfg.mu = Partition{3, 1, 1};
    cfg.m = 4;
    CHECK(ExperimentConfig::from_json(cfg.to_json()).to_json() == cfg.to_json());
    auto other = cfg;
    other.samples = 999;
    other.threads = 7;
    CHECK(other.identity() == cfg.identity());
    other.seed = 2;
    CHECK(other.identity() != cfg.identity());
}

TEST_CASE("atomic writes") {
    const auto dir = fresh_dir("atomic");
    write_atomically(dir / "a.txt", "hello\n");
    CHECK(slurp(dir / "a.txt") == "hello\n");
    CHECK(!fs::exists(dir / "a.txt.tmp"));
    fs::remove_all(dir);
}

TEST_CASE("a small experiment is reproducible and resumable") {
    const auto a = fresh_dir("run_a");
    const auto b = fresh_dir("run_b");
    const auto c = fresh_dir("run_c");

    const auto first = run_experiment(small_config(a, 10));
    CHECK(first.records.size() == 10);
    CHECK(first.table.total >= 8);
    for (const auto& r : first.records)
        if (r.status == InstanceStatus::regular) {
            CHECK(r.multiplicity_total() == 2);
            CHECK(r.real_count % 2 == 0);
        }
    for (const auto& v : first.verdicts) CHECK(v.pass);
    CHECK(fs::exists(a / "freq.csv"));
    CHECK(fs::exists(a / "freq.json"));
    CHECK(fs::exists(a / "manifest.json"));

    run_experiment(small_config(b, 10));
    CHECK(slurp(a / "state.json") == slurp(b / "state.json"));
    CHECK(slurp(a / "freq.csv") == slurp(b / "freq.csv"));

    const auto part = run_experiment(small_config(c, 6));
    CHECK(part.records.size() == 6);
    auto more = small_config(c, 10);
    more.threads = 2;
    const auto resumed = run_experiment(more);
    CHECK(resumed.resumed_from == 6);
    CHECK(slurp(a / "state.json") == slurp(c / "state.json"));

    const auto state = load_state(a / "state.json");
    CHECK(state.records.size() == 10);
    CHECK(state_to_json(state.config, state.start, state.records).dump(1) + "\n" == slurp(a / "state.json"));

    auto clash = small_config(c, 10);
    clash.seed = 43;
    CHECK_THROWS_AS(run_experiment(clash), std::runtime_error);

    for (const auto& d : {a, b, c}) fs::remove_all(d);
}
