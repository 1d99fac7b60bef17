#ifndef CWTK_HARNESS_HPP
#define CWTK_HARNESS_HPP

#include "cwtk/graph.hpp"
#include "cwtk/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cwtk {

// One verification sweep: a graph family, parameter ranges, solver caps and
// the set of checks to run on every graph.
struct SweepConfig {
    std::string family = "exhaustive"; // complete | turan | turan-modular |
                                       // hypercube | tree | gnp | exhaustive | file
    int n_min = 1, n_max = 5;
    int k_min = 2, k_max = 2; // turan families
    int d_min = 0, d_max = 3; // hypercube
    double p = 0.5;           // gnp
    int seeds = 1;            // seeds 1..seeds for randomized families
    std::uint64_t seed = 1;   // base seed, combined with the per-graph index
    std::vector<std::string> files;

    std::vector<std::string> checks = {"bounds"};
    // cutwidth | circular | sparsity | bounds | coloring | tree-theorem

    int dp_max_n = 22;
    int brute_max_n = 9;
    int circular_max_n = 8;
    int circular_max_m = 16;
    int subset_max_n = 14;
    int heuristic_iterations = 20000;
    int threads = 0; // 0 = hardware concurrency

    std::string output_format = "json"; // json | csv
    std::string output_path;

    static SweepConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    void validate() const; // throws std::invalid_argument
};

struct Violation {
    int graph_index = 0;
    std::string graph_id;
    std::string check;
    std::string detail; // includes a reproducer witness (ordering or subset)
};

struct SweepSummary {
    int graphs_processed = 0;
    int violation_count = 0;
    int tight_cases = 0;
    int capacity_skips = 0;
};

struct SweepResult {
    SweepSummary summary;
    std::vector<Violation> violations;
    std::vector<nlohmann::json> graph_rows; // index order, deterministic
    nlohmann::json config_echo;

    nlohmann::json to_json() const; // "schema": 1; timestamp isolated in one field
};

SweepResult run_sweep(const SweepConfig& config);

// Long-format CSV from a sweep result: one row per (graph, bound entry) with
// exact-rational values and gaps.
std::string sweep_report_csv(const nlohmann::json& result);

} // namespace cwtk

#endif
