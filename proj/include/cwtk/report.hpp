#ifndef CWTK_REPORT_HPP
#define CWTK_REPORT_HPP

#include "cwtk/cutwidth.hpp"
#include "cwtk/graph.hpp"
#include "cwtk/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cwtk {

enum class Verdict { Pass, Fail, Skipped };

const char* verdict_name(Verdict v);

struct BoundEntry {
    std::string name;   // "eq-main", "eq-main2", "general", "triangle-free", "clique-free"
    std::string params; // human-readable parameter summary, e.g. "rho=1/3 lambda=3/2"
    Rational bound;
    bool strict = false; // strict lower bound (cw > bound) vs cw >= bound
    bool checked_strict = false; // whether strictness was actually asserted
    Verdict verdict = Verdict::Skipped;
    std::string note;
};

// Everything needed to re-derive each verdict independently.
struct BoundReport {
    std::string graph_id;
    int n = 0;
    int m = 0;
    int degeneracy = 0;
    std::optional<int> cutwidth;       // exact value when feasible
    std::optional<int> cutwidth_upper; // heuristic upper bound otherwise
    std::string cw_method;
    std::vector<BoundEntry> entries;

    bool all_passed() const;
    nlohmann::json to_json() const;
};

struct VerifyCaps {
    int dp_max_n = 22;
    int subset_max_n = 14; // exhaustive (rho, lambda) certification limit
    int clique_max_n = 32;
    int heuristic_iterations = 20000;
    std::uint64_t seed = 1;
};

// Runs every applicable cutwidth lower bound on one graph: certifies
// (rho, lambda) candidates, evaluates both sparsity bounds and the general,
// triangle-free and clique-free specializations, and records verdicts.
BoundReport verify_theorem_on_graph(const Graph& g, const VerifyCaps& caps = {},
                                    std::string graph_id = "");

} // namespace cwtk

#endif
