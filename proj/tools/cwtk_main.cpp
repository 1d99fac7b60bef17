#include "cwtk/circular.hpp"
#include "cwtk/cutwidth.hpp"
#include "cwtk/degeneracy.hpp"
#include "cwtk/errors.hpp"
#include "cwtk/generators.hpp"
#include "cwtk/graph6.hpp"
#include "cwtk/harness.hpp"
#include "cwtk/report.hpp"
#include "cwtk/sparsity.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

cwtk::Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos &&
        std::isdigit(static_cast<unsigned char>(text[first])))
        return cwtk::parse_edge_list(text);
    return cwtk::parse_graph6(text);
}

struct ComputeArgs {
    std::string input;
    bool exact = false;
    bool heuristic = false;
    bool circular = false;
    bool json = false;
    int iterations = 20000;
    std::uint64_t seed = 1;
    int dp_max_n = 22;
    int circular_max_n = 8;
    int circular_max_m = 16;
};

int run_compute(const ComputeArgs& a) {
    cwtk::Graph g = load_graph(a.input);
    auto cores = cwtk::core_decomposition(g);

    nlohmann::json j;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["degeneracy"] = cores.degeneracy;
    j["core_numbers"] = cores.core_number;

    cwtk::CutwidthResult cw;
    if (a.heuristic || (!a.exact && g.num_vertices() > a.dp_max_n)) {
        cwtk::HeuristicOptions opts;
        opts.iterations = a.iterations;
        opts.seed = a.seed;
        cw = cwtk::heuristic_cutwidth(g, opts);
    } else {
        cw = cwtk::exact_cutwidth_dp(g, a.dp_max_n); // may throw CapacityError
    }
    j["cutwidth"] = cw.value;
    j["cw_method"] = cwtk::method_name(cw.method);
    j["ordering"] = cw.witness.order;

    if (a.circular) {
        auto circ = cwtk::exact_circular_cutwidth(g, a.circular_max_n, a.circular_max_m);
        j["circular_cutwidth"] = circ.value;
    }

    if (g.num_vertices() <= 32) {
        j["clique_number"] = cwtk::clique_number(g);
        j["triangle_free"] = cwtk::is_triangle_free(g);
    }

    if (a.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n = " << g.num_vertices() << "\nm = " << g.num_edges()
                  << "\ndegeneracy = " << cores.degeneracy << "\ncutwidth = " << cw.value
                  << " (" << cwtk::method_name(cw.method) << ")\n";
        if (j.contains("circular_cutwidth"))
            std::cout << "circular cutwidth = " << j["circular_cutwidth"].get<int>() << "\n";
        if (j.contains("clique_number"))
            std::cout << "clique number = " << j["clique_number"].get<int>()
                      << (j["triangle_free"].get<bool>() ? " (triangle-free)" : "") << "\n";
    }
    return kExitOk;
}

struct GenerateArgs {
    std::string family;
    int n = 0, k = 2, d = 0;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "graph6";
};

int run_generate(const GenerateArgs& a) {
    cwtk::Graph g;
    if (a.family == "complete") g = cwtk::generate_complete(a.n);
    else if (a.family == "turan") g = cwtk::generate_turan(a.n, a.k);
    else if (a.family == "turan-modular") g = cwtk::generate_turan_modular(a.n, a.k);
    else if (a.family == "hypercube") g = cwtk::generate_hypercube(a.d);
    else if (a.family == "gnp") g = cwtk::generate_random_gnp(a.n, a.p, a.seed);
    else if (a.family == "tree") g = cwtk::generate_random_tree(a.n, a.seed);
    else throw std::invalid_argument("unknown family: " + a.family);

    std::string content = a.format == "edgelist" ? cwtk::serialize_edge_list(g)
                                                 : cwtk::serialize_graph6(g) + "\n";
    if (a.out.empty()) std::cout << content;
    else write_file(a.out, content);
    return kExitOk;
}

int run_verify(const cwtk::SweepConfig& config) {
    auto result = cwtk::run_sweep(config);
    if (!config.output_path.empty()) {
        if (config.output_format == "csv")
            write_file(config.output_path, cwtk::sweep_report_csv(result.to_json()));
        else
            write_file(config.output_path, result.to_json().dump(2) + "\n");
    }
    std::cout << "graphs processed: " << result.summary.graphs_processed
              << "\nviolations: " << result.summary.violation_count
              << "\ntight cases: " << result.summary.tight_cases
              << "\ncapacity skips: " << result.summary.capacity_skips << "\n";
    for (const auto& v : result.violations)
        std::cout << "VIOLATION [" << v.check << "] graph " << v.graph_id << ": "
                  << v.detail << "\n";
    return result.violations.empty() ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph width-parameter toolkit and bound-verification harness"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "invariants of one input graph");
    compute->add_option("file", ca.input, "graph6 or edge-list file")->required();
    compute->add_flag("--exact", ca.exact, "require the exact DP solver");
    compute->add_flag("--heuristic", ca.heuristic, "use the annealing heuristic");
    compute->add_flag("--circular", ca.circular, "also compute circular cutwidth");
    compute->add_flag("--json", ca.json, "JSON output");
    compute->add_option("--iterations", ca.iterations, "heuristic iterations");
    compute->add_option("--seed", ca.seed, "heuristic seed");
    compute->add_option("--dp-max-n", ca.dp_max_n, "exact DP vertex cap");

    GenerateArgs ga;
    auto* generate = app.add_subcommand("generate", "write a graph from a named family");
    generate->add_option("family", ga.family,
                         "complete|turan|turan-modular|hypercube|gnp|tree")
        ->required();
    generate->add_option("--n", ga.n, "vertex count");
    generate->add_option("--k", ga.k, "number of classes (turan)");
    generate->add_option("--d", ga.d, "dimension (hypercube)");
    generate->add_option("--p", ga.p, "edge probability (gnp)");
    generate->add_option("--seed", ga.seed, "random seed");
    generate->add_option("--out", ga.out, "output path (stdout when absent)");
    generate->add_option("--format", ga.format, "graph6|edgelist");

    cwtk::SweepConfig vc;
    std::string config_path;
    auto* verify = app.add_subcommand("verify", "run a bound-verification sweep");
    verify->add_option("--config", config_path, "JSON config file (inline flags override)");
    verify->add_option("--family", vc.family, "graph family");
    verify->add_option("--n-min", vc.n_min, "");
    verify->add_option("--n-max", vc.n_max, "");
    verify->add_option("--k-min", vc.k_min, "");
    verify->add_option("--k-max", vc.k_max, "");
    verify->add_option("--d-min", vc.d_min, "");
    verify->add_option("--d-max", vc.d_max, "");
    verify->add_option("--p", vc.p, "");
    verify->add_option("--seeds", vc.seeds, "number of seeds");
    verify->add_option("--seed", vc.seed, "base seed");
    verify->add_option("--file", vc.files, "input graph files (family=file)");
    verify->add_option("--checks", vc.checks, "checks to run");
    verify->add_option("--dp-max-n", vc.dp_max_n, "");
    verify->add_option("--subset-max-n", vc.subset_max_n, "");
    verify->add_option("--threads", vc.threads, "");
    verify->add_option("--out", vc.output_path, "result path");
    verify->add_option("--format", vc.output_format, "json|csv");

    std::string report_input, report_csv_path;
    auto* report = app.add_subcommand("report", "CSV table from a sweep result");
    report->add_option("results", report_input, "sweep result JSON")->required();
    report->add_option("--csv", report_csv_path, "CSV output path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute) return run_compute(ca);
        if (*generate) return run_generate(ga);
        if (*verify) {
            if (!config_path.empty()) {
                auto base = cwtk::SweepConfig::from_json(
                    nlohmann::json::parse(read_file(config_path)));
                // file config as the base, explicitly passed flags on top
                auto merged = base;
                if (verify->count("--family")) merged.family = vc.family;
                if (verify->count("--n-min")) merged.n_min = vc.n_min;
                if (verify->count("--n-max")) merged.n_max = vc.n_max;
                if (verify->count("--k-min")) merged.k_min = vc.k_min;
                if (verify->count("--k-max")) merged.k_max = vc.k_max;
                if (verify->count("--d-min")) merged.d_min = vc.d_min;
                if (verify->count("--d-max")) merged.d_max = vc.d_max;
                if (verify->count("--p")) merged.p = vc.p;
                if (verify->count("--seeds")) merged.seeds = vc.seeds;
                if (verify->count("--seed")) merged.seed = vc.seed;
                if (verify->count("--file")) merged.files = vc.files;
                if (verify->count("--checks")) merged.checks = vc.checks;
                if (verify->count("--dp-max-n")) merged.dp_max_n = vc.dp_max_n;
                if (verify->count("--subset-max-n")) merged.subset_max_n = vc.subset_max_n;
                if (verify->count("--threads")) merged.threads = vc.threads;
                if (verify->count("--out")) merged.output_path = vc.output_path;
                if (verify->count("--format")) merged.output_format = vc.output_format;
                merged.validate();
                return run_verify(merged);
            }
            vc.validate();
            return run_verify(vc);
        }
        if (*report) {
            auto result = nlohmann::json::parse(read_file(report_input));
            std::string csv = cwtk::sweep_report_csv(result);
            if (report_csv_path.empty()) std::cout << csv;
            else write_file(report_csv_path, csv);
            return kExitOk;
        }
    } catch (const cwtk::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cwtk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
