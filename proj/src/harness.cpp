#include "cwtk/harness.hpp"

#include "cwtk/circular.hpp"
#include "cwtk/cutwidth.hpp"
#include "cwtk/degeneracy.hpp"
#include "cwtk/errors.hpp"
#include "cwtk/generators.hpp"
#include "cwtk/graph6.hpp"
#include "cwtk/sparsity.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cwtk {

namespace {

constexpr const char* kToolVersion = "0.1.0";

const std::set<std::string> kKnownChecks = {
    "cutwidth", "circular", "sparsity", "bounds", "coloring", "tree-theorem"};

const std::set<std::string> kKnownFamilies = {
    "complete", "turan", "turan-modular", "hypercube", "tree", "gnp", "exhaustive", "file"};

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) { seen[u] = true; ++count; stack.push_back(u); }
    }
    return count == n;
}

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

struct WorkItem {
    Graph graph;
    std::string id;
};

// Deterministic family enumeration: total count plus an index -> graph map.
struct Family {
    std::size_t count = 0;
    std::function<WorkItem(std::size_t)> item;
};

Family build_family(const SweepConfig& c) {
    Family fam;
    if (c.family == "complete") {
        int lo = c.n_min, hi = c.n_max;
        fam.count = static_cast<std::size_t>(hi - lo + 1);
        fam.item = [lo](std::size_t i) {
            int n = lo + static_cast<int>(i);
            return WorkItem{generate_complete(n), "K" + std::to_string(n)};
        };
    } else if (c.family == "turan" || c.family == "turan-modular") {
        bool modular = c.family == "turan-modular";
        int nlo = c.n_min, nspan = c.n_max - c.n_min + 1;
        int klo = c.k_min, kspan = c.k_max - c.k_min + 1;
        fam.count = static_cast<std::size_t>(nspan) * kspan;
        fam.item = [=](std::size_t i) {
            int n = nlo + static_cast<int>(i) / kspan;
            int k = klo + static_cast<int>(i) % kspan;
            Graph g = modular ? generate_turan_modular(n, k) : generate_turan(n, k);
            return WorkItem{std::move(g),
                            "Tur(" + std::to_string(n) + "," + std::to_string(k) + ")" +
                                (modular ? "mod" : "")};
        };
    } else if (c.family == "hypercube") {
        int lo = c.d_min;
        fam.count = static_cast<std::size_t>(c.d_max - c.d_min + 1);
        fam.item = [lo](std::size_t i) {
            int d = lo + static_cast<int>(i);
            return WorkItem{generate_hypercube(d), "Q" + std::to_string(d)};
        };
    } else if (c.family == "tree" || c.family == "gnp") {
        bool tree = c.family == "tree";
        int nlo = c.n_min, nspan = c.n_max - c.n_min + 1;
        int seeds = c.seeds;
        std::uint64_t base = c.seed;
        double p = c.p;
        fam.count = static_cast<std::size_t>(nspan) * seeds;
        fam.item = [=](std::size_t i) {
            int n = nlo + static_cast<int>(i) / seeds;
            std::uint64_t s = base + static_cast<std::uint64_t>(i % seeds);
            Graph g = tree ? generate_random_tree(n, s) : generate_random_gnp(n, p, s);
            std::string id = (tree ? "tree" : "gnp") + std::string("-n") +
                             std::to_string(n) + "-s" + std::to_string(s);
            return WorkItem{std::move(g), id};
        };
    } else if (c.family == "exhaustive") {
        // all labeled graphs for each n in range, streamed by edge-set mask
        std::vector<std::pair<int, std::uint64_t>> offsets; // (n, graphs of this n)
        std::size_t total = 0;
        for (int n = c.n_min; n <= c.n_max; ++n) {
            std::uint64_t cnt = std::uint64_t{1} << pair_count(n);
            offsets.emplace_back(n, cnt);
            total += cnt;
        }
        fam.count = total;
        fam.item = [offsets](std::size_t i) {
            std::uint64_t idx = i;
            for (auto [n, cnt] : offsets) {
                if (idx < cnt) {
                    return WorkItem{graph_from_mask(n, idx),
                                    "n" + std::to_string(n) + "#" + std::to_string(idx)};
                }
                idx -= cnt;
            }
            throw std::logic_error("index out of range");
        };
    } else if (c.family == "file") {
        // each file holds either one edge list or one graph6 line per graph
        std::vector<WorkItem> items;
        for (const auto& path : c.files) {
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open input file: " + path);
            std::stringstream buf;
            buf << in.rdbuf();
            std::string text = buf.str();
            // digits never occur in graph6 payload bytes, so a leading digit
            // means edge-list format
            std::size_t first = text.find_first_not_of(" \t\r\n");
            if (first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first]))) {
                items.push_back({parse_edge_list(text), path});
            } else {
                std::istringstream lines(text);
                std::string line;
                int k = 0;
                while (std::getline(lines, line)) {
                    if (line.empty()) continue;
                    items.push_back({parse_graph6(line), path + "#" + std::to_string(k++)});
                }
            }
        }
        fam.count = items.size();
        auto shared = std::make_shared<std::vector<WorkItem>>(std::move(items));
        fam.item = [shared](std::size_t i) { return (*shared)[i]; };
    } else {
        throw std::invalid_argument("unknown family: " + c.family);
    }
    return fam;
}

struct GraphOutcome {
    nlohmann::json row;
    std::vector<Violation> violations;
    int tight = 0;
    int capacity_skips = 0;
};

bool has_check(const SweepConfig& c, const std::string& name) {
    for (const auto& s : c.checks)
        if (s == name) return true;
    return false;
}

GraphOutcome process_graph(const SweepConfig& cfg, std::size_t index, const WorkItem& item) {
    const Graph& g = item.graph;
    GraphOutcome out;
    out.row["index"] = index;
    out.row["id"] = item.id;
    out.row["n"] = g.num_vertices();
    out.row["m"] = g.num_edges();
    auto violation = [&](const std::string& check, const std::string& detail) {
        out.violations.push_back({static_cast<int>(index), item.id, check, detail});
    };
    auto skip = [&](const std::string& check, const std::string& why) {
        ++out.capacity_skips;
        out.row["skips"].push_back(check + ": " + why);
    };

    auto cores = core_decomposition(g);
    out.row["degeneracy"] = cores.degeneracy;

    std::optional<int> cw;
    if (g.num_vertices() <= cfg.dp_max_n) {
        auto res = exact_cutwidth_dp(g, cfg.dp_max_n);
        cw = res.value;
        out.row["cutwidth"] = res.value;
        out.row["cw_method"] = method_name(res.method);
    } else {
        HeuristicOptions opts;
        opts.iterations = cfg.heuristic_iterations;
        opts.seed = cfg.seed;
        auto res = heuristic_cutwidth(g, opts);
        out.row["cutwidth_upper"] = res.value;
        out.row["cw_method"] = method_name(res.method);
    }

    if (has_check(cfg, "cutwidth")) {
        if (!cw) {
            skip("cutwidth", "n exceeds dp cap");
        } else if (g.num_vertices() <= cfg.brute_max_n) {
            auto brute = exact_cutwidth_bruteforce(g);
            if (brute.value != *cw)
                violation("cutwidth", "dp=" + std::to_string(*cw) +
                                          " brute=" + std::to_string(brute.value) +
                                          " witness=" + join_ints(brute.witness.order));
        }
    }

    if (has_check(cfg, "coloring")) {
        auto coloring = greedy_color(g, cores.coloring_order());
        int used = num_colors(coloring);
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (coloring[u] == coloring[v]) proper = false;
        if (!proper || used > cores.degeneracy + 1)
            violation("coloring", "colors=" + std::to_string(used) +
                                      " delta=" + std::to_string(cores.degeneracy) +
                                      " order=" + join_ints(cores.coloring_order()));
    }

    bool circular_feasible = g.num_vertices() <= cfg.circular_max_n &&
                             g.num_edges() <= cfg.circular_max_m;

    if (has_check(cfg, "circular")) {
        if (!circular_feasible || !cw) {
            skip("circular", "beyond circular caps");
        } else {
            auto circ = exact_circular_cutwidth(g, cfg.circular_max_n, cfg.circular_max_m);
            out.row["circular_cutwidth"] = circ.value;
            if (circ.value > *cw)
                violation("circular", "ccw=" + std::to_string(circ.value) +
                                          " cw=" + std::to_string(*cw) +
                                          " order=" + join_ints(circ.witness.cyclic_order));
        }
    }

    if (has_check(cfg, "tree-theorem")) {
        bool tree = g.num_edges() == g.num_vertices() - 1 && is_connected(g);
        if (!tree) {
            // not an error: family may mix inputs
        } else if (!circular_feasible || !cw) {
            skip("tree-theorem", "beyond circular caps");
        } else {
            auto circ = exact_circular_cutwidth(g, cfg.circular_max_n, cfg.circular_max_m);
            out.row["circular_cutwidth"] = circ.value;
            if (circ.value != *cw)
                violation("tree-theorem", "ccw=" + std::to_string(circ.value) +
                                              " cw=" + std::to_string(*cw) +
                                              " order=" + join_ints(circ.witness.cyclic_order));
        }
    }

    if (has_check(cfg, "sparsity")) {
        if (g.num_vertices() > cfg.subset_max_n) {
            skip("sparsity", "n exceeds subset cap");
        } else if (g.num_vertices() >= 1) {
            auto table = max_uniform_lambda_by_min_size(g, cfg.subset_max_n);
            std::optional<Rational> prev;
            for (int t = 1; t <= g.num_vertices(); ++t) {
                if (prev && table[t] && *table[t] < *prev)
                    violation("sparsity", "max_uniform_lambda not monotone at t=" +
                                              std::to_string(t));
                if (table[t]) {
                    SparsityParams params(Rational(t, g.num_vertices()), *table[t]);
                    auto check = is_uniformly_sparse(g, params, cfg.subset_max_n);
                    if (!check.sparse)
                        violation("sparsity",
                                  "certified lambda refuted, t=" + std::to_string(t) +
                                      " subset=" + join_ints(check.violating_subset));
                    prev = table[t];
                }
            }
        }
    }

    if (has_check(cfg, "bounds")) {
        VerifyCaps caps;
        caps.dp_max_n = cfg.dp_max_n;
        caps.subset_max_n = cfg.subset_max_n;
        caps.heuristic_iterations = cfg.heuristic_iterations;
        caps.seed = cfg.seed;
        auto report = verify_theorem_on_graph(g, caps, item.id);
        out.row["bounds"] = report.to_json()["bounds"];
        for (const auto& e : report.entries) {
            if (e.verdict == Verdict::Fail)
                violation("bounds", e.name + " " + e.params + " bound=" +
                                        rational_to_string(e.bound) + " cw=" +
                                        (report.cutwidth ? std::to_string(*report.cutwidth)
                                                         : "<=" + std::to_string(*report.cutwidth_upper)));
            if (e.verdict == Verdict::Pass && report.cutwidth &&
                Rational(*report.cutwidth) == e.bound)
                ++out.tight;
        }
    }

    return out;
}

} // namespace

void SweepConfig::validate() const {
    if (!kKnownFamilies.count(family))
        throw std::invalid_argument("unknown family: " + family);
    for (const auto& c : checks)
        if (!kKnownChecks.count(c)) throw std::invalid_argument("unknown check: " + c);
    if (checks.empty()) throw std::invalid_argument("no checks selected");
    if (n_min < 0 || n_max < n_min) throw std::invalid_argument("bad n range");
    if (family == "exhaustive" && n_max > 6)
        throw std::invalid_argument("exhaustive family is limited to n <= 6");
    if (family == "file" && files.empty())
        throw std::invalid_argument("file family needs at least one input file");
    if (k_min < 1 || k_max < k_min) throw std::invalid_argument("bad k range");
    if (seeds < 1) throw std::invalid_argument("seeds must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    if (output_format != "json" && output_format != "csv")
        throw std::invalid_argument("output format must be json or csv");
    if (dp_max_n > 26) throw std::invalid_argument("dp cap too large");
    if (brute_max_n > 9) throw std::invalid_argument("brute-force cap is 9");
    if (circular_max_n > 10) throw std::invalid_argument("circular cap too large");
    if (subset_max_n > 18) throw std::invalid_argument("subset cap is 18");
}

SweepConfig SweepConfig::from_json(const nlohmann::json& j) {
    SweepConfig c;
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("family", c.family);
    get("n_min", c.n_min);
    get("n_max", c.n_max);
    get("k_min", c.k_min);
    get("k_max", c.k_max);
    get("d_min", c.d_min);
    get("d_max", c.d_max);
    get("p", c.p);
    get("seeds", c.seeds);
    get("seed", c.seed);
    get("files", c.files);
    get("checks", c.checks);
    get("dp_max_n", c.dp_max_n);
    get("brute_max_n", c.brute_max_n);
    get("circular_max_n", c.circular_max_n);
    get("circular_max_m", c.circular_max_m);
    get("subset_max_n", c.subset_max_n);
    get("heuristic_iterations", c.heuristic_iterations);
    get("threads", c.threads);
    get("output_format", c.output_format);
    get("output_path", c.output_path);
    c.validate();
    return c;
}

nlohmann::json SweepConfig::to_json() const {
    return {
        {"family", family},
        {"n_min", n_min},
        {"n_max", n_max},
        {"k_min", k_min},
        {"k_max", k_max},
        {"d_min", d_min},
        {"d_max", d_max},
        {"p", p},
        {"seeds", seeds},
        {"seed", seed},
        {"files", files},
        {"checks", checks},
        {"dp_max_n", dp_max_n},
        {"brute_max_n", brute_max_n},
        {"circular_max_n", circular_max_n},
        {"circular_max_m", circular_max_m},
        {"subset_max_n", subset_max_n},
        {"heuristic_iterations", heuristic_iterations},
        {"threads", threads},
        {"output_format", output_format},
        {"output_path", output_path},
    };
}

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    Family fam = build_family(config);

    std::vector<GraphOutcome> outcomes(fam.count);
    std::atomic<std::size_t> next{0};
    int workers = config.threads > 0
                      ? config.threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers),
                                                     std::max<std::size_t>(fam.count, 1)));

    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= fam.count) return;
            try {
                outcomes[i] = process_graph(config, i, fam.item(i));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    SweepResult result;
    result.config_echo = config.to_json();
    result.summary.graphs_processed = static_cast<int>(fam.count);
    for (auto& o : outcomes) {
        result.summary.tight_cases += o.tight;
        result.summary.capacity_skips += o.capacity_skips;
        for (auto& v : o.violations) result.violations.push_back(std::move(v));
        result.graph_rows.push_back(std::move(o.row));
    }
    result.summary.violation_count = static_cast<int>(result.violations.size());
    return result;
}

nlohmann::json SweepResult::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["tool_version"] = kToolVersion;
    // the one nondeterministic field; everything else is reproducible
    j["timestamp"] = static_cast<std::int64_t>(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
    j["config"] = config_echo;
    j["summary"] = {
        {"graphs_processed", summary.graphs_processed},
        {"violations", summary.violation_count},
        {"tight_cases", summary.tight_cases},
        {"capacity_skips", summary.capacity_skips},
    };
    nlohmann::json vio = nlohmann::json::array();
    for (const auto& v : violations)
        vio.push_back({{"graph_index", v.graph_index},
                       {"graph_id", v.graph_id},
                       {"check", v.check},
                       {"detail", v.detail}});
    j["violations"] = std::move(vio);
    j["graphs"] = graph_rows;
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string sweep_report_csv(const nlohmann::json& result) {
    if (!result.contains("schema") || result.at("schema") != 1)
        throw std::invalid_argument("unsupported or missing result schema");
    std::ostringstream out;
    out << "graph,n,m,degeneracy,cutwidth,cw_method,bound,params,value,gap,verdict\n";
    for (const auto& row : result.at("graphs")) {
        std::string id = row.at("id").get<std::string>();
        std::string cwv = row.contains("cutwidth")
                              ? std::to_string(row.at("cutwidth").get<int>())
                              : "";
        std::string method = row.value("cw_method", "");
        std::string prefix = csv_escape(id) + "," + std::to_string(row.at("n").get<int>()) +
                             "," + std::to_string(row.at("m").get<int>()) + "," +
                             std::to_string(row.at("degeneracy").get<int>()) + "," + cwv +
                             "," + method;
        if (!row.contains("bounds")) {
            out << prefix << ",,,,,\n";
            continue;
        }
        for (const auto& b : row.at("bounds")) {
            out << prefix << "," << csv_escape(b.at("name").get<std::string>()) << ","
                << csv_escape(b.at("params").get<std::string>()) << ","
                << b.at("bound").get<std::string>() << "," << b.value("gap", "") << ","
                << b.at("verdict").get<std::string>() << "\n";
        }
    }
    return out.str();
}

} // namespace cwtk
