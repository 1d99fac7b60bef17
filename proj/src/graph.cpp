#include "cwtk/graph.hpp"

#include "cwtk/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cwtk {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::span<const int> Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(int u, int v) const {
    auto nbrs = neighbors(u);
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw CapacityError("adjacency masks require n <= 64, got n=" + std::to_string(n_));
    std::vector<std::uint64_t> masks(n_, 0);
    for (auto [u, v] : edges_) {
        masks[u] |= std::uint64_t{1} << v;
        masks[v] |= std::uint64_t{1} << u;
    }
    return masks;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> relabel(g.num_vertices(), -1);
    int idx = 0;
    for (int v : vertices) {
        if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
        if (relabel[v] != -1) throw std::invalid_argument("duplicate vertex in subset");
        relabel[v] = idx++;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (relabel[u] != -1 && relabel[v] != -1)
            edges.emplace_back(relabel[u], relabel[v]);
    return Graph(idx, std::move(edges));
}

namespace {

// Candidate sets as word-blocked bitsets so the search works for any n.
using Blocks = std::vector<std::uint64_t>;

int popcount(const Blocks& b) {
    int c = 0;
    for (auto w : b) c += std::popcount(w);
    return c;
}

bool extend_clique(const std::vector<Blocks>& adj, Blocks cand, int need) {
    if (need == 0) return true;
    if (popcount(cand) < need) return false;
    for (std::size_t blk = 0; blk < cand.size(); ++blk) {
        while (cand[blk]) {
            int v = static_cast<int>(blk * 64) + std::countr_zero(cand[blk]);
            cand[blk] &= cand[blk] - 1; // only consider later candidates below v
            Blocks next(cand.size());
            for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & adj[v][i];
            if (extend_clique(adj, std::move(next), need - 1)) return true;
            if (popcount(cand) + 1 < need) return false;
        }
    }
    return false;
}

} // namespace

bool has_clique(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("clique size must be >= 1");
    int n = g.num_vertices();
    if (r > n) return false;
    if (r == 1) return n >= 1;
    std::size_t blocks = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<Blocks> adj(n, Blocks(blocks));
    for (auto [u, v] : g.edges()) {
        adj[u][v / 64] |= std::uint64_t{1} << (v % 64);
        adj[v][u / 64] |= std::uint64_t{1} << (u % 64);
    }
    Blocks all(blocks);
    for (int v = 0; v < n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    return extend_clique(adj, std::move(all), r);
}

bool is_triangle_free(const Graph& g) {
    return !has_clique(g, 3);
}

int clique_number(const Graph& g) {
    int r = 0;
    while (r < g.num_vertices() && has_clique(g, r + 1)) ++r;
    return r;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
    return d;
}

namespace {

int parse_int_token(const std::string& tok, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError::at_line("non-integer token '" + tok + "'", line_no);
    return value;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks.size() != 1) throw ParseError::at_line("expected vertex count alone", line_no);
            n = parse_int_token(toks[0], line_no);
            if (n < 0) throw ParseError::at_line("negative vertex count", line_no);
            continue;
        }
        if (toks.size() != 2) throw ParseError::at_line("expected 'u v'", line_no);
        int u = parse_int_token(toks[0], line_no);
        int v = parse_int_token(toks[1], line_no);
        if (u == v) throw ParseError::at_line("self-loop", line_no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError::at_line("vertex index out of range", line_no);
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError::at_line("missing vertex count line", 1);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

} // namespace cwtk
