#ifndef CWTK_GRAPH_HPP
#define CWTK_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cwtk {

// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// the constructor rejects self-loops, duplicate edges and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // One 64-bit neighborhood mask per vertex; requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;           // sorted
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

// Relabeled graph on |vertices| vertices keeping exactly the edges internal to
// the set. Order of `vertices` fixes the relabeling; duplicates are rejected.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Exact branch-and-bound clique search; intended for n <= 32-ish inputs.
// r > n simply returns false.
bool has_clique(const Graph& g, int r);

bool is_triangle_free(const Graph& g);

// Largest r with has_clique(g, r); 0 for the empty graph.
int clique_number(const Graph& g);

int max_degree(const Graph& g);

// Edge-list format: first line "n", then lines "u v". Duplicate edge lines are
// deduplicated; self-loops and out-of-range endpoints are parse errors.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

} // namespace cwtk

#endif
