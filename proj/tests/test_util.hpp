#ifndef CWTK_TEST_UTIL_HPP
#define CWTK_TEST_UTIL_HPP

#include "cwtk/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cwtk::testutil {

// Labeled graph on n vertices from an edge-set bitmask over pairs (u,v), u<v,
// ordered lexicographically.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

// Definition-based degeneracy: the largest k whose k-core (computed by naive
// repeated scanning, independent of the bucket peeling) is nonempty.
inline int naive_degeneracy(const Graph& g) {
    int n = g.num_vertices();
    for (int k = n; k >= 1; --k) {
        std::vector<bool> alive(n, true);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                int deg = 0;
                for (int u : g.neighbors(v))
                    if (alive[u]) ++deg;
                if (deg < k) { alive[v] = false; changed = true; }
            }
        }
        for (int v = 0; v < n; ++v)
            if (alive[v]) return k;
    }
    return 0;
}

inline bool is_connected(const Graph& g) {
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

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

inline Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

inline Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        edges.emplace_back(i, i + 5);
        edges.emplace_back(std::min(5 + i, 5 + (i + 2) % 5), std::max(5 + i, 5 + (i + 2) % 5));
    }
    return Graph(10, std::move(edges));
}

} // namespace cwtk::testutil

#endif
