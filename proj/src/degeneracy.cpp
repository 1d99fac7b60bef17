#include "cwtk/degeneracy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cwtk {

std::vector<int> CoreDecomposition::coloring_order() const {
    return {ordering.rbegin(), ordering.rend()};
}

KCoreResult k_core(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < k) { removed[v] = true; stack.push_back(v); }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!removed[u] && --deg[u] < k) { removed[u] = true; stack.push_back(u); }
    }
    std::vector<int> survivors;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) survivors.push_back(v);
    return {induced_subgraph(g, survivors), std::move(survivors)};
}

CoreDecomposition core_decomposition(const Graph& g) {
    int n = g.num_vertices();
    CoreDecomposition out;
    out.core_number.assign(n, 0);
    out.ordering.reserve(n);
    std::vector<int> deg(n);
    std::set<std::pair<int, int>> queue; // (degree, vertex): min degree, then min id
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<bool> removed(n, false);
    int current = 0;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        current = std::max(current, d);
        out.core_number[v] = current;
        out.ordering.push_back(v);
        removed[v] = true;
        for (int u : g.neighbors(v)) {
            if (removed[u]) continue;
            queue.erase({deg[u], u});
            queue.emplace(--deg[u], u);
        }
    }
    out.degeneracy = current;
    return out;
}

std::vector<int> greedy_color(const Graph& g, std::span<const int> ordering) {
    int n = g.num_vertices();
    if (static_cast<int>(ordering.size()) != n)
        throw std::invalid_argument("ordering is not a permutation");
    std::vector<bool> seen(n, false);
    for (int v : ordering) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("ordering is not a permutation");
        seen[v] = true;
    }
    std::vector<int> color(n, -1);
    std::vector<char> used;
    for (int v : ordering) {
        used.assign(n + 1, 0);
        for (int u : g.neighbors(v))
            if (color[u] >= 0) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

int num_colors(const std::vector<int>& coloring) {
    int mx = -1;
    for (int c : coloring) mx = std::max(mx, c);
    return mx + 1;
}

} // namespace cwtk
