#ifndef CWTK_DEGENERACY_HPP
#define CWTK_DEGENERACY_HPP

#include "cwtk/graph.hpp"

#include <span>
#include <vector>

namespace cwtk {

struct CoreDecomposition {
    std::vector<int> core_number; // per vertex
    int degeneracy = 0;
    // Min-degree removal order (ties broken by smallest id): every vertex has
    // at most `degeneracy` neighbors occurring later in this sequence.
    std::vector<int> ordering;

    // Reversed removal order: every vertex has at most `degeneracy` earlier
    // neighbors, which is what the greedy delta+1 coloring bound needs.
    std::vector<int> coloring_order() const;
};

struct KCoreResult {
    Graph graph;               // relabeled induced subgraph, min degree >= k
    std::vector<int> vertices; // surviving original vertex ids, increasing
};

// Maximal induced subgraph with minimum degree >= k (possibly empty).
KCoreResult k_core(const Graph& g, int k);

// Bucket-style peeling; core numbers, degeneracy, removal order.
CoreDecomposition core_decomposition(const Graph& g);

// Colors vertices in the given order with the smallest color unused among
// already-colored neighbors. `ordering` must be a permutation of V.
std::vector<int> greedy_color(const Graph& g, std::span<const int> ordering);

int num_colors(const std::vector<int>& coloring);

} // namespace cwtk

#endif
