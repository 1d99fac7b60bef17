#ifndef CWTK_CIRCULAR_HPP
#define CWTK_CIRCULAR_HPP

#include "cwtk/cutwidth.hpp"
#include "cwtk/graph.hpp"

#include <vector>

namespace cwtk {

// Cyclic vertex order (read clockwise; rotations equivalent) plus one arc
// choice per edge. clockwise[e] refers to edges()[e] = {u,v} with u < v and
// means the arc runs clockwise from u to v; it then crosses the gaps
// pos(u), pos(u)+1, ..., pos(v)-1 (mod n), where gap g lies between cyclic
// positions g and g+1 mod n.
struct CircularLayout {
    std::vector<int> cyclic_order;
    std::vector<bool> clockwise;
};

struct CongestionResult {
    int congestion = 0;
    std::vector<int> gap_load; // one entry per gap, size n
};

CongestionResult circular_congestion(const Graph& g, const CircularLayout& layout);

struct CircularResult {
    int value = 0;
    CircularLayout witness;
};

// Minimum congestion over all cyclic orders (first vertex pinned, reflections
// pruned) and all arc assignments, with branch-and-bound on partial gap loads.
// Never exceeds the cutwidth. Throws CapacityError beyond the caps.
CircularResult exact_circular_cutwidth(const Graph& g, int max_n = 8, int max_m = 16);

// Places a linear ordering on the circle with every arc avoiding the gap
// between the last and first vertex; congestion equals the ordering's width.
CircularLayout line_layout_embed(const Graph& g, const LinearOrdering& ordering);

} // namespace cwtk

#endif
