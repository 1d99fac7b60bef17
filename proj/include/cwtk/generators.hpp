#ifndef CWTK_GENERATORS_HPP
#define CWTK_GENERATORS_HPP

#include "cwtk/graph.hpp"

#include <cstdint>

namespace cwtk {

Graph generate_complete(int n);

// Most balanced complete k-partite graph on n vertices: n mod k classes of
// size ceil(n/k), the rest of size floor(n/k).
Graph generate_turan(int n, int k);

// Vertices 0..n-1 with an edge {a,b} iff a mod k != b mod k. Isomorphic to
// generate_turan(n, k); carries the natural increasing-integer ordering.
Graph generate_turan_modular(int n, int k);

// d-dimensional hypercube, 0 <= d <= 20.
Graph generate_hypercube(int d);

// G(n,p): each pair independently with probability p; deterministic per seed.
Graph generate_random_gnp(int n, double p, std::uint64_t seed);

// Uniform random labeled tree via Pruefer decoding; n >= 1.
Graph generate_random_tree(int n, std::uint64_t seed);

} // namespace cwtk

#endif
