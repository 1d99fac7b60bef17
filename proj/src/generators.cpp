#include "cwtk/generators.hpp"

#include "cwtk/errors.hpp"

#include <random>
#include <stdexcept>

namespace cwtk {

Graph generate_complete(int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph generate_turan(int n, int k) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    // class of vertex v: assign the first (n mod k) classes size ceil(n/k)
    std::vector<int> cls(n);
    int big = n % k, size_big = n / k + 1, size_small = n / k;
    int v = 0;
    for (int c = 0; c < k && v < n; ++c) {
        int sz = c < big ? size_big : size_small;
        for (int i = 0; i < sz && v < n; ++i) cls[v++] = c;
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (cls[u] != cls[w]) edges.emplace_back(u, w);
    return Graph(n, std::move(edges));
}

Graph generate_turan_modular(int n, int k) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (u % k != w % k) edges.emplace_back(u, w);
    return Graph(n, std::move(edges));
}

Graph generate_hypercube(int d) {
    if (d < 0 || d > 20) throw std::invalid_argument("hypercube dimension must be in 0..20");
    int n = 1 << d;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(d) << (d > 0 ? d - 1 : 0));
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b)
            if (!(u >> b & 1)) edges.emplace_back(u, u | 1 << b);
    return Graph(n, std::move(edges));
}

namespace {

// Platform-independent uniform double in [0,1).
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Graph generate_random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p >= 1.0 || unit_double(rng) < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph generate_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer)
        x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<Edge> edges;
    // smallest-leaf decoding
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : pruefer) {
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            while (deg[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    // the last remaining leaf joins vertex n-1
    edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
    return Graph(n, std::move(edges));
}

} // namespace cwtk
