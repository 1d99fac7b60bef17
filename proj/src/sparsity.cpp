#include "cwtk/sparsity.hpp"

#include "cwtk/errors.hpp"

#include <bit>
#include <stdexcept>

namespace cwtk {

SparsityParams::SparsityParams(Rational r, Rational l)
    : rho(std::move(r)), lambda(std::move(l)) {
    if (rho < 0 || rho > 1) throw std::invalid_argument("rho must be in [0,1]");
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
}

bool is_lambda_sparse(const Graph& g, const Rational& lambda) {
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    Rational n(g.num_vertices());
    return Rational(g.num_edges()) <= n * (n - 1) / (2 * lambda);
}

namespace {

int subset_size_threshold(int n, const Rational& rho) {
    // |S| >= rho*n with |S| integral
    BigInt t = rational_ceil(rho * n);
    if (t < 0) return 0;
    if (t > n) return n + 1; // no subset qualifies
    return static_cast<int>(t);
}

void check_subset_cap(const Graph& g, int max_n) {
    if (g.num_vertices() > max_n)
        throw CapacityError("exhaustive subset scan limited to n <= " +
                            std::to_string(max_n) + ", got n=" +
                            std::to_string(g.num_vertices()));
}

int induced_edge_count(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
    int twice = 0;
    std::uint64_t t = s;
    while (t) {
        int v = std::countr_zero(t);
        t &= t - 1;
        twice += std::popcount(adj[v] & s);
    }
    return twice / 2;
}

} // namespace

UniformSparsityResult is_uniformly_sparse(const Graph& g, const SparsityParams& params,
                                          int max_n) {
    check_subset_cap(g, max_n);
    int n = g.num_vertices();
    int min_size = subset_size_threshold(n, params.rho);
    auto adj = g.adjacency_masks();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        int size = std::popcount(s);
        if (size < min_size) continue;
        int m_s = induced_edge_count(adj, s);
        if (m_s == 0) continue; // no constraint on lambda
        if (Rational(m_s) > Rational(size) * (size - 1) / (2 * params.lambda)) {
            UniformSparsityResult out;
            out.sparse = false;
            for (int v = 0; v < n; ++v)
                if (s >> v & 1) out.violating_subset.push_back(v);
            return out;
        }
    }
    return {};
}

std::vector<std::optional<Rational>> max_uniform_lambda_by_min_size(const Graph& g,
                                                                    int max_n) {
    check_subset_cap(g, max_n);
    int n = g.num_vertices();
    auto adj = g.adjacency_masks();
    // min lambda over subsets of exactly size s, then suffix-minimize
    std::vector<std::optional<Rational>> by_size(n + 1);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        int size = std::popcount(s);
        int m_s = induced_edge_count(adj, s);
        if (m_s == 0) continue;
        Rational lam = Rational(size) * (size - 1) / (2 * m_s);
        if (!by_size[size] || lam < *by_size[size]) by_size[size] = lam;
    }
    std::vector<std::optional<Rational>> table(n + 1);
    std::optional<Rational> running;
    for (int t = n; t >= 0; --t) {
        if (by_size[t] && (!running || *by_size[t] < *running)) running = by_size[t];
        table[t] = running;
    }
    return table;
}

std::optional<Rational> max_uniform_lambda(const Graph& g, const Rational& rho, int max_n) {
    if (rho < 0 || rho > 1) throw std::invalid_argument("rho must be in [0,1]");
    auto table = max_uniform_lambda_by_min_size(g, max_n);
    int t = subset_size_threshold(g.num_vertices(), rho);
    if (t > g.num_vertices()) return std::nullopt;
    return table[t];
}

Rational turan_sparsity_lambda(int k, int s) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (s < 2) throw std::invalid_argument("s must be >= 2");
    return Rational(BigInt(k) * (s - 1), BigInt(k - 1) * s);
}

Rational bound_eq_main2(int n, int delta, const SparsityParams& params) {
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    Rational r(rational_ceil(params.rho * n));
    return r * (Rational(delta) - (r - 1) / params.lambda);
}

Rational bound_eq_main(int delta, const Rational& lambda) {
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    Rational t = Rational(delta) * lambda + 1;
    return t * t / (4 * lambda) - 1 / lambda;
}

bool guard_eq_main(int n, int delta, const SparsityParams& params) {
    return 2 * Rational(n) * params.rho <= Rational(delta) * params.lambda - 1;
}

BigInt eq_main_eval_index(int delta, const Rational& lambda) {
    return rational_floor((Rational(delta) * lambda + 1) / 2);
}

Rational eq_main_epsilon(int delta, const Rational& lambda) {
    Rational half = (Rational(delta) * lambda + 1) / 2;
    return half - Rational(rational_floor(half));
}

GeneralBound bound_general(int delta) {
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    Rational value = Rational(delta) * delta / 4 + Rational(delta) / 2;
    return {value, rational_ceil(value)};
}

Rational bound_triangle_free(int delta) {
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    return Rational(delta) * delta / 2;
}

Rational bound_clique_free(int delta, int k) {
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    return Rational(k) * delta * delta / (4 * (k - 1)) - Rational(k - 1, k);
}

TuranEnvelope turan_envelope(int n, int k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    Rational quad = Rational(k - 1, k) * n * n / 4;
    Rational lower = quad - Rational(n, 2) - Rational(3 * k, 4 * (k - 1));
    Rational upper = quad + Rational(n, 2) + Rational(k, 4 * (k - 1));
    return {lower, upper};
}

} // namespace cwtk
