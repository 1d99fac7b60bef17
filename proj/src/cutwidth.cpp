#include "cwtk/cutwidth.hpp"

#include "cwtk/errors.hpp"
#include "cwtk/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cwtk {

int LinearOrdering::width() const {
    int w = 0;
    for (int x : profile) w = std::max(w, x);
    return w;
}

const char* method_name(CutwidthMethod m) {
    switch (m) {
        case CutwidthMethod::ExactDp: return "exact-dp";
        case CutwidthMethod::BruteForce: return "brute-force";
        case CutwidthMethod::Heuristic: return "heuristic";
    }
    return "?";
}

namespace {

void check_permutation(int n, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order is not a permutation");
    std::vector<bool> seen(n, false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("order is not a permutation");
        seen[v] = true;
    }
}

std::vector<int> profile_of(const Graph& g, const std::vector<int>& order) {
    int n = g.num_vertices();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // each edge crosses the cuts after positions min..max-1
    std::vector<int> diff(n + 1, 0);
    for (auto [u, v] : g.edges()) {
        auto [lo, hi] = std::minmax(pos[u], pos[v]);
        ++diff[lo];
        --diff[hi];
    }
    std::vector<int> profile(n);
    int running = 0;
    for (int i = 0; i < n; ++i) {
        running += diff[i];
        profile[i] = running;
    }
    return profile;
}

} // namespace

LinearOrdering cut_profile(const Graph& g, std::vector<int> order) {
    check_permutation(g.num_vertices(), order);
    LinearOrdering out;
    out.profile = profile_of(g, order);
    out.order = std::move(order);
    return out;
}

CutwidthResult exact_cutwidth_dp(const Graph& g, int max_n) {
    int n = g.num_vertices();
    if (n > max_n)
        throw CapacityError("exact DP limited to n <= " + std::to_string(max_n) +
                            ", got n=" + std::to_string(n) + "; use the heuristic");
    if (n == 0) return {0, {}, CutwidthMethod::ExactDp};

    auto adj = g.adjacency_masks();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::size_t states = std::size_t{1} << n;
    std::vector<std::uint16_t> cut(states, 0), dp(states, 0);
    for (std::size_t s = 1; s < states; ++s) {
        int v = std::countr_zero(s);
        std::size_t rest = s & (s - 1);
        cut[s] = static_cast<std::uint16_t>(
            cut[rest] + deg[v] - 2 * std::popcount(adj[v] & rest));
        int best = 1 << 30;
        for (std::size_t t = s; t;) {
            int w = std::countr_zero(t);
            t &= t - 1;
            best = std::min(best, static_cast<int>(dp[s & ~(std::size_t{1} << w)]));
        }
        dp[s] = static_cast<std::uint16_t>(std::max(best, static_cast<int>(cut[s])));
    }

    int value = dp[states - 1];
    // reconstruct, preferring the smallest feasible vertex at each step
    std::vector<int> order(n);
    std::size_t s = states - 1;
    for (int i = n - 1; i >= 0; --i) {
        for (std::size_t t = s; t;) {
            int w = std::countr_zero(t);
            t &= t - 1;
            if (dp[s & ~(std::size_t{1} << w)] <= value) {
                order[i] = w;
                s &= ~(std::size_t{1} << w);
                break;
            }
        }
    }
    return {value, cut_profile(g, std::move(order)), CutwidthMethod::ExactDp};
}

CutwidthResult exact_cutwidth_bruteforce(const Graph& g) {
    int n = g.num_vertices();
    if (n > 9)
        throw CapacityError("brute force limited to n <= 9, got n=" + std::to_string(n));
    if (n == 0) return {0, {}, CutwidthMethod::BruteForce};

    auto adj = g.adjacency_masks();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = INT32_MAX;
    std::vector<int> best_order = perm;
    do {
        std::uint64_t placed = 0;
        int cutval = 0, width = 0;
        for (int i = 0; i < n && width < best; ++i) {
            int v = perm[i];
            cutval += deg[v] - 2 * std::popcount(adj[v] & placed);
            placed |= std::uint64_t{1} << v;
            width = std::max(width, cutval);
        }
        if (width < best) {
            best = width;
            best_order = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, cut_profile(g, std::move(best_order)), CutwidthMethod::BruteForce};
}

CutwidthResult heuristic_cutwidth(const Graph& g, const HeuristicOptions& opts) {
    int n = g.num_vertices();
    if (n < 1) return {0, {}, CutwidthMethod::Heuristic};
    std::mt19937_64 rng(opts.seed);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto width_of = [&](const std::vector<int>& o) {
        auto prof = profile_of(g, o);
        return *std::max_element(prof.begin(), prof.end());
    };

    int cur = width_of(order), best = cur;
    std::vector<int> best_order = order;
    double temp = opts.initial_temperature;
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    for (int it = 0; it < opts.iterations && n > 1; ++it) {
        std::vector<int> cand = order;
        if (unit() < opts.relocate_fraction) {
            int from = static_cast<int>(rng() % n);
            int to = static_cast<int>(rng() % n);
            int v = cand[from];
            cand.erase(cand.begin() + from);
            cand.insert(cand.begin() + to, v);
        } else {
            int i = static_cast<int>(rng() % (n - 1));
            std::swap(cand[i], cand[i + 1]);
        }
        int w = width_of(cand);
        int delta = w - cur;
        if (delta <= 0 || unit() < std::exp(-delta / std::max(temp, 1e-9))) {
            order = std::move(cand);
            cur = w;
            if (cur < best) {
                best = cur;
                best_order = order;
            }
        }
        temp *= opts.cooling;
    }
    return {best, cut_profile(g, std::move(best_order)), CutwidthMethod::Heuristic};
}

TuranOrdering turan_natural_ordering(int n, int k) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    Graph g = generate_turan_modular(n, k);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    LinearOrdering lo = cut_profile(g, std::move(order));
    return {std::move(g), std::move(lo)};
}

Rational turan_crossing_bound(int n, int k, int i) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (i < 1 || i > n) throw std::invalid_argument("i must be in 1..n");
    return Rational(i) * (Rational(n - i) * Rational(k - 1, k) + 1);
}

Rational turan_crossing_bound_max(int n, int k) {
    Rational best = 0;
    for (int i = 1; i <= n; ++i) best = std::max(best, turan_crossing_bound(n, k, i));
    return best;
}

} // namespace cwtk
