#include "cwtk/circular.hpp"

#include "cwtk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cwtk {

namespace {

std::vector<int> positions_of(int n, const std::vector<int>& cyclic_order) {
    if (static_cast<int>(cyclic_order.size()) != n)
        throw std::invalid_argument("cyclic order is not a permutation");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = cyclic_order[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("cyclic order is not a permutation");
        pos[v] = i;
    }
    return pos;
}

void add_arc(std::vector<int>& load, int from, int to, int n, int amount) {
    for (int ggap = from; ggap != to; ggap = (ggap + 1) % n) load[ggap] += amount;
}

} // namespace

CongestionResult circular_congestion(const Graph& g, const CircularLayout& layout) {
    int n = g.num_vertices();
    if (static_cast<int>(layout.clockwise.size()) != g.num_edges())
        throw std::invalid_argument("arc choice size must match edge count");
    auto pos = positions_of(n, layout.cyclic_order);
    CongestionResult out;
    out.gap_load.assign(n, 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        int p = pos[u], q = pos[v];
        if (!layout.clockwise[e]) std::swap(p, q);
        add_arc(out.gap_load, p, q, n, 1);
    }
    for (int l : out.gap_load) out.congestion = std::max(out.congestion, l);
    return out;
}

CircularLayout line_layout_embed(const Graph& g, const LinearOrdering& ordering) {
    int n = g.num_vertices();
    auto pos = positions_of(n, ordering.order);
    CircularLayout layout;
    layout.cyclic_order = ordering.order;
    layout.clockwise.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        layout.clockwise[e] = pos[u] < pos[v]; // arc stays within the line segment
    }
    return layout;
}

namespace {

struct ArcSearch {
    const Graph& g;
    int n;
    std::vector<int> pos;
    std::vector<int> edge_order; // edge indices, most constrained first
    std::vector<int> load;
    std::vector<bool> choice;
    int best;
    std::vector<bool> best_choice;
    bool improved = false;

    explicit ArcSearch(const Graph& graph) : g(graph), n(graph.num_vertices()) {}

    int arc_len(int e, bool cw) const {
        auto [u, v] = g.edges()[e];
        int p = pos[u], q = pos[v];
        if (!cw) std::swap(p, q);
        return (q - p + n) % n;
    }

    void run(int depth, int current_max) {
        if (current_max >= best) return;
        if (depth == static_cast<int>(edge_order.size())) {
            best = current_max;
            best_choice = choice;
            improved = true;
            return;
        }
        int e = edge_order[depth];
        auto [u, v] = g.edges()[e];
        // try the shorter arc first
        bool first_cw = arc_len(e, true) <= arc_len(e, false);
        for (bool cw : {first_cw, !first_cw}) {
            int p = pos[u], q = pos[v];
            if (!cw) std::swap(p, q);
            add_arc(load, p, q, n, 1);
            int mx = current_max;
            for (int gp = p; gp != q; gp = (gp + 1) % n) mx = std::max(mx, load[gp]);
            choice[e] = cw;
            run(depth + 1, mx);
            add_arc(load, p, q, n, -1);
        }
    }
};

} // namespace

CircularResult exact_circular_cutwidth(const Graph& g, int max_n, int max_m) {
    int n = g.num_vertices();
    int m = g.num_edges();
    if (n > max_n || m > max_m)
        throw CapacityError("circular solver limited to n <= " + std::to_string(max_n) +
                            ", m <= " + std::to_string(max_m));
    CircularResult out;
    out.witness.cyclic_order.resize(n);
    std::iota(out.witness.cyclic_order.begin(), out.witness.cyclic_order.end(), 0);
    out.witness.clockwise.assign(m, true);
    if (m == 0) return out;

    // greedy initial layout for the cutoff: identity circle, shorter arc each
    ArcSearch search(g);
    search.pos.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    {
        CircularLayout greedy;
        greedy.cyclic_order = order;
        greedy.clockwise.resize(m);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            int fwd = (v - u + n) % n;
            greedy.clockwise[e] = fwd <= n - fwd;
        }
        auto res = circular_congestion(g, greedy);
        out.value = res.congestion;
        out.witness = greedy;
    }

    search.edge_order.resize(m);
    std::iota(search.edge_order.begin(), search.edge_order.end(), 0);

    // every edge crosses at least one gap
    int lower_bound = (m + n - 1) / n;

    std::vector<int> rest(order.begin() + 1, order.end());
    std::sort(rest.begin(), rest.end());
    do {
        if (out.value <= lower_bound) break;
        std::vector<int> cyc;
        cyc.reserve(n);
        cyc.push_back(0);
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        // reflections: keep only one of each mirror pair
        if (n >= 3 && cyc[1] > cyc[n - 1]) continue;
        search.pos = positions_of(n, cyc);
        // most constrained edges first: biggest gap between the two arc lengths
        std::sort(search.edge_order.begin(), search.edge_order.end(), [&](int a, int b) {
            int da = std::abs(search.arc_len(a, true) - search.arc_len(a, false));
            int db = std::abs(search.arc_len(b, true) - search.arc_len(b, false));
            if (da != db) return da > db;
            return a < b;
        });
        search.load.assign(n, 0);
        search.choice.assign(m, true);
        search.best = out.value;
        search.improved = false;
        search.run(0, 0);
        if (search.improved) {
            out.value = search.best;
            out.witness.cyclic_order = cyc;
            out.witness.clockwise = search.best_choice;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

} // namespace cwtk
