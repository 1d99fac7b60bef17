#include <doctest.h>

#include "cwtk/circular.hpp"
#include "cwtk/errors.hpp"
#include "cwtk/generators.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace cwtk;

TEST_CASE("circular congestion basics") {
    Graph c4 = testutil::cycle(4);
    CircularLayout layout;
    layout.cyclic_order = {0, 1, 2, 3};
    // edges sorted: (0,1),(0,3),(1,2),(2,3); short way each
    layout.clockwise = {true, false, true, true};
    auto res = circular_congestion(c4, layout);
    CHECK(res.gap_load == std::vector<int>{1, 1, 1, 1});
    CHECK(res.congestion == 1);

    Graph k2(2, {{0, 1}});
    for (bool cw : {true, false}) {
        CircularLayout l2{{0, 1}, {cw}};
        CHECK(circular_congestion(k2, l2).congestion == 1);
    }

    Graph p3 = testutil::path(3);
    CircularLayout l3{{0, 1, 2}, {true, true}};
    CHECK(circular_congestion(p3, l3).congestion == 1);

    CHECK_THROWS_AS(circular_congestion(c4, CircularLayout{{0, 1, 2, 3}, {true}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(circular_congestion(c4, CircularLayout{{0, 1, 2, 2}, {1, 1, 1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("congestion is rotation invariant") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(n, 0.6, rng);
        CircularLayout layout;
        layout.cyclic_order.resize(n);
        for (int i = 0; i < n; ++i) layout.cyclic_order[i] = i;
        std::shuffle(layout.cyclic_order.begin(), layout.cyclic_order.end(), rng);
        layout.clockwise.resize(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e) layout.clockwise[e] = rng() % 2;
        int base = circular_congestion(g, layout).congestion;
        for (int r = 1; r < n; ++r) {
            std::rotate(layout.cyclic_order.begin(), layout.cyclic_order.begin() + 1,
                        layout.cyclic_order.end());
            CHECK(circular_congestion(g, layout).congestion == base);
        }
    }
}

TEST_CASE("line embedding realizes the linear cutwidth") {
    Graph k5 = generate_complete(5);
    auto best = exact_cutwidth_dp(k5);
    auto layout = line_layout_embed(k5, best.witness);
    CHECK(circular_congestion(k5, layout).congestion == 6);

    Graph p4 = testutil::path(4);
    auto lp = cut_profile(p4, {0, 1, 2, 3});
    CHECK(circular_congestion(p4, line_layout_embed(p4, lp)).congestion == 1);

    Graph empty(4);
    auto le = cut_profile(empty, {0, 1, 2, 3});
    CHECK(circular_congestion(empty, line_layout_embed(empty, le)).congestion == 0);

    std::mt19937_64 rng(59);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(n, 0.5, rng);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        auto lo = cut_profile(g, order);
        CHECK(circular_congestion(g, line_layout_embed(g, lo)).congestion == lo.width());
    }
}

TEST_CASE("exact circular cutwidth known values") {
    CHECK(exact_circular_cutwidth(testutil::cycle(6)).value == 1);
    CHECK(exact_circular_cutwidth(generate_complete(4)).value == 3);
    CHECK(exact_circular_cutwidth(Graph(1)).value == 0);
    CHECK(exact_circular_cutwidth(Graph(2, {{0, 1}})).value == 1);
    CHECK(exact_circular_cutwidth(Graph(5)).value == 0);
    CHECK_THROWS_AS(exact_circular_cutwidth(Graph(9)), CapacityError);
    CHECK_THROWS_AS(exact_circular_cutwidth(generate_complete(7)), CapacityError); // m = 21 > 16
}

TEST_CASE("circular cutwidth never exceeds cutwidth") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = testutil::random_graph(n, 0.5, rng);
        if (g.num_edges() > 16) continue;
        auto circ = exact_circular_cutwidth(g);
        auto cw = exact_cutwidth_dp(g);
        CHECK(circ.value <= cw.value);
        CHECK(circular_congestion(g, circ.witness).congestion == circ.value);
    }
}

TEST_CASE("trees match their cutwidth on the circle") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph t = generate_random_tree(7, seed);
        CHECK(exact_circular_cutwidth(t).value == exact_cutwidth_dp(t).value);
    }
}
