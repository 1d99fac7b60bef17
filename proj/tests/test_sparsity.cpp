#include <doctest.h>

#include "cwtk/cutwidth.hpp"
#include "cwtk/degeneracy.hpp"
#include "cwtk/errors.hpp"
#include "cwtk/generators.hpp"
#include "cwtk/sparsity.hpp"

#include "test_util.hpp"

#include <bit>
#include <random>

using namespace cwtk;

TEST_CASE("rational string form is canonical") {
    CHECK(rational_to_string(Rational(3, 2)) == "3/2");
    CHECK(rational_to_string(Rational(6, 4)) == "3/2");
    CHECK(rational_to_string(Rational(-6, 4)) == "-3/2");
    CHECK(rational_to_string(Rational(4, 2)) == "2");
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
    CHECK(rational_ceil(Rational(7, 2)) == 4);
    CHECK(rational_ceil(Rational(-7, 2)) == -3);
    CHECK(rational_floor(Rational(-7, 2)) == -4);
    CHECK(rational_floor(Rational(6, 3)) == 2);
}

TEST_CASE("lambda sparsity") {
    Graph k2(2, {{0, 1}});
    CHECK(!is_lambda_sparse(k2, Rational(3, 2))); // adjacent pair fails any lambda > 1
    CHECK(is_lambda_sparse(k2, 1));
    std::mt19937_64 rng(67);
    for (int t = 0; t < 10; ++t)
        CHECK(is_lambda_sparse(testutil::random_graph(8, 0.7, rng), 1));
    CHECK(is_lambda_sparse(testutil::cycle(5), 2)); // 5 <= 5
    CHECK_THROWS_AS(is_lambda_sparse(k2, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("uniform sparsity") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 10; ++t) {
        Graph g = testutil::random_graph(7, 0.5, rng);
        CHECK(is_uniformly_sparse(g, SparsityParams(0, 1)).sparse); // every graph is (0,1)
    }
    Graph k5 = generate_complete(5);
    auto res = is_uniformly_sparse(k5, SparsityParams(0, 2));
    CHECK(!res.sparse);
    REQUIRE(res.violating_subset.size() >= 2);
    // witness must actually violate
    Graph sub = induced_subgraph(k5, res.violating_subset);
    CHECK(!is_lambda_sparse(sub, 2));

    CHECK(!is_uniformly_sparse(testutil::cycle(5), SparsityParams(Rational(3, 5), 2)).sparse);
    CHECK_THROWS_AS(is_uniformly_sparse(Graph(19), SparsityParams(0, 1)), CapacityError);
}

TEST_CASE("max uniform lambda") {
    CHECK(max_uniform_lambda(generate_complete(6), 0) == Rational(1));
    CHECK(!max_uniform_lambda(Graph(7), Rational(1, 2)).has_value()); // +infinity
    CHECK(max_uniform_lambda(testutil::cycle(6), Rational(1, 2)) == Rational(3, 2));

    // oracle: direct subset scan, independent of the suffix-min table
    std::mt19937_64 rng(73);
    for (int t = 0; t < 10; ++t) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(n, 0.5, rng);
        for (int num = 0; num <= n; ++num) {
            Rational rho(num, n);
            std::optional<Rational> best;
            for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
                int size = std::popcount(s);
                if (Rational(size) < rho * n) continue;
                std::vector<int> verts;
                for (int v = 0; v < n; ++v)
                    if (s >> v & 1) verts.push_back(v);
                int ms = induced_subgraph(g, verts).num_edges();
                if (ms == 0) continue;
                Rational lam(BigInt(size) * (size - 1), BigInt(2) * ms);
                if (!best || lam < *best) best = lam;
            }
            CHECK(max_uniform_lambda(g, rho) == best);
        }
        // monotone in rho
        std::optional<Rational> prev;
        for (int num = 0; num <= n; ++num) {
            auto cur = max_uniform_lambda(g, Rational(num, n));
            if (prev && cur) CHECK(*cur >= *prev);
            if (cur) prev = cur;
        }
    }

    // certification consistency
    Graph g = testutil::random_graph(8, 0.5, rng);
    auto lam = max_uniform_lambda(g, Rational(1, 2));
    if (lam) {
        CHECK(is_uniformly_sparse(g, SparsityParams(Rational(1, 2), *lam)).sparse);
        CHECK(!is_uniformly_sparse(g, SparsityParams(Rational(1, 2), *lam + Rational(1, 100))).sparse);
    }
}

TEST_CASE("turan sparsity lambda") {
    CHECK(turan_sparsity_lambda(2, 10) == Rational(9, 5));
    CHECK(turan_sparsity_lambda(2, 2) == Rational(1));
    CHECK_THROWS_AS(turan_sparsity_lambda(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(turan_sparsity_lambda(2, 1), std::invalid_argument);

    // every triangle-free graph on s vertices is 2(s-1)/s sparse
    std::mt19937_64 rng(79);
    int found = 0;
    while (found < 30) {
        int s = 3 + static_cast<int>(rng() % 8);
        Graph g = testutil::random_graph(s, 0.3, rng);
        if (!is_triangle_free(g)) continue;
        ++found;
        CHECK(is_lambda_sparse(g, turan_sparsity_lambda(2, s)));
    }
}

TEST_CASE("bound evaluators on pinned inputs") {
    CHECK(bound_eq_main2(10, 4, SparsityParams(0, 1)) == Rational(0));
    CHECK(bound_eq_main2(10, 4, SparsityParams(Rational(2, 5), 2)) == Rational(10));

    CHECK(bound_eq_main(4, 1) == Rational(21, 4));
    CHECK(bound_eq_main(0, 1) == Rational(-3, 4));
    CHECK(guard_eq_main(5, 4, SparsityParams(0, 1))); // 0 <= 3

    auto g0 = bound_general(0);
    CHECK(g0.value == Rational(0));
    CHECK(g0.integer_threshold == 0);
    auto g4 = bound_general(4);
    CHECK(g4.value == Rational(6));
    auto g3 = bound_general(3);
    CHECK(g3.value == Rational(15, 4));
    CHECK(g3.integer_threshold == 4); // (delta+1)^2/4 for odd delta
    CHECK(bound_general(2).value == Rational(2));

    CHECK(bound_triangle_free(2) == Rational(2));
    CHECK(bound_triangle_free(0) == Rational(0));
    CHECK(bound_triangle_free(3) == Rational(9, 2));

    CHECK(bound_clique_free(2, 2) == Rational(3, 2));
    CHECK(bound_clique_free(4, 3) == Rational(16, 3));
    CHECK_THROWS_AS(bound_clique_free(2, 1), std::invalid_argument);

    auto env = turan_envelope(12, 3);
    CHECK(env.lower == Rational(135, 8));
    CHECK(env.upper == Rational(243, 8));
    CHECK(env.lower <= env.upper);
    CHECK_THROWS_AS(turan_envelope(12, 1), std::invalid_argument);
}

TEST_CASE("corollary chain and epsilon identity") {
    for (int delta = 0; delta <= 20; ++delta) {
        // the general corollary is the integer-rounded strengthening of eq-main at lambda=1
        CHECK(bound_general(delta).value >= bound_eq_main(delta, 1));
        CHECK(Rational(bound_general(delta).integer_threshold) > bound_eq_main(delta, 1));
        for (int lnum = 1; lnum <= 8; ++lnum) {
            for (int lden = 1; lden <= lnum; ++lden) {
                Rational lambda(lnum, lden);
                Rational eps = eq_main_epsilon(delta, lambda);
                CHECK(eps >= 0);
                CHECK(eps < 1);
                // evaluating the prefix bound at i = floor((delta*lambda+1)/2)
                // reproduces (delta*lambda+1)^2/(4 lambda) - eps^2/lambda
                Rational i = (Rational(delta) * lambda + 1) / 2 - eps;
                Rational prefix = i * (Rational(delta) - (i - 1) / lambda);
                Rational closed =
                    (Rational(delta) * lambda + 1) * (Rational(delta) * lambda + 1) /
                        (4 * lambda) -
                    eps * eps / lambda;
                CHECK(prefix == closed);
                CHECK(closed >= bound_eq_main(delta, lambda));
            }
        }
    }
}

TEST_CASE("turan envelope gap is linear in n") {
    for (int k = 2; k <= 5; ++k) {
        for (int n = 1; n <= 20; ++n) {
            auto env = turan_envelope(n, k);
            CHECK(env.upper - env.lower == Rational(n) + Rational(k, k - 1));
        }
    }
}

TEST_CASE("natural ordering width within the envelope upper bound") {
    for (int n = 1; n <= 20; ++n)
        for (int k = 2; k <= 5; ++k) {
            auto nat = turan_natural_ordering(n, k);
            CHECK(Rational(nat.ordering.width()) <= turan_envelope(n, k).upper);
        }
}

TEST_CASE("bounds hold with exact cutwidth on small random graphs") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(n, 0.5, rng);
        int cw = exact_cutwidth_dp(g).value;
        int delta = core_decomposition(g).degeneracy;
        CHECK(Rational(cw) >= bound_general(delta).value);
        CHECK(Rational(cw) > bound_eq_main(delta, 1)); // guard: 0 <= delta-1 unless delta=0
        if (is_triangle_free(g)) CHECK(Rational(cw) >= bound_triangle_free(delta));
        int core_size = static_cast<int>(k_core(g, delta).vertices.size());
        for (int num = 0; num <= n; ++num) {
            Rational rho(num, n);
            auto lam = max_uniform_lambda(g, rho);
            if (!lam) continue;
            SparsityParams params(rho, *lam);
            // the eq-main bounds only apply when the delta-core reaches the
            // evaluation prefix
            if (num <= core_size)
                CHECK(Rational(cw) >= bound_eq_main2(n, delta, params));
            if (guard_eq_main(n, delta, params) &&
                eq_main_eval_index(delta, *lam) <= core_size)
                CHECK(Rational(cw) > bound_eq_main(delta, *lam));
        }
    }
}
