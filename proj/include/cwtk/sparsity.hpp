#ifndef CWTK_SPARSITY_HPP
#define CWTK_SPARSITY_HPP

#include "cwtk/graph.hpp"
#include "cwtk/rational.hpp"

#include <optional>
#include <vector>

namespace cwtk {

struct SparsityParams {
    Rational rho;    // in [0,1]
    Rational lambda; // >= 1

    SparsityParams(Rational rho, Rational lambda);
};

// m <= n(n-1)/(2*lambda), compared exactly.
bool is_lambda_sparse(const Graph& g, const Rational& lambda);

struct UniformSparsityResult {
    bool sparse = true;
    std::vector<int> violating_subset; // empty when sparse
};

// Every induced subgraph on >= rho*n vertices is lambda-sparse. Induced
// subgraphs are the worst case for a fixed vertex set, so checking them
// suffices. Exhaustive over subsets; n <= max_n.
UniformSparsityResult is_uniformly_sparse(const Graph& g, const SparsityParams& params,
                                          int max_n = 18);

// Largest lambda such that g is (rho, lambda)-uniformly sparse:
// min over subsets S with |S| >= ceil(rho*n) and m_S >= 1 of |S|(|S|-1)/(2 m_S).
// nullopt means +infinity (all qualifying subsets edgeless).
std::optional<Rational> max_uniform_lambda(const Graph& g, const Rational& rho,
                                           int max_n = 18);

// table[t] = max lambda over subsets of size >= t, for t = 0..n, from one
// subset sweep. max_uniform_lambda(g, rho) == table[ceil(rho*n)].
std::vector<std::optional<Rational>> max_uniform_lambda_by_min_size(const Graph& g,
                                                                    int max_n = 18);

// Guaranteed sparsity of any K_{k+1}-free graph on s vertices (Turan):
// k(s-1)/((k-1)s); equals 2(s-1)/s for k = 2.
Rational turan_sparsity_lambda(int k, int s);

// ceil(rho n) * (delta - (ceil(rho n) - 1)/lambda); lower bound on cw for
// (rho, lambda)-uniformly sparse graphs. May be <= 0 (vacuous).
Rational bound_eq_main2(int n, int delta, const SparsityParams& params);

// (delta*lambda + 1)^2/(4 lambda) - 1/lambda; strict lower bound on cw when
// guard_eq_main holds and the graph is (rho, lambda)-uniformly sparse.
Rational bound_eq_main(int delta, const Rational& lambda);

// 2 n rho <= delta*lambda - 1
bool guard_eq_main(int n, int delta, const SparsityParams& params);

// floor((delta*lambda + 1)/2): the prefix index at which bound_eq_main
// evaluates the counting inequality. Both eq-main bounds argue about prefixes
// of the delta-core, so they apply only when the evaluation index does not
// exceed the core's vertex count: ceil(rho*n) for bound_eq_main2 and this
// index for bound_eq_main. A small graph padded with isolated vertices can be
// uniformly sparse at large rho while its core is tiny; the bounds fail there
// (e.g. K_2 plus three isolated vertices at rho=4/5, lambda=6).
BigInt eq_main_eval_index(int delta, const Rational& lambda);

// 0 <= epsilon < 1, the fractional part (delta*lambda+1)/2 - floor(...).
Rational eq_main_epsilon(int delta, const Rational& lambda);

struct GeneralBound {
    Rational value;          // delta^2/4 + delta/2
    BigInt integer_threshold; // ceil(value): the operative integer form
};

GeneralBound bound_general(int delta);

// delta^2 / 2 for triangle-free graphs.
Rational bound_triangle_free(int delta);

// k delta^2 / (4(k-1)) - (k-1)/k for K_{k+1}-free graphs, k >= 2.
Rational bound_clique_free(int delta, int k);

struct TuranEnvelope {
    Rational lower;
    Rational upper;
};

// Quadratic lower/upper bounds on cw(Tur(n,k)); gap is n + k/(k-1).
TuranEnvelope turan_envelope(int n, int k);

} // namespace cwtk

#endif
