#ifndef CWTK_CUTWIDTH_HPP
#define CWTK_CUTWIDTH_HPP

#include "cwtk/graph.hpp"
#include "cwtk/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cwtk {

// A vertex permutation together with its cut profile: profile[i-1] is the
// number of edges with exactly one endpoint among the first i vertices.
struct LinearOrdering {
    std::vector<int> order;
    std::vector<int> profile;

    int width() const; // max of profile, 0 when empty
};

enum class CutwidthMethod { ExactDp, BruteForce, Heuristic };

const char* method_name(CutwidthMethod m);

struct CutwidthResult {
    int value = 0;
    LinearOrdering witness;
    CutwidthMethod method = CutwidthMethod::ExactDp;
};

// Evaluates the cut profile of `order`; throws on non-permutations.
LinearOrdering cut_profile(const Graph& g, std::vector<int> order);

// Exact cutwidth by dynamic programming over vertex subsets:
//   dp[S] = max(cut(S), min_{v in S} dp[S \ {v}]).
// Throws CapacityError when n exceeds max_n.
CutwidthResult exact_cutwidth_dp(const Graph& g, int max_n = 22);

// Exhaustive permutation scan, n <= 9. Witness is the lexicographically
// smallest optimal ordering.
CutwidthResult exact_cutwidth_bruteforce(const Graph& g);

struct HeuristicOptions {
    int iterations = 20000;
    std::uint64_t seed = 1;
    double initial_temperature = 2.0;
    double cooling = 0.999;
    double relocate_fraction = 0.5; // remaining moves are adjacent swaps
};

// Simulated annealing over orderings; always a valid upper bound, value equals
// the witness profile maximum, deterministic per seed.
CutwidthResult heuristic_cutwidth(const Graph& g, const HeuristicOptions& opts = {});

struct TuranOrdering {
    Graph graph; // generate_turan_modular(n, k)
    LinearOrdering ordering;
};

// The modular Turan graph with its natural increasing-integer ordering.
TuranOrdering turan_natural_ordering(int n, int k);

// c(i) = i*((n-i)(k-1)/k + 1): upper bound on the number of edges crossing
// position i of the natural ordering; 1 <= i <= n, k >= 2.
Rational turan_crossing_bound(int n, int k, int i);

Rational turan_crossing_bound_max(int n, int k);

} // namespace cwtk

#endif
