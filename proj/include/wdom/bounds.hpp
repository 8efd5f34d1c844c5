#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wdom/graph.hpp"

namespace wdom {

enum class Theorem { t1, t2, t3, c4, t5, t6 };

std::string theorem_name(Theorem t);

// Result of evaluating one of the closed-form upper bounds on the minimum
// dominating-set weight. `applicable` is a verdict: when the theorem's
// weight conditions fail the report lists them and leaves the bound values
// unset instead of clamping anything.
struct BoundReport {
    Theorem theorem;
    bool applicable = false;
    std::vector<std::string> violated_conditions;

    std::optional<double> p;      // uniform selection probability (t3, t5)
    std::optional<double> k;      // w_max / w_ave (t5)
    std::optional<double> z;      // w_max / w_min (t6)
    std::optional<double> q;      // t6 selection probability
    std::optional<double> alpha;  // w_min + w_max (t6)

    // Degree-sequence bound (t5/t6 only); never exceeds final_bound.
    std::optional<double> intermediate_bound;
    std::optional<double> final_bound;
};

// Size bounds for the unweighted domination number.
double bound_t1(int n, int min_degree);
double bound_t2(int n, int min_degree);

// Weighted bounds; all require min degree >= 1 and positive weights.
BoundReport bound_t3(const WeightedGraph& g);
double bound_c4(const WeightedGraph& g);
BoundReport bound_t5(const WeightedGraph& g);
BoundReport bound_t6(const WeightedGraph& g);

// Exact E[w(D)] for D = A union B, where A includes vertex i independently
// with probability probs[i] and B is the set of vertices with N[v] disjoint
// from A:  sum_i w_i p_i + sum_i w_i prod_{j in N[i]} (1 - p_j).
double expected_weight(const WeightedGraph& g, std::span<const double> probs);

// x^(1/d) evaluated as exp(ln(x)/d); exact at x == 1.
double nth_root(double x, int d);

// a <= b with a small relative slack so exact condition boundaries
// (e.g. z == delta+1) are not rejected by rounding.
bool leq_with_slack(double a, double b);

}  // namespace wdom
