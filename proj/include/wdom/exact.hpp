#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "wdom/graph.hpp"
#include "wdom/ilp.hpp"

namespace wdom {

enum class Objective { size, weight, lex };

std::string objective_name(Objective o);
Objective parse_objective(const std::string& name);

struct ExactLimits {
    int max_vertices = 32;
};

// Proven optimum from the branch-and-bound search. For lex the witness has
// the minimum size and, among those, the minimum weight; optimum_value is
// that weight.
struct ExactResult {
    Objective objective = Objective::size;
    double optimum_value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    bool proven = true;
};

ExactResult exact_solve(const WeightedGraph& g, Objective objective, ExactLimits limits = {});

// Same topology with weights w'_i = 1 + w_i / w_G, so that a minimum-weight
// dominating set under w' is a minimum-size set of minimum original weight.
WeightedGraph reduce_two_objective(const WeightedGraph& g);

// Lower bounds derived from an externally solved LP relaxation. Valid only
// when x was relaxation-optimal for the matching objective; this routine
// validates feasibility, not optimality.
struct RelaxationBounds {
    double fractional_value = 0;     // z' = objective value of x
    std::int64_t ceil_sum = 0;       // U = sum of ceil(x_i)
    double lb_domination_number = 0; // floor(z')
    double lb_reduced_weight = 0;    // z'
    double lb_min_size_weight = 0;   // w_G * (z' - U)
};

RelaxationBounds relaxation_bounds(const WeightedGraph& g, std::span<const double> x,
                                   IlpObjective objective);

// Maximization-to-minimization weight transform: psi_i = 1 - w_i / w_max.
// Returns the reweighted graph and alpha = 1 / w_max. Requires non-negative
// weights with w_max > 0.
std::pair<WeightedGraph, double> transform_max_to_min(const WeightedGraph& g);

}  // namespace wdom
