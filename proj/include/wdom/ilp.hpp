#pragma once

#include <string>
#include <vector>

#include "wdom/graph.hpp"

namespace wdom {

// Objective coefficient choices for the covering model:
//   size          x_i cost 1        (domination number)
//   weight        x_i cost w_i      (minimum weight dominating set)
//   two_objective x_i cost 1+w_i/wG (size first, weight second, one model)
//   reduced_weight x_i cost w_i of an already reduced graph; numerically the
//                 same row as `weight`, kept separate because the provenance
//                 differs.
enum class IlpObjective { size, weight, two_objective, reduced_weight };

std::string ilp_objective_name(IlpObjective o);
IlpObjective parse_ilp_objective(const std::string& name);

// Covering model: one binary (or [0,1] when relaxed) variable per vertex and
// one constraint per vertex requiring a chosen vertex in its closed
// neighborhood.
struct IlpModel {
    IlpObjective objective = IlpObjective::size;
    bool relaxed = false;
    int n = 0;
    std::vector<double> coefficients;     // objective coefficient per variable
    std::vector<std::vector<int>> rows;   // sorted closed neighborhood per constraint
};

IlpModel build_model(const WeightedGraph& g, IlpObjective objective, bool relaxed);

// Deterministic LP-format text. Sections appear as Minimize, Subject To,
// Bounds (relaxed) or Binaries (integer), End; terms are emitted in
// ascending variable order and coefficients print as the shortest decimal
// that round-trips.
std::string write_lp(const IlpModel& model);

// Objective value of a 0/1 (or fractional) vector, accumulated in ascending
// variable order to match set_weight exactly.
double objective_value(const IlpModel& model, std::span<const double> x);

}  // namespace wdom
