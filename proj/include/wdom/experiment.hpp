#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdom/bounds.hpp"
#include "wdom/generators.hpp"
#include "wdom/heuristics.hpp"

namespace wdom {

enum class SolverKind { t3, t5, t6, exact_size, exact_weight, exact_lex };

std::string solver_name(SolverKind s);
SolverKind parse_solver(const std::string& name);

struct ExperimentSpec {
    std::vector<GenSpec> corpus;
    std::vector<SolverKind> solvers = {SolverKind::t3, SolverKind::t5, SolverKind::t6};
    std::uint64_t iterations = 20;
    int repeats = 10;
    std::optional<double> time_budget_s;
    std::uint64_t master_seed = 0;
    // When false the time_s column is reported as 0 so that repeated runs
    // produce byte-identical output; everything else is already a pure
    // function of master_seed.
    bool with_timing = true;
};

struct ResultRow {
    std::string config;
    int config_index = 0;
    int instance = 0;
    std::uint64_t instance_seed = 0;
    int n = 0;
    std::int64_t m = 0;
    int delta = 0;
    SolverKind solver = SolverKind::t3;

    bool failed = false;
    std::string error;

    int best_size = 0;
    double best_size_weight = 0;
    double best_weight = 0;
    int best_weight_size = 0;
    double time_s = 0;
    std::uint64_t iterations_done = 0;
    bool probabilities_clamped = false;
    std::vector<int> witness_by_size;    // 1-based ids
    std::vector<int> witness_by_weight;  // 1-based ids
};

struct InstanceBounds {
    double t1 = 0;
    double t2 = 0;
    BoundReport t3;
    double c4 = 0;
    BoundReport t5;
    BoundReport t6;
    bool computed = false;  // false when delta = 0 or weights not positive
};

struct InstanceRecord {
    std::string config;
    int config_index = 0;
    int instance = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::int64_t m = 0;
    int delta = 0;
    InstanceBounds bounds;
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<InstanceRecord> instances;
    std::vector<ResultRow> rows;
};

// Generates repeats instances per corpus entry (instance seeds derived from
// master_seed, so GenSpec.seed is ignored here) and runs every requested
// solver on each. Solver failures are recorded on the row and the run
// continues.
ExperimentResult run_experiment(const ExperimentSpec& spec);

// Per-instance rows followed, per config, by one "mean" row per solver
// aggregating the successful repeats. Header:
// config,instance,n,m,delta,variant,best_size,best_size_weight,best_weight,best_weight_size,time_s
std::string experiment_csv(const ExperimentResult& result);

// Full record including witnesses and bound reports, for re-verification.
std::string experiment_json(const ExperimentResult& result);

// Trace rows `elapsed_s,best_size,best_weight`; when budget_s is given a
// closing row at the budget repeats the final values.
std::string trace_csv(const HeuristicRun& run, std::optional<double> budget_s = std::nullopt);

InstanceBounds compute_instance_bounds(const WeightedGraph& g);

}  // namespace wdom
