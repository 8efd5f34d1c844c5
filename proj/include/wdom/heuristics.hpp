#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wdom/graph.hpp"
#include "wdom/rng.hpp"

namespace wdom {

enum class Variant { t3, t5, t6 };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

struct ProbabilityVector {
    std::vector<double> values;
    // Set when a theorem condition failed and the entries were clamped
    // into [0,1] instead of rejecting the instance.
    bool clamped = false;
};

// Per-vertex selection probabilities for the given variant:
//   t3: constant        1 - 1/(delta+1)^(1/delta)
//   t5: (1 - (w_max/((delta+1) w_ave))^(1/delta)) * w_max / w_i
//   t6: (1 - (w_max/((delta+1) w_min))^(1/delta)) * (1 + (w_max - w_i)/w_min)
// Requires min degree >= 1 and positive weights. If the variant's weight
// conditions fail, entries are clamped when `clamp` is set, otherwise the
// failure is an error.
ProbabilityVector probabilities(const WeightedGraph& g, Variant variant, bool clamp = true);

// Independent Bernoulli draw per vertex.
VertexSet sample_initial(const WeightedGraph& g, std::span<const double> probs, Rng& rng);

// Extends `a` to a dominating set: repeatedly adds the vertex whose closed
// neighborhood covers the most currently undominated vertices (ties to the
// smallest id). Vertex weights are not consulted.
VertexSet greedy_extend(const WeightedGraph& g, const VertexSet& a);

// Minimal-by-inclusion dominating subset of `d`: vertices are tried in
// ascending |N(v) - D| (keys computed once against the input set, ties by
// id) and dropped whenever the rest still dominates.
VertexSet minimal_subset(const WeightedGraph& g, const VertexSet& d);

struct HeuristicConfig {
    Variant variant = Variant::t3;
    // 0 means no iteration cap (valid only with a time budget).
    std::uint64_t iterations = 20;
    std::optional<double> time_budget_s;
    std::uint64_t seed = 0;
    bool clamp_probabilities = true;
};

struct BestSolution {
    VertexSet set;
    int size = 0;
    double weight = 0;
    double time_found_s = 0;
};

struct TracePoint {
    double elapsed_s = 0;
    int best_size = 0;
    double best_weight = 0;
};

struct HeuristicRun {
    BestSolution best_by_size;
    BestSolution best_by_weight;
    std::vector<TracePoint> trace;
    std::uint64_t iterations_done = 0;
    bool probabilities_clamped = false;
};

// One sample -> greedy extension -> minimal pruning pass. Pure given the
// seed, so iterations can be distributed; the runner below assigns substream
// `i` of cfg.seed to iteration i.
VertexSet run_iteration(const WeightedGraph& g, std::span<const double> probs,
                        std::uint64_t iteration_seed);

HeuristicRun run(const WeightedGraph& g, const HeuristicConfig& cfg);

}  // namespace wdom
