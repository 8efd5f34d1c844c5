#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wdom/graph.hpp"
#include "wdom/rng.hpp"

namespace wdom {

// Description of one random instance family. Weights are drawn uniformly
// from the integer interval [weight_lo, weight_hi]; [1,1] means unit weights.
struct GenSpec {
    enum class Kind { er, sun };

    Kind kind = Kind::er;
    int n = 0;             // er only
    double p = 0.0;        // er only
    int min_degree = 0;    // sun only
    int weight_lo = 1;
    int weight_hi = 1;
    std::uint64_t seed = 0;

    std::string label() const;
};

GenSpec parse_gen_spec(const std::string& text);

// Erdos-Renyi G(n,p) with unit weights: every unordered pair is an edge
// independently with probability p.
WeightedGraph gen_er(int n, double p, Rng& rng);

// Sun graph: clique on floor(delta*ln(delta)) vertices (ids 0..c-1) plus an
// independent set of delta vertices, each adjacent to exactly delta distinct
// clique vertices chosen uniformly. Unit weights. Requires delta >= 3.
WeightedGraph gen_sun(int min_degree, Rng& rng);

int sun_clique_size(int min_degree);

// New graph with each vertex weight drawn independently and uniformly from
// the integers {lo, ..., hi}.
WeightedGraph assign_weights(const WeightedGraph& g, int lo, int hi, Rng& rng);

// Drives the generators from a GenSpec, using substreams of spec.seed for
// structure and weights so the result is a pure function of the spec.
WeightedGraph generate(const GenSpec& spec);

}  // namespace wdom
