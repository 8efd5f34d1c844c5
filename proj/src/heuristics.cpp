#include "wdom/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wdom/bounds.hpp"

namespace wdom {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::t3: return "t3";
        case Variant::t5: return "t5";
        case Variant::t6: return "t6";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    if (name == "t3") return Variant::t3;
    if (name == "t5") return Variant::t5;
    if (name == "t6") return Variant::t6;
    throw std::invalid_argument("unknown variant '" + name + "'");
}

namespace {

// Shared by probabilities() and run(); `d` is the minimum degree to plug
// into the theorem formulas (run() substitutes the minimum positive degree
// when isolated vertices are present).
ProbabilityVector probabilities_for_min_degree(const WeightedGraph& g, Variant variant,
                                               bool clamp, int d) {
    if (!(g.min_weight() > 0))
        throw std::invalid_argument("heuristic probabilities require positive weights");

    ProbabilityVector result;
    result.values.resize(g.vertex_count());
    bool conditions_ok = true;

    switch (variant) {
        case Variant::t3: {
            double p = 1.0 - 1.0 / nth_root(d + 1.0, d);
            std::fill(result.values.begin(), result.values.end(), p);
            break;
        }
        case Variant::t5: {
            double k = g.max_weight() / g.average_weight();
            double p = 1.0 - nth_root(k / (d + 1.0), d);
            conditions_ok = leq_with_slack(k, d + 1.0) &&
                            leq_with_slack(p, g.min_weight() / g.max_weight());
            for (int v = 0; v < g.vertex_count(); ++v)
                result.values[v] = p * g.max_weight() / g.weight(v);
            break;
        }
        case Variant::t6: {
            double z = g.max_weight() / g.min_weight();
            double q = 1.0 - nth_root(z / (d + 1.0), d);
            conditions_ok = leq_with_slack(z, d + 1.0);
            for (int v = 0; v < g.vertex_count(); ++v)
                result.values[v] = q * (1.0 + (g.max_weight() - g.weight(v)) / g.min_weight());
            break;
        }
    }

    if (!conditions_ok) {
        if (!clamp)
            throw std::invalid_argument("theorem conditions fail for variant " +
                                        variant_name(variant) + " and clamping is disabled");
        result.clamped = true;
    }
    // Clamp unconditionally: at exact condition boundaries rounding can push
    // entries an ulp outside [0,1]; the warning flag stays tied to genuine
    // condition failures.
    for (double& p : result.values) p = std::clamp(p, 0.0, 1.0);
    return result;
}

}  // namespace

ProbabilityVector probabilities(const WeightedGraph& g, Variant variant, bool clamp) {
    if (g.min_degree() < 1)
        throw std::invalid_argument("heuristic probabilities require minimum degree >= 1");
    return probabilities_for_min_degree(g, variant, clamp, g.min_degree());
}

VertexSet sample_initial(const WeightedGraph& g, std::span<const double> probs, Rng& rng) {
    if (static_cast<int>(probs.size()) != g.vertex_count())
        throw std::invalid_argument("probability vector length does not match graph");
    VertexSet a(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        double p = probs[v];
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("vertex probability outside [0,1]");
        if (std::bernoulli_distribution(p)(rng)) a.insert(v);
    }
    return a;
}

VertexSet greedy_extend(const WeightedGraph& g, const VertexSet& a) {
    const int n = g.vertex_count();
    if (a.universe_size() != n)
        throw std::invalid_argument("vertex set universe does not match graph");

    VertexSet d = a;
    std::vector<std::uint8_t> dominated(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!d.contains(v)) continue;
        dominated[v] = 1;
        for (int u : g.neighbors(v)) dominated[u] = 1;
    }
    int undominated = 0;
    // coverage[v] = |N[v] ∩ U|, kept exact as U shrinks.
    std::vector<int> coverage(n, 0);
    for (int v = 0; v < n; ++v) {
        if (dominated[v]) continue;
        ++undominated;
        ++coverage[v];
        for (int u : g.neighbors(v)) ++coverage[u];
    }

    while (undominated > 0) {
        int best = 0;
        for (int v = 1; v < n; ++v)
            if (coverage[v] > coverage[best]) best = v;
        d.insert(best);
        if (!dominated[best]) {
            dominated[best] = 1;
            --undominated;
            --coverage[best];
            for (int u : g.neighbors(best)) --coverage[u];
        }
        for (int w : g.neighbors(best)) {
            if (dominated[w]) continue;
            dominated[w] = 1;
            --undominated;
            --coverage[w];
            for (int u : g.neighbors(w)) --coverage[u];
        }
    }
    return d;
}

VertexSet minimal_subset(const WeightedGraph& g, const VertexSet& d) {
    const int n = g.vertex_count();
    if (!is_dominating(g, d))
        throw std::invalid_argument("minimal_subset requires a dominating input set");

    // Removal order: ascending |N(v) - D| against the input set, ties by id.
    std::vector<std::pair<int, int>> order;
    order.reserve(d.size());
    for (int v = 0; v < n; ++v) {
        if (!d.contains(v)) continue;
        int outside = 0;
        for (int u : g.neighbors(v))
            if (!d.contains(u)) ++outside;
        order.emplace_back(outside, v);
    }
    std::sort(order.begin(), order.end());

    // cover[w] = |N[w] ∩ D'|; v is removable iff every vertex it covers
    // stays covered without it.
    std::vector<int> cover(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!d.contains(v)) continue;
        ++cover[v];
        for (int u : g.neighbors(v)) ++cover[u];
    }

    VertexSet result = d;
    for (auto [key, v] : order) {
        (void)key;
        bool removable = cover[v] >= 2;
        if (removable) {
            for (int u : g.neighbors(v)) {
                if (cover[u] < 2) {
                    removable = false;
                    break;
                }
            }
        }
        if (!removable) continue;
        result.erase(v);
        --cover[v];
        for (int u : g.neighbors(v)) --cover[u];
    }
    return result;
}

VertexSet run_iteration(const WeightedGraph& g, std::span<const double> probs,
                        std::uint64_t iteration_seed) {
    Rng rng = make_rng(iteration_seed);
    VertexSet a = sample_initial(g, probs, rng);
    return minimal_subset(g, greedy_extend(g, a));
}

HeuristicRun run(const WeightedGraph& g, const HeuristicConfig& cfg) {
    if (cfg.iterations == 0 && !cfg.time_budget_s)
        throw std::invalid_argument("heuristic needs an iteration count or a time budget");

    ProbabilityVector probs;
    if (g.min_degree() >= 1) {
        probs = probabilities(g, cfg.variant, cfg.clamp_probabilities);
    } else {
        // Isolated vertices can only dominate themselves; force them into A
        // and evaluate the formulas with the smallest positive degree.
        int d = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) >= 1 && (d == 0 || g.degree(v) < d)) d = g.degree(v);
        if (d == 0) {
            probs.values.assign(g.vertex_count(), 1.0);
        } else {
            probs = probabilities_for_min_degree(g, cfg.variant, cfg.clamp_probabilities, d);
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) == 0) probs.values[v] = 1.0;
        }
    }

    HeuristicRun result;
    result.probabilities_clamped = probs.clamped;
    result.best_by_size.size = std::numeric_limits<int>::max();
    result.best_by_size.weight = std::numeric_limits<double>::infinity();
    result.best_by_weight.size = std::numeric_limits<int>::max();
    result.best_by_weight.weight = std::numeric_limits<double>::infinity();

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    for (std::uint64_t iter = 0;; ++iter) {
        if (cfg.iterations > 0 && iter >= cfg.iterations) break;
        if (cfg.time_budget_s && iter > 0 && elapsed() >= *cfg.time_budget_s) break;

        VertexSet candidate = run_iteration(g, probs.values, substream_seed(cfg.seed, iter));
        const int size = static_cast<int>(candidate.size());
        const double weight = set_weight(g, candidate);
        const double now = elapsed();

        bool improved = false;
        if (std::pair(size, weight) <
            std::pair(result.best_by_size.size, result.best_by_size.weight)) {
            result.best_by_size = {candidate, size, weight, now};
            improved = true;
        }
        if (std::pair(weight, size) <
            std::pair(result.best_by_weight.weight, result.best_by_weight.size)) {
            result.best_by_weight = {std::move(candidate), size, weight, now};
            improved = true;
        }
        if (improved)
            result.trace.push_back({now, result.best_by_size.size, result.best_by_weight.weight});
        result.iterations_done = iter + 1;
    }
    return result;
}

}  // namespace wdom
