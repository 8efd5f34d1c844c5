#include "wdom/exact.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wdom {

std::string objective_name(Objective o) {
    switch (o) {
        case Objective::size: return "size";
        case Objective::weight: return "weight";
        case Objective::lex: return "lex";
    }
    return "?";
}

Objective parse_objective(const std::string& name) {
    if (name == "size") return Objective::size;
    if (name == "weight") return Objective::weight;
    if (name == "lex") return Objective::lex;
    throw std::invalid_argument("unknown objective '" + name + "'");
}

namespace {

using Mask = std::uint64_t;

// Set-cover style branch and bound over bitmask states. Branches on the
// lowest-id undominated vertex: one child per non-excluded member of its
// closed neighborhood, with earlier members excluded in later children.
class Search {
public:
    Search(const WeightedGraph& g, bool weighted)
        : g_(g), n_(g.vertex_count()), weighted_(weighted) {
        full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        closed_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            Mask m = Mask{1} << v;
            for (int u : g.neighbors(v)) m |= Mask{1} << u;
            closed_[v] = m;
        }
        cover_capacity_ = g.max_degree() + 1;
        min_weight_ = g.min_weight();
    }

    // Minimizes size (weighted_ == false) or weight; size_cap < 0 disables
    // the cardinality constraint used by the lex second phase.
    void solve(int size_cap) {
        size_cap_ = size_cap;
        best_cost_ = std::numeric_limits<double>::infinity();
        best_mask_ = 0;
        descend(0, 0, 0, 0.0);
    }

    double best_cost() const { return best_cost_; }
    Mask best_mask() const { return best_mask_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    double admissible_remaining(Mask dominated) const {
        int undominated = std::popcount(full_ & ~dominated);
        if (undominated == 0) return 0.0;
        int picks = (undominated + cover_capacity_ - 1) / cover_capacity_;
        return weighted_ ? picks * min_weight_ : picks;
    }

    void descend(Mask chosen, Mask dominated, Mask excluded, double cost) {
        ++nodes_;
        if (dominated == full_) {
            if (cost < best_cost_) {
                best_cost_ = cost;
                best_mask_ = chosen;
            }
            return;
        }
        if (cost + admissible_remaining(dominated) >= best_cost_) return;
        if (size_cap_ >= 0) {
            int undominated = std::popcount(full_ & ~dominated);
            int min_picks = (undominated + cover_capacity_ - 1) / cover_capacity_;
            if (std::popcount(chosen) + min_picks > size_cap_) return;
        }

        const int u = std::countr_one(dominated | ~full_);
        Mask candidates = closed_[u] & ~excluded;
        while (candidates) {
            const int v = std::countr_zero(candidates);
            const Mask bit = Mask{1} << v;
            candidates &= candidates - 1;
            descend(chosen | bit, dominated | closed_[v], excluded,
                    cost + (weighted_ ? g_.weight(v) : 1.0));
            excluded |= bit;  // later children assume v is not chosen
        }
    }

    const WeightedGraph& g_;
    int n_;
    bool weighted_;
    Mask full_ = 0;
    std::vector<Mask> closed_;
    int cover_capacity_ = 1;
    double min_weight_ = 0;
    int size_cap_ = -1;
    double best_cost_ = 0;
    Mask best_mask_ = 0;
    std::uint64_t nodes_ = 0;
};

VertexSet mask_to_set(Mask m, int n) {
    VertexSet s(n);
    while (m) {
        s.insert(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

}  // namespace

ExactResult exact_solve(const WeightedGraph& g, Objective objective, ExactLimits limits) {
    const int n = g.vertex_count();
    if (n > limits.max_vertices || n > 64)
        throw std::invalid_argument("instance has " + std::to_string(n) +
                                    " vertices, exact solver limit is " +
                                    std::to_string(std::min(limits.max_vertices, 64)));
    if (objective != Objective::size && !(g.min_weight() > 0))
        throw std::invalid_argument("weight objectives require positive weights");

    ExactResult result;
    result.objective = objective;

    if (objective == Objective::size || objective == Objective::weight) {
        Search search(g, objective == Objective::weight);
        search.solve(-1);
        result.optimum_value = search.best_cost();
        result.witness = mask_to_set(search.best_mask(), n);
        result.nodes_explored = search.nodes();
        return result;
    }

    // lex: minimum size first, then minimum weight at that size.
    Search size_phase(g, false);
    size_phase.solve(-1);
    const int gamma = static_cast<int>(size_phase.best_cost());
    Search weight_phase(g, true);
    weight_phase.solve(gamma);
    result.optimum_value = weight_phase.best_cost();
    result.witness = mask_to_set(weight_phase.best_mask(), n);
    result.nodes_explored = size_phase.nodes() + weight_phase.nodes();
    return result;
}

WeightedGraph reduce_two_objective(const WeightedGraph& g) {
    if (!(g.min_weight() > 0))
        throw std::invalid_argument("two-objective reduction requires positive weights");
    std::vector<double> reduced(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        reduced[v] = 1.0 + g.weight(v) / g.total_weight();
    return g.with_weights(std::move(reduced));
}

RelaxationBounds relaxation_bounds(const WeightedGraph& g, std::span<const double> x,
                                   IlpObjective objective) {
    const int n = g.vertex_count();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("fractional solution length does not match graph");
    for (double xi : x)
        if (!(xi >= 0.0 && xi <= 1.0))
            throw std::invalid_argument("fractional value outside [0,1]");
    // Covering feasibility, with a snap tolerance for solver output noise.
    constexpr double kSnap = 1e-9;
    for (int j = 0; j < n; ++j) {
        double row = x[j];
        for (int u : g.neighbors(j)) row += x[u];
        if (row < 1.0 - kSnap)
            throw std::invalid_argument("fractional solution infeasible at vertex " +
                                        std::to_string(j + 1));
    }

    IlpModel model = build_model(g, objective, true);
    RelaxationBounds bounds;
    bounds.fractional_value = objective_value(model, x);
    for (double xi : x) bounds.ceil_sum += static_cast<std::int64_t>(std::ceil(xi - kSnap));
    bounds.lb_domination_number = std::floor(bounds.fractional_value + kSnap);
    bounds.lb_reduced_weight = bounds.fractional_value;
    bounds.lb_min_size_weight =
        g.total_weight() * (bounds.fractional_value - static_cast<double>(bounds.ceil_sum));
    return bounds;
}

std::pair<WeightedGraph, double> transform_max_to_min(const WeightedGraph& g) {
    if (g.min_weight() < 0)
        throw std::invalid_argument("transform requires non-negative weights");
    if (!(g.max_weight() > 0))
        throw std::invalid_argument("transform requires at least one positive weight");
    const double alpha = 1.0 / g.max_weight();
    std::vector<double> psi(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) psi[v] = 1.0 - alpha * g.weight(v);
    return {g.with_weights(std::move(psi)), alpha};
}

}  // namespace wdom
