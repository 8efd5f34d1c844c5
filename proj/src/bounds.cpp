#include "wdom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wdom {

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::t1: return "T1";
        case Theorem::t2: return "T2";
        case Theorem::t3: return "T3";
        case Theorem::c4: return "C4";
        case Theorem::t5: return "T5";
        case Theorem::t6: return "T6";
    }
    return "?";
}

double nth_root(double x, int d) { return std::exp(std::log(x) / d); }

bool leq_with_slack(double a, double b) {
    return a <= b + 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

namespace {

void require_weighted_preconditions(const WeightedGraph& g) {
    if (g.min_degree() < 1)
        throw std::invalid_argument("bound requires minimum degree >= 1");
    if (!(g.min_weight() > 0))
        throw std::invalid_argument("bound requires positive vertex weights");
}

// sum_i w_i (1-p)^(d_i+1) for constant p.
double uncovered_term(const WeightedGraph& g, double p) {
    double total = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        total += g.weight(v) * std::pow(1.0 - p, g.degree(v) + 1);
    return total;
}

}  // namespace

double bound_t1(int n, int min_degree) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (min_degree < 0) throw std::invalid_argument("min degree must be >= 0");
    return (std::log(min_degree + 1.0) + 1.0) / (min_degree + 1.0) * n;
}

double bound_t2(int n, int min_degree) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (min_degree < 1) throw std::invalid_argument("bound requires minimum degree >= 1");
    const int d = min_degree;
    return (1.0 - d / std::pow(1.0 + d, 1.0 + 1.0 / d)) * n;
}

BoundReport bound_t3(const WeightedGraph& g) {
    require_weighted_preconditions(g);
    const int d = g.min_degree();
    BoundReport report;
    report.theorem = Theorem::t3;
    report.applicable = true;
    report.p = 1.0 - 1.0 / nth_root(d + 1.0, d);
    report.final_bound = (1.0 - d / std::pow(d + 1.0, 1.0 + 1.0 / d)) * g.total_weight();
    return report;
}

double bound_c4(const WeightedGraph& g) {
    require_weighted_preconditions(g);
    const int d = g.min_degree();
    return (std::log(d + 1.0) + 1.0) / (d + 1.0) * g.total_weight();
}

BoundReport bound_t5(const WeightedGraph& g) {
    require_weighted_preconditions(g);
    const int d = g.min_degree();
    BoundReport report;
    report.theorem = Theorem::t5;
    const double k = g.max_weight() / g.average_weight();
    const double p = 1.0 - nth_root(k / (d + 1.0), d);
    report.k = k;
    report.p = p;

    if (!leq_with_slack(k, d + 1.0))
        report.violated_conditions.push_back("k = w_max/w_ave > delta+1");
    if (!leq_with_slack(p, g.min_weight() / g.max_weight()))
        report.violated_conditions.push_back("p > w_min/w_max");
    report.applicable = report.violated_conditions.empty();
    if (!report.applicable) return report;

    report.intermediate_bound =
        g.vertex_count() * p * g.max_weight() + uncovered_term(g, p);
    report.final_bound =
        (1.0 - d * nth_root(k, d) / std::pow(d + 1.0, 1.0 + 1.0 / d)) * k * g.total_weight();
    return report;
}

BoundReport bound_t6(const WeightedGraph& g) {
    require_weighted_preconditions(g);
    const int d = g.min_degree();
    BoundReport report;
    report.theorem = Theorem::t6;
    const double z = g.max_weight() / g.min_weight();
    report.z = z;
    report.alpha = g.min_weight() + g.max_weight();

    if (!leq_with_slack(z, d + 1.0)) {
        report.violated_conditions.push_back("z = w_max/w_min > delta+1");
        report.applicable = false;
        return report;
    }
    report.applicable = true;
    // z <= delta+1 can hold only up to rounding; clamp so q stays >= 0.
    const double q = std::max(0.0, 1.0 - nth_root(z / (d + 1.0), d));
    report.q = q;
    report.intermediate_bound = q * z * g.total_weight() + uncovered_term(g, q);
    report.final_bound =
        (1.0 - d * nth_root(z, d) / std::pow(d + 1.0, 1.0 + 1.0 / d)) * z * g.total_weight();
    return report;
}

double expected_weight(const WeightedGraph& g, std::span<const double> probs) {
    const int n = g.vertex_count();
    if (static_cast<int>(probs.size()) != n)
        throw std::invalid_argument("probability vector length does not match graph");
    for (double p : probs)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("vertex probability outside [0,1]");

    double total = 0;
    for (int v = 0; v < n; ++v) {
        double miss = 1.0 - probs[v];
        for (int u : g.neighbors(v)) miss *= 1.0 - probs[u];
        total += g.weight(v) * (probs[v] + miss);
    }
    return total;
}

}  // namespace wdom
