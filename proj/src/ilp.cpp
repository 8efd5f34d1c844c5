#include "wdom/ilp.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdom {

std::string ilp_objective_name(IlpObjective o) {
    switch (o) {
        case IlpObjective::size: return "size";
        case IlpObjective::weight: return "weight";
        case IlpObjective::two_objective: return "two";
        case IlpObjective::reduced_weight: return "reduced";
    }
    return "?";
}

IlpObjective parse_ilp_objective(const std::string& name) {
    if (name == "size") return IlpObjective::size;
    if (name == "weight") return IlpObjective::weight;
    if (name == "two") return IlpObjective::two_objective;
    if (name == "reduced") return IlpObjective::reduced_weight;
    throw std::invalid_argument("unknown objective '" + name + "'");
}

IlpModel build_model(const WeightedGraph& g, IlpObjective objective, bool relaxed) {
    if (objective != IlpObjective::size && !(g.min_weight() > 0))
        throw std::invalid_argument("weight-bearing objectives require positive weights");

    IlpModel model;
    model.objective = objective;
    model.relaxed = relaxed;
    model.n = g.vertex_count();
    model.coefficients.resize(model.n);
    for (int v = 0; v < model.n; ++v) {
        switch (objective) {
            case IlpObjective::size: model.coefficients[v] = 1.0; break;
            case IlpObjective::weight:
            case IlpObjective::reduced_weight: model.coefficients[v] = g.weight(v); break;
            case IlpObjective::two_objective:
                model.coefficients[v] = 1.0 + g.weight(v) / g.total_weight();
                break;
        }
    }
    model.rows.resize(model.n);
    for (int v = 0; v < model.n; ++v) {
        auto nbrs = g.neighbors(v);
        auto& row = model.rows[v];
        row.reserve(nbrs.size() + 1);
        row.insert(row.end(), nbrs.begin(), nbrs.end());
        row.push_back(v);
        std::sort(row.begin(), row.end());
    }
    return model;
}

std::string write_lp(const IlpModel& model) {
    std::string out;
    out += "Minimize\n obj:";
    for (int v = 0; v < model.n; ++v)
        out += " + " + format_double(model.coefficients[v]) + " x" + std::to_string(v + 1);
    out += "\nSubject To\n";
    for (int j = 0; j < model.n; ++j) {
        out += " dom" + std::to_string(j + 1) + ":";
        for (int v : model.rows[j]) out += " + 1 x" + std::to_string(v + 1);
        out += " >= 1\n";
    }
    if (model.relaxed) {
        out += "Bounds\n";
        for (int v = 0; v < model.n; ++v)
            out += " 0 <= x" + std::to_string(v + 1) + " <= 1\n";
    } else {
        out += "Binaries\n";
        for (int v = 0; v < model.n; ++v)
            out += " x" + std::to_string(v + 1);
        out += "\n";
    }
    out += "End\n";
    return out;
}

double objective_value(const IlpModel& model, std::span<const double> x) {
    if (static_cast<int>(x.size()) != model.n)
        throw std::invalid_argument("solution vector length does not match model");
    double total = 0;
    for (int v = 0; v < model.n; ++v) total += model.coefficients[v] * x[v];
    return total;
}

}  // namespace wdom
