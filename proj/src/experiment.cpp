#include "wdom/experiment.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "wdom/exact.hpp"

namespace wdom {

std::string solver_name(SolverKind s) {
    switch (s) {
        case SolverKind::t3: return "t3";
        case SolverKind::t5: return "t5";
        case SolverKind::t6: return "t6";
        case SolverKind::exact_size: return "exact-size";
        case SolverKind::exact_weight: return "exact-weight";
        case SolverKind::exact_lex: return "exact-lex";
    }
    return "?";
}

SolverKind parse_solver(const std::string& name) {
    if (name == "t3") return SolverKind::t3;
    if (name == "t5") return SolverKind::t5;
    if (name == "t6") return SolverKind::t6;
    if (name == "exact-size") return SolverKind::exact_size;
    if (name == "exact-weight") return SolverKind::exact_weight;
    if (name == "exact-lex") return SolverKind::exact_lex;
    throw std::invalid_argument("unknown solver '" + name + "'");
}

namespace {

double round_ms(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

std::vector<int> one_based_ids(const VertexSet& s) {
    std::vector<int> ids = s.sorted_ids();
    for (int& v : ids) ++v;
    return ids;
}

ResultRow solve_one(const WeightedGraph& g, const InstanceRecord& rec, SolverKind solver,
                    const ExperimentSpec& spec) {
    ResultRow row;
    row.config = rec.config;
    row.config_index = rec.config_index;
    row.instance = rec.instance;
    row.instance_seed = rec.seed;
    row.n = rec.n;
    row.m = rec.m;
    row.delta = rec.delta;
    row.solver = solver;

    const auto start = std::chrono::steady_clock::now();
    try {
        switch (solver) {
            case SolverKind::t3:
            case SolverKind::t5:
            case SolverKind::t6: {
                HeuristicConfig cfg;
                cfg.variant = solver == SolverKind::t3   ? Variant::t3
                              : solver == SolverKind::t5 ? Variant::t5
                                                         : Variant::t6;
                cfg.iterations = spec.iterations;
                cfg.time_budget_s = spec.time_budget_s;
                cfg.seed = substream_seed(rec.seed, 0x100 + static_cast<int>(solver));
                HeuristicRun run_result = run(g, cfg);
                row.best_size = run_result.best_by_size.size;
                row.best_size_weight = run_result.best_by_size.weight;
                row.best_weight = run_result.best_by_weight.weight;
                row.best_weight_size = run_result.best_by_weight.size;
                row.iterations_done = run_result.iterations_done;
                row.probabilities_clamped = run_result.probabilities_clamped;
                row.witness_by_size = one_based_ids(run_result.best_by_size.set);
                row.witness_by_weight = one_based_ids(run_result.best_by_weight.set);
                break;
            }
            case SolverKind::exact_size:
            case SolverKind::exact_weight:
            case SolverKind::exact_lex: {
                Objective obj = solver == SolverKind::exact_size     ? Objective::size
                                : solver == SolverKind::exact_weight ? Objective::weight
                                                                     : Objective::lex;
                ExactResult exact = exact_solve(g, obj);
                row.best_size = static_cast<int>(exact.witness.size());
                row.best_size_weight = set_weight(g, exact.witness);
                row.best_weight = row.best_size_weight;
                row.best_weight_size = row.best_size;
                row.iterations_done = 1;
                row.witness_by_size = one_based_ids(exact.witness);
                row.witness_by_weight = row.witness_by_size;
                break;
            }
        }
    } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
    }
    if (spec.with_timing) {
        row.time_s = round_ms(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return row;
}

}  // namespace

InstanceBounds compute_instance_bounds(const WeightedGraph& g) {
    InstanceBounds bounds;
    bounds.t1 = bound_t1(g.vertex_count(), g.min_degree());
    if (g.min_degree() < 1 || !(g.min_weight() > 0)) return bounds;
    bounds.t2 = bound_t2(g.vertex_count(), g.min_degree());
    bounds.t3 = bound_t3(g);
    bounds.c4 = bound_c4(g);
    bounds.t5 = bound_t5(g);
    bounds.t6 = bound_t6(g);
    bounds.computed = true;
    return bounds;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    if (spec.repeats < 0) throw std::invalid_argument("repeats must be >= 0");
    if (spec.iterations == 0 && !spec.time_budget_s)
        throw std::invalid_argument("experiment needs an iteration count or a time budget");

    ExperimentResult result;
    result.spec = spec;
    for (std::size_t ci = 0; ci < spec.corpus.size(); ++ci) {
        const std::uint64_t config_seed = substream_seed(spec.master_seed, ci);
        for (int ri = 0; ri < spec.repeats; ++ri) {
            GenSpec gen = spec.corpus[ci];
            gen.seed = substream_seed(config_seed, ri);
            WeightedGraph g = generate(gen);

            InstanceRecord rec;
            rec.config = spec.corpus[ci].label();
            rec.config_index = static_cast<int>(ci);
            rec.instance = ri;
            rec.seed = gen.seed;
            rec.n = g.vertex_count();
            rec.m = g.edge_count();
            rec.delta = g.min_degree();
            rec.bounds = compute_instance_bounds(g);
            result.instances.push_back(rec);

            for (SolverKind solver : spec.solvers)
                result.rows.push_back(solve_one(g, rec, solver, spec));
        }
    }
    return result;
}

namespace {

std::string csv_row(const std::string& config, const std::string& instance, double n, double m,
                    double delta, const std::string& variant, double best_size,
                    double best_size_weight, double best_weight, double best_weight_size,
                    double time_s) {
    return config + "," + instance + "," + format_double(n) + "," + format_double(m) + "," +
           format_double(delta) + "," + variant + "," + format_double(best_size) + "," +
           format_double(best_size_weight) + "," + format_double(best_weight) + "," +
           format_double(best_weight_size) + "," + format_double(round_ms(time_s)) + "\n";
}

}  // namespace

std::string experiment_csv(const ExperimentResult& result) {
    std::string out =
        "config,instance,n,m,delta,variant,best_size,best_size_weight,best_weight,"
        "best_weight_size,time_s\n";

    // Instance rows in run order; failures are recorded in the JSON output
    // and skipped here because the schema has no error column.
    for (const ResultRow& row : result.rows) {
        if (row.failed) continue;
        out += csv_row(row.config, std::to_string(row.instance), row.n, static_cast<double>(row.m),
                       row.delta, solver_name(row.solver), row.best_size, row.best_size_weight,
                       row.best_weight, row.best_weight_size, row.time_s);
    }

    // One aggregate row per (config, solver) over the successful repeats,
    // in corpus x solver order.
    for (std::size_t ci = 0; ci < result.spec.corpus.size(); ++ci) {
        const std::string config = result.spec.corpus[ci].label();
        for (SolverKind solver : result.spec.solvers) {
            double n = 0, m = 0, delta = 0, size = 0, size_weight = 0, weight = 0,
                   weight_size = 0, time_s = 0;
            int count = 0;
            for (const ResultRow& row : result.rows) {
                if (row.failed || row.config_index != static_cast<int>(ci) || row.solver != solver)
                    continue;
                ++count;
                n += row.n;
                m += static_cast<double>(row.m);
                delta += row.delta;
                size += row.best_size;
                size_weight += row.best_size_weight;
                weight += row.best_weight;
                weight_size += row.best_weight_size;
                time_s += row.time_s;
            }
            if (count == 0) continue;
            out += csv_row(config, "mean", n / count, m / count, delta / count, solver_name(solver),
                           size / count, size_weight / count, weight / count, weight_size / count,
                           time_s / count);
        }
    }
    return out;
}

namespace {

nlohmann::json report_json(const BoundReport& report) {
    nlohmann::json j;
    j["applicable"] = report.applicable;
    if (!report.violated_conditions.empty()) j["violated"] = report.violated_conditions;
    auto put = [&j](const char* key, const std::optional<double>& v) {
        if (v) j[key] = *v;
    };
    put("p", report.p);
    put("k", report.k);
    put("z", report.z);
    put("q", report.q);
    put("alpha", report.alpha);
    put("intermediate", report.intermediate_bound);
    put("final", report.final_bound);
    return j;
}

}  // namespace

std::string experiment_json(const ExperimentResult& result) {
    nlohmann::json j;
    j["master_seed"] = result.spec.master_seed;
    j["iterations"] = result.spec.iterations;
    j["repeats"] = result.spec.repeats;
    if (result.spec.time_budget_s) j["time_budget_s"] = *result.spec.time_budget_s;
    j["configs"] = nlohmann::json::array();
    for (const GenSpec& gen : result.spec.corpus) j["configs"].push_back(gen.label());
    j["solvers"] = nlohmann::json::array();
    for (SolverKind s : result.spec.solvers) j["solvers"].push_back(solver_name(s));

    j["instances"] = nlohmann::json::array();
    for (const InstanceRecord& rec : result.instances) {
        nlohmann::json inst;
        inst["config"] = rec.config;
        inst["instance"] = rec.instance;
        inst["seed"] = rec.seed;
        inst["n"] = rec.n;
        inst["m"] = rec.m;
        inst["delta"] = rec.delta;
        if (rec.bounds.computed) {
            nlohmann::json b;
            b["T1"] = rec.bounds.t1;
            b["T2"] = rec.bounds.t2;
            b["T3"] = report_json(rec.bounds.t3);
            b["C4"] = rec.bounds.c4;
            b["T5"] = report_json(rec.bounds.t5);
            b["T6"] = report_json(rec.bounds.t6);
            inst["bounds"] = b;
        } else {
            inst["bounds"] = nlohmann::json{{"T1", rec.bounds.t1}};
        }
        inst["results"] = nlohmann::json::array();
        for (const ResultRow& row : result.rows) {
            if (row.config_index != rec.config_index || row.instance != rec.instance) continue;
            nlohmann::json r;
            r["variant"] = solver_name(row.solver);
            if (row.failed) {
                r["error"] = row.error;
            } else {
                r["best_size"] = row.best_size;
                r["best_size_weight"] = row.best_size_weight;
                r["best_weight"] = row.best_weight;
                r["best_weight_size"] = row.best_weight_size;
                r["time_s"] = row.time_s;
                r["iterations_done"] = row.iterations_done;
                r["probabilities_clamped"] = row.probabilities_clamped;
                r["witness_by_size"] = row.witness_by_size;
                r["witness_by_weight"] = row.witness_by_weight;
            }
            inst["results"].push_back(r);
        }
        j["instances"].push_back(inst);
    }
    return j.dump(2) + "\n";
}

std::string trace_csv(const HeuristicRun& run, std::optional<double> budget_s) {
    std::string out = "elapsed_s,best_size,best_weight\n";
    for (const TracePoint& point : run.trace)
        out += format_double(round_ms(point.elapsed_s)) + "," + std::to_string(point.best_size) +
               "," + format_double(point.best_weight) + "\n";
    if (budget_s && !run.trace.empty()) {
        const TracePoint& last = run.trace.back();
        out += format_double(*budget_s) + "," + std::to_string(last.best_size) + "," +
               format_double(last.best_weight) + "\n";
    }
    return out;
}

}  // namespace wdom
