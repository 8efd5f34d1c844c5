#include "wdom/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wdom {

std::string GenSpec::label() const {
    std::string out;
    if (kind == Kind::er)
        out = "er-n" + std::to_string(n) + "-p" + format_double(p);
    else
        out = "sun-d" + std::to_string(min_degree);
    out += "-w" + std::to_string(weight_lo) + "-" + std::to_string(weight_hi);
    return out;
}

namespace {

void validate_spec(const GenSpec& spec) {
    if (spec.kind == GenSpec::Kind::er) {
        if (spec.n < 1) throw std::invalid_argument("er generator needs n >= 1");
        if (!(spec.p >= 0.0 && spec.p <= 1.0))
            throw std::invalid_argument("edge probability must be in [0,1]");
    } else {
        if (spec.min_degree < 3) throw std::invalid_argument("sun generator needs delta >= 3");
    }
    if (spec.weight_lo > spec.weight_hi)
        throw std::invalid_argument("weight range lo > hi");
    if (spec.weight_lo < 0)
        throw std::invalid_argument("weight range must be non-negative");
}

double parse_probability(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return std::stod(text);
    double num = std::stod(text.substr(0, slash));
    double den = std::stod(text.substr(slash + 1));
    return num / den;
}

}  // namespace

GenSpec parse_gen_spec(const std::string& text) {
    GenSpec spec;
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    if (kind == "er")
        spec.kind = GenSpec::Kind::er;
    else if (kind == "sun")
        spec.kind = GenSpec::Kind::sun;
    else
        throw std::invalid_argument("unknown generator kind '" + kind + "'");

    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        pos = comma == std::string::npos ? rest.size() : comma + 1;
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad generator parameter '" + item + "'");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        if (key == "n")
            spec.n = std::stoi(value);
        else if (key == "p")
            spec.p = parse_probability(value);
        else if (key == "delta" || key == "d")
            spec.min_degree = std::stoi(value);
        else if (key == "w") {
            auto dots = value.find("..");
            if (dots == std::string::npos)
                throw std::invalid_argument("weight range must look like lo..hi");
            spec.weight_lo = std::stoi(value.substr(0, dots));
            spec.weight_hi = std::stoi(value.substr(dots + 2));
        } else if (key == "seed")
            spec.seed = std::stoull(value);
        else
            throw std::invalid_argument("unknown generator parameter '" + key + "'");
    }
    validate_spec(spec);
    return spec;
}

WeightedGraph gen_er(int n, double p, Rng& rng) {
    if (n < 1) throw std::invalid_argument("er generator needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must be in [0,1]");

    std::vector<std::pair<int, int>> edges;
    if (p >= 1.0) {
        edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else if (p > 0.0) {
        // Geometric skipping over the linearized pair sequence; each pair is
        // still included independently with probability p.
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double log1mp = std::log1p(-p);
        std::int64_t v = 1, w = -1;
        while (v < n) {
            double r = unit(rng);
            w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log1mp));
            while (w >= v && v < n) {
                w -= v;
                ++v;
            }
            if (v < n) edges.emplace_back(static_cast<int>(w), static_cast<int>(v));
        }
    }

    // Build CSR directly; pairs (u,v) always have u < v here.
    std::vector<std::int64_t> offsets(n + 1, 0);
    for (auto [u, v] : edges) {
        ++offsets[u + 1];
        ++offsets[v + 1];
    }
    for (int i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    std::vector<int> targets(offsets[n]);
    std::vector<std::int64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (auto [u, v] : edges) {
        targets[cursor[u]++] = v;
        targets[cursor[v]++] = u;
    }
    for (int u = 0; u < n; ++u)
        std::sort(targets.begin() + offsets[u], targets.begin() + offsets[u + 1]);

    return WeightedGraph::from_sorted_adjacency(n, std::move(offsets), std::move(targets),
                                                std::vector<double>(n, 1.0));
}

int sun_clique_size(int min_degree) {
    if (min_degree < 3) throw std::invalid_argument("sun generator needs delta >= 3");
    double product = static_cast<double>(min_degree) * std::log(static_cast<double>(min_degree));
    // Guard the floor against double rounding near integer boundaries.
    if (std::abs(product - std::round(product)) < 1e-6) {
        long double precise = static_cast<long double>(min_degree) *
                              std::log(static_cast<long double>(min_degree));
        return static_cast<int>(std::floor(precise));
    }
    return static_cast<int>(std::floor(product));
}

WeightedGraph gen_sun(int min_degree, Rng& rng) {
    const int delta = min_degree;
    const int clique = sun_clique_size(delta);
    if (delta > clique)
        throw std::logic_error("sun graph construction impossible: delta exceeds clique size");
    const int n = clique + delta;

    // Clique vertex neighbor lists get the attached independent vertices
    // appended; processing independent vertices in id order keeps those
    // suffixes sorted.
    std::vector<std::vector<int>> attached(clique);
    std::vector<std::vector<int>> chosen(delta);
    std::vector<int> pool(clique);
    for (int i = 0; i < clique; ++i) pool[i] = i;
    std::vector<std::pair<int, int>> undo;
    undo.reserve(delta);
    for (int i = 0; i < delta; ++i) {
        undo.clear();
        for (int j = 0; j < delta; ++j) {
            std::uniform_int_distribution<int> pick(j, clique - 1);
            int k = pick(rng);
            std::swap(pool[j], pool[k]);
            undo.emplace_back(j, k);
        }
        chosen[i].assign(pool.begin(), pool.begin() + delta);
        std::sort(chosen[i].begin(), chosen[i].end());
        for (int c : chosen[i]) attached[c].push_back(clique + i);
        for (auto it = undo.rbegin(); it != undo.rend(); ++it)
            std::swap(pool[it->first], pool[it->second]);
    }

    std::vector<std::int64_t> offsets(n + 1, 0);
    for (int v = 0; v < clique; ++v)
        offsets[v + 1] = offsets[v] + (clique - 1) + static_cast<std::int64_t>(attached[v].size());
    for (int i = 0; i < delta; ++i) offsets[clique + i + 1] = offsets[clique + i] + delta;

    std::vector<int> targets(offsets[n]);
    for (int v = 0; v < clique; ++v) {
        std::int64_t at = offsets[v];
        for (int u = 0; u < clique; ++u)
            if (u != v) targets[at++] = u;
        for (int u : attached[v]) targets[at++] = u;
    }
    for (int i = 0; i < delta; ++i)
        std::copy(chosen[i].begin(), chosen[i].end(), targets.begin() + offsets[clique + i]);

    return WeightedGraph::from_sorted_adjacency(n, std::move(offsets), std::move(targets),
                                                std::vector<double>(n, 1.0));
}

WeightedGraph assign_weights(const WeightedGraph& g, int lo, int hi, Rng& rng) {
    if (lo > hi) throw std::invalid_argument("weight range lo > hi");
    std::uniform_int_distribution<int> pick(lo, hi);
    std::vector<double> weights(g.vertex_count());
    for (auto& w : weights) w = pick(rng);
    return g.with_weights(std::move(weights));
}

WeightedGraph generate(const GenSpec& spec) {
    validate_spec(spec);
    Rng structure = make_rng(substream_seed(spec.seed, 0));
    WeightedGraph g = spec.kind == GenSpec::Kind::er ? gen_er(spec.n, spec.p, structure)
                                                     : gen_sun(spec.min_degree, structure);
    if (spec.weight_lo == 1 && spec.weight_hi == 1) return g;
    Rng weights = make_rng(substream_seed(spec.seed, 1));
    return assign_weights(g, spec.weight_lo, spec.weight_hi, weights);
}

}  // namespace wdom
