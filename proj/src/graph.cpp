#include "wdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wdom {

namespace {

void check_vertex_id(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex id " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
}

}  // namespace

WeightedGraph::WeightedGraph(int n, const std::vector<std::pair<int, int>>& edges,
                             std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (static_cast<int>(weights_.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " weights, got " +
                                    std::to_string(weights_.size()));

    auto adj = std::make_shared<Adjacency>();
    adj->n = n;
    std::vector<std::vector<int>> lists(n);
    for (auto [u, v] : edges) {
        check_vertex_id(u, n);
        check_vertex_id(v, n);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        lists[u].push_back(v);
        lists[v].push_back(u);
    }
    adj->offsets.resize(n + 1);
    adj->offsets[0] = 0;
    for (int v = 0; v < n; ++v) {
        auto& lst = lists[v];
        std::sort(lst.begin(), lst.end());
        if (std::adjacent_find(lst.begin(), lst.end()) != lst.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
        adj->offsets[v + 1] = adj->offsets[v] + static_cast<std::int64_t>(lst.size());
    }
    adj->targets.reserve(adj->offsets[n]);
    for (auto& lst : lists)
        adj->targets.insert(adj->targets.end(), lst.begin(), lst.end());

    adj->min_degree = n > 0 ? n : 0;
    adj->max_degree = 0;
    for (int v = 0; v < n; ++v) {
        int d = static_cast<int>(adj->offsets[v + 1] - adj->offsets[v]);
        adj->min_degree = std::min(adj->min_degree, d);
        adj->max_degree = std::max(adj->max_degree, d);
    }
    adj_ = std::move(adj);
    validate_weights();
    cache_weight_stats();
}

WeightedGraph WeightedGraph::from_sorted_adjacency(int n, std::vector<std::int64_t> offsets,
                                                   std::vector<int> targets,
                                                   std::vector<double> weights) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (static_cast<int>(offsets.size()) != n + 1 || offsets[0] != 0 ||
        offsets[n] != static_cast<std::int64_t>(targets.size()))
        throw std::invalid_argument("inconsistent adjacency offsets");

    auto adj = std::make_shared<Adjacency>();
    adj->min_degree = n;
    for (int v = 0; v < n; ++v) {
        if (offsets[v + 1] < offsets[v]) throw std::invalid_argument("inconsistent adjacency offsets");
        int prev = -1;
        for (std::int64_t i = offsets[v]; i < offsets[v + 1]; ++i) {
            int u = targets[i];
            check_vertex_id(u, n);
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
            if (u <= prev) throw std::invalid_argument("neighbor list not strictly ascending");
            prev = u;
        }
        int d = static_cast<int>(offsets[v + 1] - offsets[v]);
        adj->min_degree = std::min(adj->min_degree, d);
        adj->max_degree = std::max(adj->max_degree, d);
    }
    adj->n = n;
    adj->offsets = std::move(offsets);
    adj->targets = std::move(targets);

    // Full symmetry check only where it is cheap; generators are trusted
    // (and property-tested) beyond this size.
    if (adj->targets.size() <= (1u << 21)) {
        for (int v = 0; v < n; ++v) {
            for (std::int64_t i = adj->offsets[v]; i < adj->offsets[v + 1]; ++i) {
                int u = adj->targets[i];
                auto row = std::span<const int>(adj->targets.data() + adj->offsets[u],
                                                adj->targets.data() + adj->offsets[u + 1]);
                if (!std::binary_search(row.begin(), row.end(), v))
                    throw std::invalid_argument("adjacency not symmetric");
            }
        }
    }

    WeightedGraph g(std::move(adj), std::move(weights));
    return g;
}

WeightedGraph::WeightedGraph(std::shared_ptr<const Adjacency> adj, std::vector<double> weights)
    : adj_(std::move(adj)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != adj_->n)
        throw std::invalid_argument("expected " + std::to_string(adj_->n) + " weights, got " +
                                    std::to_string(weights_.size()));
    validate_weights();
    cache_weight_stats();
}

WeightedGraph WeightedGraph::with_weights(std::vector<double> weights) const {
    return WeightedGraph(adj_, std::move(weights));
}

void WeightedGraph::validate_weights() const {
    for (double w : weights_)
        if (!std::isfinite(w)) throw std::invalid_argument("non-finite vertex weight");
}

void WeightedGraph::cache_weight_stats() {
    total_weight_ = 0;
    min_weight_ = weights_[0];
    max_weight_ = weights_[0];
    for (double w : weights_) {
        total_weight_ += w;
        min_weight_ = std::min(min_weight_, w);
        max_weight_ = std::max(max_weight_, w);
    }
}

bool WeightedGraph::has_edge(int u, int v) const {
    check_vertex_id(u, vertex_count());
    check_vertex_id(v, vertex_count());
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> ids) {
    VertexSet s(universe);
    for (int v : ids) s.insert(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
}

void VertexSet::insert(int v) {
    check_vertex_id(v, universe_size());
    if (!member_[v]) {
        member_[v] = 1;
        ++count_;
    }
}

void VertexSet::erase(int v) {
    check_vertex_id(v, universe_size());
    if (member_[v]) {
        member_[v] = 0;
        --count_;
    }
}

std::vector<int> VertexSet::sorted_ids() const {
    std::vector<int> ids;
    ids.reserve(count_);
    for (int v = 0; v < universe_size(); ++v)
        if (member_[v]) ids.push_back(v);
    return ids;
}

bool is_dominating(const WeightedGraph& g, const VertexSet& s) {
    if (s.universe_size() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v)) continue;
        bool covered = false;
        for (int u : g.neighbors(v)) {
            if (s.contains(u)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

double set_weight(const WeightedGraph& g, const VertexSet& s) {
    if (s.universe_size() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    double total = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (s.contains(v)) total += g.weight(v);
    return total;
}

std::string format_double(double value) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

// One whitespace-separated token; returns false at end of line.
bool next_token(std::string_view line, std::size_t& pos, std::string_view& tok) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) return false;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    tok = line.substr(start, pos - start);
    return true;
}

long parse_int_token(std::string_view tok, const char* what, int line_no) {
    long value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad " + what);
    return value;
}

double parse_double_token(std::string_view tok, int line_no) {
    double value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad weight");
    return value;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
    long n = -1, m = -1;
    std::vector<double> weights;
    std::vector<std::uint8_t> weight_seen;
    std::vector<std::pair<int, int>> edges;
    long weights_read = 0;

    int line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t nl = text.find('\n', offset);
        std::string_view line = text.substr(offset, nl == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : nl - offset);
        offset = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) {
            if (offset > text.size()) break;  // trailing newline
            throw std::invalid_argument("line " + std::to_string(line_no) + ": empty line");
        }

        std::size_t pos = 0;
        std::string_view tag;
        next_token(line, pos, tag);
        if (tag == "c") continue;

        std::string_view a, b;
        if (tag == "p") {
            if (n >= 0)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": repeated header");
            std::string_view kind;
            if (!next_token(line, pos, kind) || kind != "wdom" || !next_token(line, pos, a) ||
                !next_token(line, pos, b) || next_token(line, pos, tag))
                throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed header");
            n = parse_int_token(a, "vertex count", line_no);
            m = parse_int_token(b, "edge count", line_no);
            if (n < 1 || m < 0)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": bad header counts");
            weights.assign(n, 0.0);
            weight_seen.assign(n, 0);
            continue;
        }
        if (n < 0)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected header before '" + std::string(tag) + "'");

        if (tag == "w") {
            if (!next_token(line, pos, a) || !next_token(line, pos, b) || next_token(line, pos, tag))
                throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed weight line");
            long id = parse_int_token(a, "vertex id", line_no);
            if (id < 1 || id > n)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": vertex id out of range");
            if (weight_seen[id - 1])
                throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate weight for vertex " +
                                            std::to_string(id));
            if (!edges.empty() && m > 0)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": weight line after edges");
            weight_seen[id - 1] = 1;
            weights[id - 1] = parse_double_token(b, line_no);
            ++weights_read;
        } else if (tag == "e") {
            if (!next_token(line, pos, a) || !next_token(line, pos, b) || next_token(line, pos, tag))
                throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed edge line");
            long u = parse_int_token(a, "vertex id", line_no);
            long v = parse_int_token(b, "vertex id", line_no);
            if (u < 1 || v < 1 || u > n || v > n || u >= v)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": edge endpoints must satisfy 1 <= u < v <= n");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown line tag '" +
                                        std::string(tag) + "'");
        }
    }

    if (n < 0) throw std::invalid_argument("missing 'p wdom' header");
    if (weights_read != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " weight lines, got " +
                                    std::to_string(weights_read));
    if (static_cast<long>(edges.size()) != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " edge lines, got " +
                                    std::to_string(edges.size()));
    return WeightedGraph(static_cast<int>(n), edges, std::move(weights));
}

std::string serialize_graph(const WeightedGraph& g) {
    std::string out;
    int n = g.vertex_count();
    out += "p wdom " + std::to_string(n) + " " + std::to_string(g.edge_count()) + "\n";
    for (int v = 0; v < n; ++v)
        out += "w " + std::to_string(v + 1) + " " + format_double(g.weight(v)) + "\n";
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

void save_graph_file(const WeightedGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize_graph(g);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace wdom
