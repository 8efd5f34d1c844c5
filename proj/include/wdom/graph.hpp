#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wdom {

class VertexSet;

// Immutable simple undirected graph with one real weight per vertex.
// Adjacency is stored in CSR form (offsets + flat sorted neighbor lists)
// and shared between graphs that differ only in weights, so reweighting
// a large instance is cheap.
class WeightedGraph {
public:
    // Validating constructor: rejects out-of-range ids, self-loops,
    // duplicate edges, weight-count mismatches and non-finite weights.
    WeightedGraph(int n, const std::vector<std::pair<int, int>>& edges,
                  std::vector<double> weights);

    // Fast path for generators that emit adjacency directly. Lists must be
    // strictly ascending, self-loop free and in range; this is always
    // checked. Symmetry is checked only for small graphs (the generators
    // are property-tested for it separately) so huge instances do not pay
    // an O(m log m) verification pass.
    static WeightedGraph from_sorted_adjacency(int n,
                                               std::vector<std::int64_t> offsets,
                                               std::vector<int> targets,
                                               std::vector<double> weights);

    // Same topology, new weights.
    WeightedGraph with_weights(std::vector<double> weights) const;

    int vertex_count() const { return adj_->n; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_->targets.size()) / 2; }

    std::span<const int> neighbors(int v) const {
        return {adj_->targets.data() + adj_->offsets[v],
                adj_->targets.data() + adj_->offsets[v + 1]};
    }
    int degree(int v) const { return static_cast<int>(adj_->offsets[v + 1] - adj_->offsets[v]); }
    int min_degree() const { return adj_->min_degree; }
    int max_degree() const { return adj_->max_degree; }

    double weight(int v) const { return weights_[v]; }
    const std::vector<double>& weights() const { return weights_; }
    double total_weight() const { return total_weight_; }
    double min_weight() const { return min_weight_; }
    double max_weight() const { return max_weight_; }
    double average_weight() const { return total_weight_ / adj_->n; }

    bool has_edge(int u, int v) const;

private:
    struct Adjacency {
        int n = 0;
        int min_degree = 0;
        int max_degree = 0;
        std::vector<std::int64_t> offsets;
        std::vector<int> targets;
    };

    WeightedGraph(std::shared_ptr<const Adjacency> adj, std::vector<double> weights);

    void validate_weights() const;
    void cache_weight_stats();

    std::shared_ptr<const Adjacency> adj_;
    std::vector<double> weights_;
    double total_weight_ = 0;
    double min_weight_ = 0;
    double max_weight_ = 0;
};

// Subset of the vertices 0..n-1 with O(1) membership tests.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : member_(universe, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> ids);
    static VertexSet full(int universe);

    int universe_size() const { return static_cast<int>(member_.size()); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int v) const { return member_[v] != 0; }

    void insert(int v);
    void erase(int v);

    // Members in ascending order.
    std::vector<int> sorted_ids() const;

    bool operator==(const VertexSet& other) const {
        return member_ == other.member_;
    }

private:
    std::vector<std::uint8_t> member_;
    std::size_t count_ = 0;
};

// True iff every vertex is in s or adjacent to a member of s.
bool is_dominating(const WeightedGraph& g, const VertexSet& s);

// Sum of member weights, accumulated in ascending vertex order so that other
// modules (LP objective evaluation) can reproduce it bit for bit.
double set_weight(const WeightedGraph& g, const VertexSet& s);

// Graph file format:
//   c <comment>         zero or more
//   p wdom <n> <m>      first non-comment line
//   w <id> <weight>     n lines, ids 1..n
//   e <u> <v>           m lines, 1 <= u < v <= n
WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph& g);

WeightedGraph load_graph_file(const std::string& path);
void save_graph_file(const WeightedGraph& g, const std::string& path);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

}  // namespace wdom
