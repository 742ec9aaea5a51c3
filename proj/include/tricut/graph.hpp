#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tricut {

struct Edge {
    int u = 0;
    int v = 0;
    std::int64_t w = 1;
};

struct Neighbor {
    int node = 0;
    std::int64_t w = 1;
};

struct ErdosRenyiSpec {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// Immutable undirected weighted graph. Edges are stored once with u < v
/// and 0-based endpoints; a symmetric CSR adjacency supports O(deg) node
/// scans. Safe to share across threads after construction.
class Graph {
public:
    /// Validates and normalizes an edge list: rejects self-loops,
    /// out-of-range endpoints and duplicate unordered pairs.
    static Graph from_edges(int n, std::vector<Edge> edges);

    /// GSet text format: header "N M", then M lines "i j w" with 1-based
    /// endpoints. Tolerates CRLF and blank lines. Throws std::runtime_error
    /// with the offending line on malformed input.
    static Graph parse_gset(std::istream& in);
    static Graph parse_gset(const std::string& text);
    static Graph load_gset(const std::string& path);

    /// G(n, p): every unordered pair drawn independently with probability p,
    /// weight 1. Deterministic for a fixed spec.
    static Graph erdos_renyi(const ErdosRenyiSpec& spec);

    void write_gset(std::ostream& out) const;
    std::string write_gset() const;

    int num_nodes() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Neighbor> neighbors(int node) const {
        return {nbrs_.data() + offsets_[node],
                nbrs_.data() + offsets_[node + 1]};
    }
    int degree(int node) const {
        return static_cast<int>(offsets_[node + 1] - offsets_[node]);
    }

    /// Sum of edge weights; equals M for a {0,1}-weighted graph.
    std::int64_t total_weight() const { return total_weight_; }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;              // u < v, unique
    std::vector<std::size_t> offsets_;     // n_ + 1 entries
    std::vector<Neighbor> nbrs_;           // 2m entries, sorted per node
    std::int64_t total_weight_ = 0;
};

}  // namespace tricut
