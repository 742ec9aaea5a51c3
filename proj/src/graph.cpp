#include "tricut/graph.hpp"

#include <algorithm>
#include <istream>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tricut/rng.hpp"

namespace tricut {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("gset parse error at line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one node");

    for (Edge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].u) + "," +
                                        std::to_string(edges[i].v) + ")");
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);

    std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : g.edges_) {
        ++deg[static_cast<std::size_t>(e.u) + 1];
        ++deg[static_cast<std::size_t>(e.v) + 1];
        g.total_weight_ += e.w;
    }
    g.offsets_.assign(deg.begin(), deg.end());
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

    g.nbrs_.resize(g.offsets_.back());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.nbrs_[cursor[e.u]++] = {e.v, e.w};
        g.nbrs_[cursor[e.v]++] = {e.u, e.w};
    }
    // edges_ is sorted, so per-node neighbor lists with node > self are in
    // order already; the lists gain their smaller neighbors out of order.
    for (int i = 0; i < n; ++i) {
        auto begin = g.nbrs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
        auto end = g.nbrs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
        std::sort(begin, end, [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }
    return g;
}

Graph Graph::parse_gset(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) parse_fail(line_no, "missing header");
    long long n = 0, m = 0;
    {
        std::istringstream hs(header);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra)) parse_fail(line_no, "expected header \"N M\"");
        if (n < 1) parse_fail(line_no, "node count must be >= 1");
        if (m < 0) parse_fail(line_no, "negative edge count");
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        std::string row;
        if (!next_line(row)) parse_fail(line_no, "expected " + std::to_string(m) + " edges, got " + std::to_string(k));
        std::istringstream rs(row);
        long long i = 0, j = 0, w = 0;
        std::string extra;
        if (!(rs >> i >> j >> w) || (rs >> extra)) parse_fail(line_no, "expected edge \"i j w\"");
        if (i < 1 || i > n || j < 1 || j > n) parse_fail(line_no, "node index out of range 1..N");
        if (i == j) parse_fail(line_no, "self-loop");
        edges.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1), w});
    }
    std::string tail;
    if (next_line(tail)) parse_fail(line_no, "trailing content after " + std::to_string(m) + " edges");

    try {
        return from_edges(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& err) {
        throw std::runtime_error(std::string("gset parse error: ") + err.what());
    }
}

Graph Graph::parse_gset(const std::string& text) {
    std::istringstream in(text);
    return parse_gset(in);
}

Graph Graph::load_gset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gset file: " + path);
    return parse_gset(in);
}

void Graph::write_gset(std::ostream& out) const {
    out << n_ << ' ' << edges_.size() << '\n';
    for (const Edge& e : edges_) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

std::string Graph::write_gset() const {
    std::ostringstream out;
    write_gset(out);
    return out.str();
}

Graph Graph::erdos_renyi(const ErdosRenyiSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
    if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("p must be in [0, 1]");

    std::mt19937_64 rng = make_rng(spec.seed);
    std::vector<Edge> edges;
    // One draw per unordered pair, in (i, j) lexicographic order. O(n^2),
    // fine for the n <= 4000 instances this targets.
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j)
            if (uniform_double(rng) < spec.p) edges.push_back({i, j, 1});
    return from_edges(spec.n, std::move(edges));
}

}  // namespace tricut
