#include "discordlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace discordlab {
namespace {

bool traverse_connected(int n, const std::vector<Edge>& edges) {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == n;
}

} // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw ArgumentError("graph needs at least one node");
    std::set<std::pair<int, int>> seen;
    double m = 0.0;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw ArgumentError("edge endpoint out of range");
        if (e.u == e.v) throw ArgumentError("self-loops are not allowed");
        if (!(e.w > 0.0)) throw ArgumentError("edge weights must be strictly positive");
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
            throw ArgumentError("duplicate undirected edge");
        m += e.w;
    }
    total_weight_ = m;
    connected_ = traverse_connected(n_, edges_);
}

bool Graph::unweighted() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.w == 1.0; });
}

Vector Graph::degrees() const {
    Vector d(n_, 0.0);
    for (const Edge& e : edges_) {
        d[e.u] += e.w;
        d[e.v] += e.w;
    }
    return d;
}

double Graph::max_degree() const {
    const Vector d = degrees();
    return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

Graph load_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue; // blank or comment-only line
        if (n < 0) {
            long count = 0;
            if (first != "n" || !(ss >> count) || count < 1)
                throw ParseError(line_no, "expected header \"n <count>\"");
            std::string extra;
            if (ss >> extra) throw ParseError(line_no, "trailing tokens after header");
            n = static_cast<int>(count);
            continue;
        }
        long u = 0, v = 0;
        double w = 0.0;
        std::istringstream es(line);
        if (!(es >> u >> v >> w)) throw ParseError(line_no, "expected \"u v w\"");
        std::string extra;
        if (es >> extra) throw ParseError(line_no, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "node id out of range");
        if (u == v) throw ParseError(line_no, "self-loop");
        if (!(w > 0.0) || !std::isfinite(w))
            throw ParseError(line_no, "weight must be a positive finite number");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    }
    if (n < 0) throw ParseError(line_no, "missing header \"n <count>\"");
    try {
        return Graph(n, std::move(edges));
    } catch (const ArgumentError& e) {
        throw ParseError(line_no, e.what()); // duplicate edges surface here
    }
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open graph file: " + path);
    return load_graph(in);
}

SymMatrix laplacian(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.node_count());
    Matrix m(n, n);
    for (const Edge& e : g.edges()) {
        m(e.u, e.v) = -e.w;
        m(e.v, e.u) = -e.w;
    }
    // Diagonal = negated sum of the row's off-diagonal entries, accumulated
    // in ascending column order so L*1 cancels as exactly as the weights allow.
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) s += m(i, j);
        m(i, i) = -s;
    }
    return SymMatrix(std::move(m));
}

NodeSet::NodeSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> NodeSet::mask(int n) const {
    std::vector<char> m(n, 0);
    for (int v : members_) {
        if (v < 0 || v >= n) throw ArgumentError("node set member out of range");
        m[v] = 1;
    }
    return m;
}

double cut_value(const Graph& g, const NodeSet& s, const NodeSet& t) {
    const std::vector<char> ms = s.mask(g.node_count());
    const std::vector<char> mt = t.mask(g.node_count());
    for (int i = 0; i < g.node_count(); ++i)
        if (ms[i] && mt[i]) throw ArgumentError("cut sets must be disjoint");
    double c = 0.0;
    for (const Edge& e : g.edges()) {
        if ((ms[e.u] && mt[e.v]) || (ms[e.v] && mt[e.u])) c += e.w;
    }
    return c;
}

double cut_value(const Graph& g, const NodeSet& s) {
    const std::vector<char> ms = s.mask(g.node_count());
    double c = 0.0;
    for (const Edge& e : g.edges()) {
        if (ms[e.u] != ms[e.v]) c += e.w;
    }
    return c;
}

Graph complete_graph(int n, double total_weight) {
    if (n < 2) throw ArgumentError("complete graph needs n >= 2");
    if (!(total_weight > 0.0)) throw ArgumentError("total weight must be positive");
    const double w = total_weight / (n * (n - 1) / 2.0);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, w});
    return Graph(n, std::move(edges));
}

Graph complement_graph(const Graph& g) {
    if (!g.unweighted()) throw ArgumentError("complement is defined for unweighted graphs");
    const int n = g.node_count();
    std::set<std::pair<int, int>> present;
    for (const Edge& e : g.edges())
        present.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present.count({u, v})) edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw ArgumentError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw ArgumentError("star needs at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
    return Graph(leaves + 1, std::move(edges));
}

Graph hypercube_graph(int dim) {
    if (dim < 1) throw ArgumentError("hypercube needs dim >= 1");
    const int n = 1 << dim;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < dim; ++b) {
            const int v = u ^ (1 << b);
            if (u < v) edges.push_back({u, v, 1.0});
        }
    return Graph(n, std::move(edges));
}

} // namespace discordlab
