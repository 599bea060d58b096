#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "discordlab/linalg.hpp"

namespace discordlab {

struct Edge {
    int u;
    int v;
    double w;
};

/// Simple undirected weighted graph. Node ids are 0-based and dense.
/// Validated at construction: no self-loops, no duplicate undirected
/// edges, all weights strictly positive, all ids in range.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int node_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// m, the sum of all edge weights.
    double total_weight() const { return total_weight_; }
    bool connected() const { return connected_; }
    bool unweighted() const; // every weight exactly 1

    Vector degrees() const; // weighted degrees
    double max_degree() const;

private:
    int n_;
    std::vector<Edge> edges_;
    double total_weight_;
    bool connected_;
};

/// Parse the edge-list format: '#' starts a comment, the first significant
/// line is "n <count>", every following line is "u v w" with w > 0.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

SymMatrix laplacian(const Graph& g);

/// Sorted set of node ids, validated against a node count when it is used.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::vector<int> members);

    const std::vector<int>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(int v) const;
    std::vector<char> mask(int n) const; // throws if any member out of range

private:
    std::vector<int> members_; // sorted, unique
};

/// cut_G(S,T) = sum of w(i,j) over i in S, j in T; S and T must be disjoint.
double cut_value(const Graph& g, const NodeSet& s, const NodeSet& t);
/// cut_G(S) = cut_G(S, complement of S).
double cut_value(const Graph& g, const NodeSet& s);

Graph complete_graph(int n, double total_weight);
Graph complement_graph(const Graph& g); // unweighted input only

// Standard test graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves); // node 0 is the center
Graph hypercube_graph(int dim);

} // namespace discordlab
