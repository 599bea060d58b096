#pragma once

#include <random>
#include <vector>

#include "discordlab/graph.hpp"
#include "discordlab/linalg.hpp"

namespace testutil {

/// Random connected graph: a random spanning tree plus extra edges with
/// probability extra_p, weights uniform in [w_lo, w_hi].
inline discordlab::Graph random_connected_graph(std::mt19937_64& rng, int n,
                                                double extra_p = 0.3,
                                                double w_lo = 0.2,
                                                double w_hi = 2.0) {
    std::uniform_real_distribution<double> weight(w_lo, w_hi);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<discordlab::Edge> edges;
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        const int u = order[pick(rng)];
        const int v = order[i];
        edges.push_back({u, v, weight(rng)});
        present[u][v] = present[v][u] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present[u][v] && coin(rng) < extra_p)
                edges.push_back({u, v, weight(rng)});
    return discordlab::Graph(n, std::move(edges));
}

/// Random vector with entries uniform in [lo, hi].
inline discordlab::Vector random_vector(std::mt19937_64& rng, int n, double lo,
                                        double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    discordlab::Vector v(n);
    for (double& x : v) x = d(rng);
    return v;
}

/// Dyadic weights (multiples of 2^-10) keep Laplacian row sums exact.
inline discordlab::Graph random_dyadic_graph(std::mt19937_64& rng, int n,
                                             double extra_p = 0.4) {
    discordlab::Graph g = random_connected_graph(rng, n, extra_p);
    std::vector<discordlab::Edge> edges = g.edges();
    for (discordlab::Edge& e : edges) {
        e.w = std::max(1.0, std::round(e.w * 1024.0)) / 1024.0;
    }
    return discordlab::Graph(n, std::move(edges));
}

} // namespace testutil
