#include "discordlab/dynamics.hpp"

#include <cmath>

namespace discordlab {

Vector fj_equilibrium(const SymMatrix& laplacian, const Vector& s) {
    if (laplacian.size() != s.size())
        throw ArgumentError("fj_equilibrium dimension mismatch");
    const SymMatrix iplusl = sym_add(laplacian, sym_identity(laplacian.size()));
    return Cholesky(iplusl).solve(s);
}

IterateResult fj_iterate(const Graph& g, const Vector& s, double tol, int max_steps) {
    if (static_cast<std::size_t>(g.node_count()) != s.size())
        throw ArgumentError("fj_iterate dimension mismatch");
    if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");

    const Vector deg = g.degrees();
    Vector z = s;
    Vector next(s.size());
    for (int step = 1; step <= max_steps; ++step) {
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = s[i];
        for (const Edge& e : g.edges()) {
            next[e.u] += e.w * z[e.v];
            next[e.v] += e.w * z[e.u];
        }
        double delta = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] /= 1.0 + deg[i];
            delta = std::max(delta, std::fabs(next[i] - z[i]));
        }
        z.swap(next);
        if (delta <= tol) return {z, step};
    }
    throw ConvergenceError("fj_iterate did not converge in " +
                               std::to_string(max_steps) + " steps",
                           z, 0.0);
}

double disagreement(const Graph& g, const Vector& x) {
    if (static_cast<std::size_t>(g.node_count()) != x.size())
        throw ArgumentError("disagreement dimension mismatch");
    double d = 0.0;
    for (const Edge& e : g.edges()) {
        const double diff = x[e.u] - x[e.v];
        d += e.w * diff * diff;
    }
    return d;
}

double polarization(const Vector& x) {
    if (x.empty()) return 0.0;
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double p = 0.0;
    for (double v : x) p += (v - mean) * (v - mean);
    return p;
}

} // namespace discordlab
