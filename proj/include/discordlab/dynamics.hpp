#pragma once

#include "discordlab/graph.hpp"
#include "discordlab/linalg.hpp"

namespace discordlab {

/// Equilibrium of the repeated-averaging dynamics with internal opinions s:
/// solves (I + L) z = s by Cholesky. I + L is positive definite for any
/// graph Laplacian.
Vector fj_equilibrium(const SymMatrix& laplacian, const Vector& s);

struct IterateResult {
    Vector opinions;
    int steps;
};

/// Fixed-point iteration of the per-node averaging update, started from s,
/// until successive iterates differ by at most tol in the max norm.
/// Throws ConvergenceError carrying the last iterate if max_steps is hit.
IterateResult fj_iterate(const Graph& g, const Vector& s, double tol, int max_steps);

/// x^T L x, computed as the weighted sum of squared differences over edges.
double disagreement(const Graph& g, const Vector& x);

/// Squared 2-norm of x minus its mean.
double polarization(const Vector& x);

} // namespace discordlab
