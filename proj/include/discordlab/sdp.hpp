#pragma once

#include "discordlab/linalg.hpp"

namespace discordlab {

struct ElliptopeSolution {
    Matrix x;           // primal PSD matrix, unit diagonal
    Vector dual_weights; // w with diag(w) - c certified positive semidefinite
    double primal_value; // Tr(c x)
    double dual_value;   // sum of w, a certified upper bound on the optimum
    double gap;          // primal-dual gap at termination
    int iterations;
};

/// Solve max Tr(c X) subject to diag(X) = 1, X positive semidefinite.
///
/// Augmented-Lagrangian splitting on the dual: each iteration separates the
/// current iterate along its most-negative eigenvectors (the PSD projection)
/// and alternates with the closed-form diagonal update that projects onto
/// {diag = 1}. Stops when the primal-dual gap falls below gap_rel * Tr(c)
/// and both feasibility residuals are small. The returned dual weights are
/// lifted to exact feasibility, so dual_value is a true upper bound.
ElliptopeSolution solve_elliptope_max(const SymMatrix& c, double gap_rel = 1e-6,
                                      int max_iters = 200000);

} // namespace discordlab
