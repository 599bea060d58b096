#pragma once

#include <functional>
#include <vector>

#include "discordlab/linalg.hpp"

namespace discordlab {

/// Full spectral factorization of a symmetric matrix.
/// values are sorted ascending; column i of vectors is the unit eigenvector
/// paired with values[i], and the columns are orthonormal.
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;
};

/// Full decomposition by Householder tridiagonalization followed by
/// implicit-shift QL. Throws ConvergenceError if an eigenvalue fails to
/// settle (does not happen for sane symmetric input).
EigenDecomposition eig_sym(const SymMatrix& a);

/// Cyclic Jacobi diagonalization, off-diagonal mass driven below 1e-12
/// relative to the matrix scale. Slower than eig_sym; kept as the
/// independent reference the equivalence tests check against.
EigenDecomposition eig_sym_jacobi(const SymMatrix& a);

/// Orthonormal basis of one (numerically clustered) eigenspace.
struct EigenspaceBasis {
    double eigenvalue; // representative value of the cluster
    Matrix basis;      // columns orthonormal
};

/// Group eigenvalues into eigenspaces; values within cluster_tol_rel times
/// the spectral scale are treated as one eigenspace.
std::vector<EigenspaceBasis> eigenspaces(const EigenDecomposition& d,
                                         double cluster_tol_rel = 1e-7);

/// f(A) = sum_i f(lambda_i) v_i v_i^T.
SymMatrix matrix_function(const EigenDecomposition& d,
                          const std::function<double(double)>& f);

/// Loewner order test: true iff lambda_min(b - a) >= -tol * scale(b - a).
bool psd_leq(const SymMatrix& a, const SymMatrix& b, double tol);

/// max_i |lambda_i|.
double operator_norm(const SymMatrix& a);

double lambda_min(const SymMatrix& a);
double lambda_max(const SymMatrix& a);

} // namespace discordlab
