#pragma once

#include <cstdint>
#include <vector>

#include "discordlab/linalg.hpp"
#include "discordlab/spectral.hpp"

namespace discordlab {

enum class ObjectiveKind {
    Disagreement,
    RepeatedDisagreement,
    PolarizationDisagreement,
    AbsoluteDisplacement,
};

/// Which quadratic form the seeding adversary maximizes, and with what
/// 2-norm budget R. For the repeated objective the horizon T counts extra
/// measurement periods; infinite_horizon selects the limiting game.
struct ObjectiveSpec {
    ObjectiveKind kind = ObjectiveKind::Disagreement;
    double budget = 1.0;
    long horizon = 0;
    bool infinite_horizon = false;

    static ObjectiveSpec disagreement(double r = 1.0);
    static ObjectiveSpec repeated(long t, double r = 1.0);
    static ObjectiveSpec repeated_infinite(double r = 1.0);
    static ObjectiveSpec polarization_disagreement(double r = 1.0);
    static ObjectiveSpec displacement(double r = 1.0);

    /// Scalar f applied to Laplacian eigenvalues; the objective's quadratic
    /// form is s^T (I+L)^-1 f(L) (I+L)^-1 s. Not defined for the
    /// polarization-disagreement kind.
    double f(double y) const;

    /// Eigenvalue of Sigma = (I+L)^-1 f(L) (I+L)^-1 at Laplacian eigenvalue
    /// y. Eigenvalues at or below kernel_tol are treated as the kernel,
    /// where the repeated game's series vanishes term by term.
    double sigma_eigenvalue(double y, double kernel_tol) const;
};

/// Sigma = (I+L)^-1 f(L) (I+L)^-1: positive semidefinite, shares
/// eigenvectors with L.
struct SigmaMatrix {
    SymMatrix matrix;
};

SigmaMatrix sigma(const SymMatrix& laplacian, const ObjectiveSpec& obj);

/// Outcome of an exact spectral attack. Every column of seed_basis has norm
/// R and attains optimal_value; is_unique_eigenspace is false when several
/// distinct eigenvalues tie, in which case the tying eigenspaces are
/// concatenated. argmax_index is the 1-based position of the attaining
/// eigenvalue in the ascending spectrum (first index of its eigenspace).
struct AttackResult {
    double optimal_value;
    double argmax_eigenvalue;
    int argmax_index;
    Matrix seed_basis;
    bool is_unique_eigenspace;
};

/// Exact optimizer of the 2-norm-budgeted objective over a connected graph
/// Laplacian. Delegates the polarization-disagreement kind to pd_optimal.
AttackResult l2_attack(const SymMatrix& laplacian, const ObjectiveSpec& obj);

struct SweepPoint {
    double t;
    int argmax_index; // 1-based index into the ascending spectrum
    double argmax_eigenvalue;
    double value;
};

/// Disagreement attack value on L(t) = t*L over a log grid (resolution
/// points per decade spanning [0.1/lambda_n, 10/lambda_2]) plus the exact
/// critical points t = 1/lambda_i, where eigenspace i is optimal with value
/// 1/4 (budget 1).
std::vector<SweepPoint> t_sweep(const SymMatrix& laplacian, int resolution = 64);

/// Exact polarization-disagreement optimum R^2/(1+lambda_2) with seeds
/// R * V_2; seeds are re-verified against the de-meaned quadratic form.
AttackResult pd_optimal(const SymMatrix& laplacian, double budget);

struct SdpAttack {
    double sdp_value;    // certified upper bound on the +-1 optimum's relaxation
    Matrix gram_vectors; // column i is the unit vector x_i
    Vector dual_weights;
    double gap;
    int iterations;
};

/// Unit-sphere Gram relaxation of max s^T Sigma s over s in {-1,1}^n:
/// max Tr(Sigma X) with diag(X) = 1, X PSD, solved to 1e-6 relative gap.
SdpAttack linf_attack_sdp(const SigmaMatrix& sig);

struct SignVector {
    Vector signs; // entries are exactly -1 or +1
    double value;
};

/// Best of `trials` random-hyperplane roundings of the Gram vectors;
/// reproducible bit-for-bit for a given rng_seed.
SignVector linf_round(const SigmaMatrix& sig, const Matrix& gram_vectors,
                      int trials, std::uint64_t rng_seed);

/// Exact +-1 maximum by Gray-code enumeration; n <= 22.
SignVector linf_brute(const SigmaMatrix& sig);

struct L1Attack {
    int index;          // argmax of the Sigma diagonal
    double value;       // that diagonal entry
    double lower_bound; // Tr(Sigma)/n
    double upper_bound; // lambda_max(Sigma)
};

L1Attack l1_attack(const SigmaMatrix& sig);

/// Upper bound on the extra disagreement available to a k-sparse,
/// cube-constrained perturbation:
/// lambda_max(Sigma)*k + sqrt(k)*min(2*d_max*sqrt(k), 2*lambda_max(Sigma)*sqrt(n)).
double sparsity_bound(const SymMatrix& laplacian, int k);

/// Disagreement induced by seeding the first k nodes of the scaled complete
/// graph (1/n) L_{K_n}; equals k(n-k)/(4n).
double clique_sparsity_example(int n, int k);

} // namespace discordlab
