#pragma once

#include <cstdint>
#include <string>

#include "discordlab/graph.hpp"
#include "discordlab/linalg.hpp"

namespace discordlab {

/// Opinion graph g1 (Laplacian L, runs the dynamics) paired with the
/// measurement graph g2 (Laplacian M, measures disagreement).
struct GraphPair {
    Graph g1;
    Graph g2;

    GraphPair(Graph opinion, Graph measurement);
};

/// lambda_max((I+L)^-1 M (I+L)^-1) — the 2-norm adversary's power when
/// opinions smooth along g1 and disagreement is measured along g2.
double mixed_objective(const GraphPair& pair);

/// max_k lambda_k(M) / (1 + lambda_k(L))^2 with both spectra ascending.
double mixed_lower_bound(const GraphPair& pair);

struct MatBound {
    double lower;
    double upper;
};

/// Bounds on lambda_max(C B C) for PSD B, C:
/// max_k lambda_{n-k+1}(C)^2 lambda_k(B) <= lambda_max(CBC) <= lambda_max(C)^2 lambda_max(B).
MatBound matbound(const SymMatrix& b, const SymMatrix& c);

struct SimilarityReport {
    double epsilon_spectral; // smallest eps with L/(1+eps) <= M <= (1+eps)L; inf if none
    double delta_operator;   // ||M - L||
    double eta;              // max weighted neighborhood symmetric difference
    double gamma;            // max absolute weighted degree difference
    bool finite;
    std::string diagnostic; // set when epsilon_spectral is infinite
};

/// Spectral and physical similarity measurements of the pair. epsilon is
/// computed on the orthogonal complement of the all-ones kernel, which
/// requires both graphs connected.
SimilarityReport spectral_similarity(const GraphPair& pair);

struct Bracket {
    double lower;
    double upper;
};

/// Two-sided bound on the mixed objective from an eps-spectral-approximation
/// certificate (caller supplies eps, typically from spectral_similarity).
Bracket similarity_bracket(const GraphPair& pair, double eps);

struct PhysicalBracket {
    double lower;
    double upper;
    double delta; // exact ||M - L|| used in the bracket
};

/// Bracket from the operator-norm perturbation Delta = ||M - L||:
/// max_i (lambda_i(M) - 2D)/(1 + lambda_i(M) + D)^2 <= value
///   <= max_i (lambda_i(M) + 2D)/(1 + max(lambda_i(M) - D, 0))^2.
PhysicalBracket physical_similarity_bracket(const GraphPair& pair);

/// x^T M x / (n + (||L|| + 2) x^T L x) for a test vector with ||x||^2 = n.
double bad_approx_bound(const GraphPair& pair, const Vector& x);

struct CutBounds {
    double bound_cor;       // 4 cut2 / (n + 8 (maxdeg1 + 1) cut1)
    double bound_cor_exact; // 4 cut2 / (n + 4 (||L|| + 2) cut1)
    double bound_prop;      // (4 cut2 / n) / (1 + 2 sqrt(2) cut1 / sqrt(n))^2
};

/// Per-subset lower bounds on the mixed objective; S must be a nonempty
/// proper subset.
CutBounds cut_bounds(const GraphPair& pair, const NodeSet& s);

enum class SweepMode { Exhaustive, Random };

struct CutSweepResult {
    NodeSet best_prop_set;
    double best_prop;
    NodeSet best_cor_set;
    double best_cor; // degree-form bound
    std::uint64_t evaluated;
};

/// Maximize the cut bounds over subsets. Exhaustive mode enumerates all
/// 2^(n-1) subset classes (n <= 22). Random mode draws `samples` seeded
/// subsets and additionally tries sign and sweep cuts of the relevant
/// eigenvectors, so structured instances are found deterministically.
CutSweepResult cut_bounds_sweep(const GraphPair& pair, SweepMode mode,
                                std::uint64_t samples, std::uint64_t rng_seed);

} // namespace discordlab
