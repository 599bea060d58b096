#pragma once

#include "discordlab/adversary.hpp"
#include "discordlab/linalg.hpp"

namespace discordlab {

enum class BudgetKind { L1, SquaredL2 };

/// Defender resource constraint h with h(w) = h(1) enforced; both instances
/// are nonnegative, convex and radially homogeneous (g(a) = a resp. a^2).
struct BudgetFunction {
    BudgetKind kind = BudgetKind::L1;

    static BudgetFunction l1() { return {BudgetKind::L1}; }
    static BudgetFunction squared_l2() { return {BudgetKind::SquaredL2}; }

    double value(const Vector& w) const;
    double h_one(std::size_t n) const { return static_cast<double>(n); }
    /// Closed-form t >= 0 with h(t*w) = h(1).
    double rescale(const Vector& w) const;
};

/// Step 1 of the defender procedure: minimize h over diagonal matrices
/// dominating Sigma in the Loewner order. The returned weights are lifted
/// to exact feasibility, so lambda_min(diag(w) - Sigma) >= 0 up to the
/// eigensolver's resolution.
Vector solve_dominating_diagonal(const SigmaMatrix& sig, const BudgetFunction& h);

struct DefenseResult {
    Vector weights;           // w*, normalized to h(w*) = h(1)
    double defense_value;     // K, the min-max optimum
    Vector sdp_weights;       // w' before rescaling
    double feasibility_slack; // lambda_min(diag(w') - Sigma)
    double k_error;           // propagated solver-accuracy bar on K
};

/// Full defender procedure: dominate, rescale to the budget, K = 1/t.
DefenseResult defend(const SymMatrix& laplacian, const ObjectiveSpec& obj,
                     const BudgetFunction& h);

/// Exact inner maximization for fixed positive weights:
/// lambda_max(W^{-1/2} Sigma W^{-1/2}); the independent oracle for defend.
double verify_defense(const SigmaMatrix& sig, const Vector& weights);

} // namespace discordlab
