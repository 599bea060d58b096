#include "discordlab/defense.hpp"

#include <algorithm>
#include <cmath>

#include "discordlab/kernels.hpp"
#include "discordlab/spectral.hpp"

namespace discordlab {
namespace {

Matrix psd_projection(const SymMatrix& a) {
    const EigenDecomposition d = eig_sym(a);
    const std::size_t n = a.size();
    Matrix scaled(n, n); // column k = max(lambda_k, 0) * v_k
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (d.values[k] <= 0.0) continue;
        any = true;
        for (std::size_t r = 0; r < n; ++r)
            scaled(r, k) = d.values[k] * d.vectors(r, k);
    }
    Matrix p(n, n);
    if (!any) return p;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = kernels::dot(scaled.row(i), d.vectors.row(j), n);
            p(i, j) = v;
            p(j, i) = v;
        }
    }
    return p;
}

double slack_lambda_min(const SymMatrix& sigma_m, const Vector& w) {
    Matrix slack = scale(sigma_m.mat(), -1.0);
    for (std::size_t i = 0; i < w.size(); ++i) slack(i, i) += w[i];
    return lambda_min(SymMatrix(std::move(slack)));
}

double trace_product(const Matrix& a, const Matrix& b) {
    double t = 0.0;
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        t += a.data()[i] * b.data()[i];
    return t;
}

// Lower bound on the optimum from a dual candidate. The dual of
// min h(w) over {diag(w) >= Sigma} evaluates any X >= 0 (with unit diagonal
// for the L1 budget) to Tr(Sigma X) resp. Tr(Sigma X) - sum X_ii^2 / 4;
// x_raw is projected onto the feasible set first.
double dual_bound_from_multiplier(const SymMatrix& sigma_m, const Matrix& x_raw,
                                  BudgetKind kind) {
    const std::size_t n = sigma_m.size();
    Matrix x = psd_projection(symmetrize(x_raw));
    if (kind == BudgetKind::L1) {
        Vector d(n);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = x(i, i) > 1e-12 ? 1.0 / std::sqrt(x(i, i)) : 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x(i, j) *= d[i] * d[j];
        for (std::size_t i = 0; i < n; ++i) x(i, i) = 1.0;
        return trace_product(sigma_m.mat(), x);
    }
    double bound = trace_product(sigma_m.mat(), x);
    for (std::size_t i = 0; i < n; ++i) bound -= 0.25 * x(i, i) * x(i, i);
    return bound;
}

} // namespace

double BudgetFunction::value(const Vector& w) const {
    double acc = 0.0;
    switch (kind) {
        case BudgetKind::L1:
            for (double v : w) acc += std::fabs(v);
            return acc;
        case BudgetKind::SquaredL2:
            for (double v : w) acc += v * v;
            return acc;
    }
    return acc;
}

double BudgetFunction::rescale(const Vector& w) const {
    const double target = h_one(w.size());
    const double hw = value(w);
    if (!(hw > 0.0)) throw ArgumentError("cannot rescale a zero weight vector");
    switch (kind) {
        case BudgetKind::L1:
            return target / hw;
        case BudgetKind::SquaredL2:
            return std::sqrt(target / hw); // positive root
    }
    return 0.0;
}

namespace {

struct DominatorSolution {
    Vector weights;
    double rel_gap; // (ub - lb)/ub at termination
};

DominatorSolution solve_dominating_detail(const SigmaMatrix& sig,
                                          const BudgetFunction& h) {
    const SymMatrix& s = sig.matrix;
    const std::size_t n = s.size();
    const double scale_s = std::max(operator_norm(s), 1e-300);
    for (std::size_t i = 0; i < n; ++i) {
        if (s(i, i) <= 1e-14 * scale_s)
            throw DegenerateInputError(
                "Sigma has a vanishing diagonal entry; weights must stay positive");
    }

    // Splitting iteration on {w : diag(w) - Sigma = S, S PSD}: the S-step
    // separates along the negative eigenvectors of the slack, the w-step is
    // the closed-form budget-objective update, with over-relaxation.
    // Terminates on the duality gap between the feasibility-lifted iterate
    // and the multiplier's dual bound. Small instances are solved to a 1e-9
    // relative gap; larger ones to the 1e-5 working gap.
    const double gap_rel = n <= 32 ? 1e-9 : 1e-5;
    const double relax = 1.6;
    const double lam_top = lambda_max(s);
    Vector w = s.diagonal();
    for (double& v : w) v += lam_top;

    double rho = static_cast<double>(n) / std::max(frobenius_norm(s.mat()), 1e-300);
    Matrix smat(n, n);
    Matrix smat_prev(n, n);
    Matrix u(n, n); // scaled multiplier Z/rho

    double prev_obj = h.value(w);
    int stagnant_rounds = 0;
    const int max_iters = 200000;
    bool done = false;
    DominatorSolution sol{};
    for (int iter = 1; iter <= max_iters; ++iter) {
        // S-step: project diag(w) - Sigma - U onto the PSD cone.
        Matrix arg = scale(s.mat(), -1.0);
        for (std::size_t i = 0; i < n * n; ++i) arg.data()[i] -= u.data()[i];
        for (std::size_t i = 0; i < n; ++i) arg(i, i) += w[i];
        smat_prev = smat;
        smat = psd_projection(symmetrize(arg));

        // relaxed S: relax * projection + (1 - relax) * (diag(w) - Sigma)
        Matrix srel = scale(s.mat(), relax - 1.0);
        for (std::size_t i = 0; i < n * n; ++i)
            srel.data()[i] += relax * smat.data()[i];
        for (std::size_t i = 0; i < n; ++i) srel(i, i) += (1.0 - relax) * w[i];

        // w-step (closed form per coordinate).
        for (std::size_t i = 0; i < n; ++i) {
            const double base = srel(i, i) + s(i, i) + u(i, i);
            if (h.kind == BudgetKind::L1) {
                w[i] = base - 1.0 / rho;
            } else {
                w[i] = rho * base / (2.0 + rho);
            }
        }

        // Multiplier update and residuals.
        double primal_res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double r = srel(i, j) + s(i, j) - (i == j ? w[i] : 0.0);
                u(i, j) += r;
                const double true_r = smat(i, j) + s(i, j) - (i == j ? w[i] : 0.0);
                primal_res += true_r * true_r;
            }
        }
        primal_res = std::sqrt(primal_res);
        double dual_res = 0.0;
        if (iter > 1) {
            for (std::size_t i = 0; i < n * n; ++i) {
                const double d = smat.data()[i] - smat_prev.data()[i];
                dual_res += d * d;
            }
            dual_res = rho * std::sqrt(dual_res);
        }

        const double obj = h.value(w);
        if (std::fabs(prev_obj - obj) < 1e-12 * std::max(1.0, std::fabs(obj))) {
            ++stagnant_rounds;
        } else {
            stagnant_rounds = 0;
        }
        prev_obj = obj;

        const bool settled = primal_res <= 1e-6 * (1.0 + scale_s);
        if ((settled && iter % 25 == 0) || stagnant_rounds >= 5 ||
            iter % 500 == 0) {
            const double mu = slack_lambda_min(s, w);
            Vector lifted = w;
            if (mu < 0.0) {
                for (double& v : lifted) v -= mu;
            }
            const double ub = h.value(lifted);
            const double lb = dual_bound_from_multiplier(s, scale(u, rho), h.kind);
            if (ub - lb <= gap_rel * std::max(1.0, ub)) {
                sol.weights = std::move(lifted);
                sol.rel_gap = std::max(ub - lb, 0.0) / std::max(ub, 1e-300);
                done = true;
                break;
            }
            stagnant_rounds = 0;
        }
        if (iter % 50 == 0) { // keep the two residuals in balance
            if (primal_res > 10.0 * dual_res) {
                rho *= 1.5;
                for (std::size_t i = 0; i < n * n; ++i) u.data()[i] /= 1.5;
            } else if (dual_res > 10.0 * primal_res) {
                rho /= 1.5;
                for (std::size_t i = 0; i < n * n; ++i) u.data()[i] *= 1.5;
            }
        }
    }
    if (!done) {
        throw ConvergenceError("dominating-diagonal solve did not converge", w,
                               prev_obj);
    }
    return sol;
}

} // namespace

Vector solve_dominating_diagonal(const SigmaMatrix& sig, const BudgetFunction& h) {
    return solve_dominating_detail(sig, h).weights;
}

DefenseResult defend(const SymMatrix& laplacian, const ObjectiveSpec& obj,
                     const BudgetFunction& h) {
    const SigmaMatrix sig = sigma(laplacian, obj);
    DominatorSolution sol = solve_dominating_detail(sig, h);
    const double t = h.rescale(sol.weights);

    DefenseResult out;
    out.sdp_weights = sol.weights;
    out.weights = std::move(sol.weights);
    for (double& v : out.weights) v *= t;
    out.defense_value = 1.0 / t;
    out.feasibility_slack = slack_lambda_min(sig.matrix, out.sdp_weights);

    // the solver's certified duality gap, propagated through K = 1/t
    out.k_error = out.defense_value * sol.rel_gap;
    return out;
}

double verify_defense(const SigmaMatrix& sig, const Vector& weights) {
    const SymMatrix& s = sig.matrix;
    const std::size_t n = s.size();
    if (weights.size() != n) throw ArgumentError("weight vector dimension mismatch");
    Vector root(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(weights[i] > 0.0)) throw ArgumentError("weights must be strictly positive");
        root[i] = 1.0 / std::sqrt(weights[i]);
    }
    Matrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) = root[i] * s(i, j) * root[j];
    return lambda_max(symmetrize(scaled));
}

} // namespace discordlab
