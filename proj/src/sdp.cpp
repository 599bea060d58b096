#include "discordlab/sdp.hpp"

#include <algorithm>
#include <cmath>

#include "discordlab/kernels.hpp"
#include "discordlab/spectral.hpp"

namespace discordlab {
namespace {

// Split w into PSD part (returned) and negative part scaled by -sigma
// (written to xneg): w = plus - (1/sigma) * xneg with both terms PSD.
void split_psd(const SymMatrix& w, double sigma, Matrix& plus, Matrix& xneg) {
    const EigenDecomposition d = eig_sym(w);
    const std::size_t n = w.size();
    Matrix scaled_plus(n, n);
    Matrix scaled_neg(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = d.values[k];
        if (lam > 0.0) {
            for (std::size_t r = 0; r < n; ++r)
                scaled_plus(r, k) = lam * d.vectors(r, k);
        } else if (lam < 0.0) {
            for (std::size_t r = 0; r < n; ++r)
                scaled_neg(r, k) = -sigma * lam * d.vectors(r, k);
        }
    }
    plus = Matrix(n, n);
    xneg = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double p = kernels::dot(scaled_plus.row(i), d.vectors.row(j), n);
            plus(i, j) = p;
            plus(j, i) = p;
            const double q = kernels::dot(scaled_neg.row(i), d.vectors.row(j), n);
            xneg(i, j) = q;
            xneg(j, i) = q;
        }
    }
}

double trace_product(const Matrix& a, const Matrix& b) {
    double t = 0.0;
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t i = 0; i < n; ++i) t += a.data()[i] * b.data()[i];
    return t;
}

} // namespace

ElliptopeSolution solve_elliptope_max(const SymMatrix& cmax, double gap_rel,
                                      int max_iters) {
    const std::size_t n = cmax.size();
    const double cnorm = frobenius_norm(cmax.mat());
    const double trc = cmax.trace();

    ElliptopeSolution out;
    if (cnorm <= 1e-300) { // zero objective: X = I is optimal with value 0
        out.x = Matrix::identity(n);
        out.dual_weights = Vector(n, 0.0);
        out.primal_value = 0.0;
        out.dual_value = 0.0;
        out.gap = 0.0;
        out.iterations = 0;
        return out;
    }

    // Internally minimize <C, X> with C = -cmax.
    const Matrix c = scale(cmax.mat(), -1.0);
    double sigma = static_cast<double>(n) / cnorm;
    Matrix x = Matrix::identity(n);
    Matrix s(n, n);
    Vector y(n, 0.0);

    const double gap_tol = gap_rel * std::max(std::fabs(trc), 1e-12);
    const double feas_tol = 1e-9;

    double primal = 0.0, dual = 0.0;
    int iter = 0;
    bool done = false;
    for (iter = 1; iter <= max_iters; ++iter) {
        // y-step: closed form since diag extraction has identity Gram.
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = (1.0 - x(i, i)) / sigma + c(i, i) - s(i, i);
        }
        // W = C - Diag(y) - X/sigma, split into S (PSD) and new X.
        Matrix w = c;
        for (std::size_t i = 0; i < n; ++i) w(i, i) -= y[i];
        for (std::size_t i = 0; i < n * n; ++i) w.data()[i] -= x.data()[i] / sigma;
        Matrix xnew;
        split_psd(symmetrize(w), sigma, s, xnew);

        double dual_res = 0.0;
        for (std::size_t i = 0; i < n * n; ++i) {
            const double d = (xnew.data()[i] - x.data()[i]) / sigma;
            dual_res += d * d;
        }
        dual_res = std::sqrt(dual_res);
        x = std::move(xnew);

        double primal_res = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            primal_res = std::max(primal_res, std::fabs(x(i, i) - 1.0));

        primal = -trace_product(c, x); // Tr(cmax X)
        dual = 0.0;
        for (std::size_t i = 0; i < n; ++i) dual -= y[i]; // sum of w = -y

        if (std::fabs(primal - dual) <= gap_tol && primal_res <= feas_tol &&
            dual_res <= feas_tol * (1.0 + cnorm)) {
            done = true;
            break;
        }
        if (iter % 100 == 0) { // balance the two residuals
            if (primal_res > 10.0 * dual_res) {
                sigma *= 1.5;
            } else if (dual_res > 10.0 * primal_res) {
                sigma /= 1.5;
            }
        }
    }
    if (!done) {
        throw ConvergenceError("elliptope SDP did not reach the requested gap", y,
                               dual);
    }

    // Certify the dual: lift w until diag(w) - cmax is PSD exactly.
    Vector wts(n);
    for (std::size_t i = 0; i < n; ++i) wts[i] = -y[i];
    {
        Matrix slack = scale(cmax.mat(), -1.0);
        for (std::size_t i = 0; i < n; ++i) slack(i, i) += wts[i];
        const double mu = lambda_min(SymMatrix(std::move(slack)));
        if (mu < 0.0) {
            for (std::size_t i = 0; i < n; ++i) wts[i] -= mu;
        }
    }

    // Make the primal iterate exactly feasible: rescale to unit diagonal.
    for (std::size_t i = 0; i < n; ++i) {
        if (x(i, i) < 0.5) { // collapsed diagonal: fall back to I on that axis
            for (std::size_t j = 0; j < n; ++j) {
                x(i, j) = 0.0;
                x(j, i) = 0.0;
            }
            x(i, i) = 1.0;
        }
    }
    Vector dscale(n);
    for (std::size_t i = 0; i < n; ++i) dscale[i] = 1.0 / std::sqrt(x(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) *= dscale[i] * dscale[j];

    out.x = std::move(x);
    out.dual_weights = std::move(wts);
    out.primal_value = primal;
    out.dual_value = 0.0;
    for (double v : out.dual_weights) out.dual_value += v;
    out.gap = std::fabs(out.dual_value - out.primal_value);
    out.iterations = iter;
    return out;
}

} // namespace discordlab
