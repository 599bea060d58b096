#include "discordlab/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "discordlab/graph.hpp"
#include "discordlab/kernels.hpp"
#include "discordlab/parallel.hpp"
#include "discordlab/rng.hpp"
#include "discordlab/sdp.hpp"

namespace discordlab {
namespace {

double g_disagreement(double x) { return x / ((1.0 + x) * (1.0 + x)); }

double kernel_tolerance(const std::vector<double>& values) {
    const double top = values.empty() ? 0.0 : std::fabs(values.back());
    return 1e-8 * std::max(1.0, top);
}

// Eigenvalues grouped into numerically distinct eigenspaces.
struct Cluster {
    std::size_t start;
    std::size_t count;
    double lambda;
};

std::vector<Cluster> cluster_spectrum(const std::vector<double>& values) {
    std::vector<Cluster> clusters;
    if (values.empty()) return clusters;
    double scale = std::max(std::fabs(values.front()), std::fabs(values.back()));
    const double tol = 1e-7 * std::max(scale, 1.0);
    std::size_t start = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] > tol) {
            clusters.push_back({start, i - start, values[start]});
            start = i;
        }
    }
    return clusters;
}

void require_connected_laplacian(const SymMatrix& l, const EigenDecomposition& ed) {
    const std::size_t n = l.size();
    const double scale = std::max(max_abs(l.mat()), 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) row_sum += l(i, j);
        if (std::fabs(row_sum) > 1e-8 * scale)
            throw ArgumentError("matrix is not a graph Laplacian (row sums nonzero)");
    }
    const double ktol = kernel_tolerance(ed.values);
    if (std::fabs(ed.values.front()) > ktol)
        throw ArgumentError("matrix is not a graph Laplacian (no zero eigenvalue)");
    if (n >= 2 && ed.values[1] <= ktol)
        throw ArgumentError("graph is disconnected (repeated zero eigenvalue)");
}

Matrix scaled_basis(const EigenDecomposition& ed,
                    const std::vector<Cluster>& picks, double r) {
    const std::size_t n = ed.values.size();
    std::size_t cols = 0;
    for (const Cluster& c : picks) cols += c.count;
    Matrix basis(n, cols);
    std::size_t out = 0;
    for (const Cluster& c : picks) {
        for (std::size_t k = c.start; k < c.start + c.count; ++k, ++out) {
            for (std::size_t row = 0; row < n; ++row)
                basis(row, out) = r * ed.vectors(row, k);
        }
    }
    return basis;
}

} // namespace

ObjectiveSpec ObjectiveSpec::disagreement(double r) {
    return {ObjectiveKind::Disagreement, r, 0, false};
}
ObjectiveSpec ObjectiveSpec::repeated(long t, double r) {
    if (t < 0) throw ArgumentError("horizon must be nonnegative");
    return {ObjectiveKind::RepeatedDisagreement, r, t, false};
}
ObjectiveSpec ObjectiveSpec::repeated_infinite(double r) {
    return {ObjectiveKind::RepeatedDisagreement, r, 0, true};
}
ObjectiveSpec ObjectiveSpec::polarization_disagreement(double r) {
    return {ObjectiveKind::PolarizationDisagreement, r, 0, false};
}
ObjectiveSpec ObjectiveSpec::displacement(double r) {
    return {ObjectiveKind::AbsoluteDisplacement, r, 0, false};
}

double ObjectiveSpec::f(double y) const {
    switch (kind) {
        case ObjectiveKind::Disagreement:
            return y;
        case ObjectiveKind::AbsoluteDisplacement:
            return 1.0;
        case ObjectiveKind::RepeatedDisagreement: {
            const double p = 1.0 + y;
            if (infinite_horizon) return y > 0.0 ? p * p / (2.0 + y) : 0.0;
            return (p * p - std::pow(p, -2.0 * static_cast<double>(horizon))) /
                   (2.0 + y);
        }
        case ObjectiveKind::PolarizationDisagreement:
            break;
    }
    throw ArgumentError("polarization-disagreement is not an f(L) objective");
}

double ObjectiveSpec::sigma_eigenvalue(double y, double kernel_tol) const {
    switch (kind) {
        case ObjectiveKind::Disagreement:
            return g_disagreement(y);
        case ObjectiveKind::AbsoluteDisplacement:
            return 1.0 / ((1.0 + y) * (1.0 + y));
        case ObjectiveKind::RepeatedDisagreement: {
            if (infinite_horizon) return y > kernel_tol ? 1.0 / (2.0 + y) : 0.0;
            // (1 - (1+y)^{-2(T+1)}) / (2+y), stable for small y
            const double e =
                -std::expm1(-2.0 * (static_cast<double>(horizon) + 1.0) *
                            std::log1p(y));
            return e / (2.0 + y);
        }
        case ObjectiveKind::PolarizationDisagreement:
            break;
    }
    throw ArgumentError("polarization-disagreement is not an f(L) objective");
}

SigmaMatrix sigma(const SymMatrix& laplacian, const ObjectiveSpec& obj) {
    if (obj.kind == ObjectiveKind::PolarizationDisagreement) {
        throw ArgumentError(
            "polarization-disagreement has no Sigma form; use pd_optimal");
    }
    const EigenDecomposition ed = eig_sym(laplacian);
    require_connected_laplacian(laplacian, ed);
    const double ktol = kernel_tolerance(ed.values);
    SymMatrix m = matrix_function(
        ed, [&](double y) { return obj.sigma_eigenvalue(y, ktol); });
    return SigmaMatrix{std::move(m)};
}

AttackResult l2_attack(const SymMatrix& laplacian, const ObjectiveSpec& obj) {
    if (!(obj.budget > 0.0)) throw ArgumentError("budget must be positive");
    if (obj.kind == ObjectiveKind::PolarizationDisagreement)
        return pd_optimal(laplacian, obj.budget);

    const EigenDecomposition ed = eig_sym(laplacian);
    require_connected_laplacian(laplacian, ed);
    const double ktol = kernel_tolerance(ed.values);
    const std::vector<Cluster> clusters = cluster_spectrum(ed.values);

    double best = -1.0;
    std::vector<double> cluster_value(clusters.size(), -1.0);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        // The repeated game maxes over the nontrivial spectrum only.
        if (obj.kind == ObjectiveKind::RepeatedDisagreement &&
            clusters[c].lambda <= ktol) {
            continue;
        }
        cluster_value[c] = obj.sigma_eigenvalue(clusters[c].lambda, ktol);
        best = std::max(best, cluster_value[c]);
    }
    if (best < 0.0) throw ArgumentError("objective has no admissible eigenvalue");

    std::vector<Cluster> winners;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        if (cluster_value[c] >= best - 1e-9 * std::max(best, 1e-30) &&
            cluster_value[c] >= 0.0) {
            winners.push_back(clusters[c]);
        }
    }

    AttackResult out;
    out.optimal_value = obj.budget * obj.budget * best;
    out.argmax_eigenvalue = winners.front().lambda;
    out.argmax_index = static_cast<int>(winners.front().start) + 1;
    out.seed_basis = scaled_basis(ed, winners, obj.budget);
    out.is_unique_eigenspace = winners.size() == 1;
    return out;
}

std::vector<SweepPoint> t_sweep(const SymMatrix& laplacian, int resolution) {
    if (resolution < 2) throw ArgumentError("sweep resolution must be >= 2");
    const EigenDecomposition ed = eig_sym(laplacian);
    require_connected_laplacian(laplacian, ed);
    const double ktol = kernel_tolerance(ed.values);
    const std::vector<Cluster> clusters = cluster_spectrum(ed.values);

    std::vector<Cluster> nonzero;
    for (const Cluster& c : clusters)
        if (c.lambda > ktol) nonzero.push_back(c);
    if (nonzero.empty()) throw ArgumentError("graph has no edges to sweep");

    const double lam2 = nonzero.front().lambda;
    const double lamn = nonzero.back().lambda;
    const double t_lo = 0.1 / lamn;
    const double t_hi = 10.0 / lam2;

    std::vector<double> ts;
    const double decades = std::log10(t_hi / t_lo);
    const int grid_points = static_cast<int>(std::ceil(decades * resolution)) + 1;
    for (int k = 0; k < grid_points; ++k) {
        ts.push_back(t_lo * std::pow(10.0, static_cast<double>(k) / resolution));
    }
    for (const Cluster& c : nonzero) ts.push_back(1.0 / c.lambda);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<SweepPoint> out(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        const double t = ts[i];
        std::size_t best_c = 0;
        double best_v = -1.0;
        for (std::size_t c = 0; c < nonzero.size(); ++c) {
            const double v = g_disagreement(t * nonzero[c].lambda);
            if (v > best_v) {
                best_v = v;
                best_c = c;
            }
        }
        out[i] = {t, static_cast<int>(nonzero[best_c].start) + 1,
                  nonzero[best_c].lambda, best_v};
    });
    return out;
}

AttackResult pd_optimal(const SymMatrix& laplacian, double budget) {
    if (!(budget > 0.0)) throw ArgumentError("budget must be positive");
    const EigenDecomposition ed = eig_sym(laplacian);
    require_connected_laplacian(laplacian, ed);
    const double ktol = kernel_tolerance(ed.values);
    const std::vector<Cluster> clusters = cluster_spectrum(ed.values);

    const Cluster* fiedler = nullptr;
    for (const Cluster& c : clusters) {
        if (c.lambda > ktol) {
            fiedler = &c;
            break;
        }
    }
    if (fiedler == nullptr) throw ArgumentError("graph has no nontrivial eigenvalue");

    AttackResult out;
    out.optimal_value = budget * budget / (1.0 + fiedler->lambda);
    out.argmax_eigenvalue = fiedler->lambda;
    out.argmax_index = static_cast<int>(fiedler->start) + 1;
    out.seed_basis = scaled_basis(ed, {*fiedler}, budget);
    out.is_unique_eigenspace = true;

    // Evaluate the de-meaned quadratic form at every returned seed.
    const std::size_t n = laplacian.size();
    const Cholesky solver(sym_add(laplacian, sym_identity(n)));
    for (std::size_t c = 0; c < out.seed_basis.cols(); ++c) {
        Vector s = out.seed_basis.column(c);
        double mean = 0.0;
        for (double v : s) mean += v;
        mean /= static_cast<double>(n);
        for (double& v : s) v -= mean;
        const double val = dot(s, solver.solve(s));
        if (std::fabs(val - out.optimal_value) >
            1e-8 * std::max(out.optimal_value, 1e-30)) {
            throw ConvergenceError("pd_optimal seed failed verification", s, val);
        }
    }
    return out;
}

SdpAttack linf_attack_sdp(const SigmaMatrix& sig) {
    const SymMatrix& s = sig.matrix;
    const double scale = std::max(operator_norm(s), 1e-300);
    if (lambda_min(s) < -1e-8 * scale)
        throw ArgumentError("Sigma must be positive semidefinite");

    const ElliptopeSolution sol = solve_elliptope_max(s);

    const std::size_t n = s.size();
    const EigenDecomposition xd = eig_sym(symmetrize(sol.x));
    Matrix gram(n, n); // column i = x_i
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::max(xd.values[k], 0.0);
        const double root = std::sqrt(lam);
        for (std::size_t i = 0; i < n; ++i) gram(k, i) = root * xd.vectors(i, k);
    }
    for (std::size_t i = 0; i < n; ++i) { // renormalize each x_i to unit length
        double nrm = 0.0;
        for (std::size_t k = 0; k < n; ++k) nrm += gram(k, i) * gram(k, i);
        nrm = std::sqrt(nrm);
        if (nrm > 0.0) {
            for (std::size_t k = 0; k < n; ++k) gram(k, i) /= nrm;
        } else {
            gram(i, i) = 1.0;
        }
    }

    SdpAttack out;
    out.sdp_value = sol.dual_value;
    out.gram_vectors = std::move(gram);
    out.dual_weights = sol.dual_weights;
    out.gap = sol.gap;
    out.iterations = sol.iterations;
    return out;
}

SignVector linf_round(const SigmaMatrix& sig, const Matrix& gram_vectors,
                      int trials, std::uint64_t rng_seed) {
    if (trials < 1) throw ArgumentError("rounding needs at least one trial");
    const std::size_t n = sig.matrix.size();
    if (gram_vectors.cols() != n)
        throw ArgumentError("gram vector count does not match Sigma");
    const std::size_t dim = gram_vectors.rows();
    const Matrix xt = transpose(gram_vectors); // row i = x_i
    const CounterRng rng(rng_seed);

    auto round_once = [&](std::size_t trial, Vector& signs) {
        Vector h(dim);
        for (std::size_t j = 0; j < dim; ++j)
            h[j] = rng.gaussian(trial * dim + j);
        signs.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double ip = kernels::dot(xt.row(i), h.data(), dim);
            signs[i] = ip >= 0.0 ? 1.0 : -1.0;
        }
        return quad_form(sig.matrix, signs);
    };

    const auto [best_trial, best_value] = parallel_argmax(
        static_cast<std::size_t>(trials), [&](std::size_t t) {
            Vector s;
            return round_once(t, s);
        });

    SignVector out;
    out.value = best_value;
    round_once(best_trial, out.signs);
    if (out.signs[0] < 0.0) { // canonical global sign
        for (double& v : out.signs) v = -v;
    }
    return out;
}

SignVector linf_brute(const SigmaMatrix& sig) {
    const std::size_t n = sig.matrix.size();
    if (n > 22) throw ArgumentError("brute-force enumeration is limited to n <= 22");
    const Matrix& m = sig.matrix.mat();

    Vector s(n, 1.0);
    Vector q(n); // q = Sigma s, maintained incrementally
    for (std::size_t i = 0; i < n; ++i) q[i] = kernels::dot(m.row(i), s.data(), n);
    double value = dot(s, q);

    Vector best_s = s;
    double best = value;
    if (n >= 2) {
        const std::uint64_t count = 1ULL << (n - 1); // quotient the global flip
        for (std::uint64_t k = 1; k < count; ++k) {
            const int bit = __builtin_ctzll(k); // Gray-code flip position
            const double delta = -2.0 * s[bit];
            value += 2.0 * delta * q[bit] + delta * delta * m(bit, bit);
            s[bit] += delta;
            kernels::axpy(delta, m.row(bit), q.data(), n);
            if (value > best) {
                best = value;
                best_s = s;
            }
        }
    }
    if (best_s[0] < 0.0) {
        for (double& v : best_s) v = -v;
    }
    return {best_s, best};
}

L1Attack l1_attack(const SigmaMatrix& sig) {
    const SymMatrix& s = sig.matrix;
    const std::size_t n = s.size();
    L1Attack out{0, s(0, 0), 0.0, 0.0};
    for (std::size_t i = 1; i < n; ++i) {
        if (s(i, i) > out.value) {
            out.value = s(i, i);
            out.index = static_cast<int>(i);
        }
    }
    out.lower_bound = s.trace() / static_cast<double>(n);
    out.upper_bound = lambda_max(s);
    return out;
}

double sparsity_bound(const SymMatrix& laplacian, int k) {
    if (k < 0) throw ArgumentError("sparsity must be nonnegative");
    if (k == 0) return 0.0;
    const EigenDecomposition ed = eig_sym(laplacian);
    require_connected_laplacian(laplacian, ed);
    double lam_sigma = 0.0;
    for (double v : ed.values) lam_sigma = std::max(lam_sigma, g_disagreement(v));
    double d_max = 0.0;
    for (std::size_t i = 0; i < laplacian.size(); ++i)
        d_max = std::max(d_max, laplacian(i, i));
    const double kd = static_cast<double>(k);
    const double rootk = std::sqrt(kd);
    const double rootn = std::sqrt(static_cast<double>(laplacian.size()));
    return lam_sigma * kd +
           rootk * std::min(2.0 * d_max * rootk, 2.0 * lam_sigma * rootn);
}

double clique_sparsity_example(int n, int k) {
    if (n < 2) throw ArgumentError("clique example needs n >= 2");
    if (k < 1 || k > n) throw ArgumentError("k must satisfy 1 <= k <= n");
    const Graph kn = complete_graph(n, n * (n - 1) / 2.0); // unit weights
    const SymMatrix l = sym_scale(laplacian(kn), 1.0 / n);
    const SigmaMatrix sig = sigma(l, ObjectiveSpec::disagreement());
    Vector s(n, 0.0);
    for (int i = 0; i < k; ++i) s[i] = 1.0;
    return quad_form(sig.matrix, s);
}

} // namespace discordlab
