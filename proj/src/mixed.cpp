#include "discordlab/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "discordlab/parallel.hpp"
#include "discordlab/rng.hpp"
#include "discordlab/spectral.hpp"

namespace discordlab {
namespace {

double g_dis(double x) { return x / ((1.0 + x) * (1.0 + x)); }

SymMatrix mixed_operator(const GraphPair& pair) {
    const SymMatrix l = laplacian(pair.g1);
    const SymMatrix m = laplacian(pair.g2);
    const std::size_t n = l.size();
    const Matrix binv = Cholesky(sym_add(l, sym_identity(n))).inverse();
    return symmetrize(multiply(multiply(binv, m.mat()), binv));
}

// B^{+/2} restricted to eigenvalues above ktol.
Matrix pseudo_inv_sqrt(const EigenDecomposition& d, double ktol) {
    const std::size_t n = d.values.size();
    Matrix p(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (d.values[k] <= ktol) continue;
        const double coef = 1.0 / std::sqrt(d.values[k]);
        const Vector v = d.vectors.column(k);
        for (std::size_t i = 0; i < n; ++i) {
            const double ci = coef * v[i];
            double* row = p.row(i);
            for (std::size_t j = 0; j < n; ++j) row[j] += ci * v[j];
        }
    }
    return p;
}

double gen_lambda_max(const SymMatrix& a, const EigenDecomposition& b_eig,
                      double ktol) {
    const Matrix p = pseudo_inv_sqrt(b_eig, ktol);
    const Matrix g = multiply(multiply(p, a.mat()), p);
    return lambda_max(symmetrize(g));
}

struct SweepContext {
    int n;
    double norm_l;
    double maxdeg1;

    double prop(double cut1, double cut2) const {
        const double rootn = std::sqrt(static_cast<double>(n));
        const double den = 1.0 + 2.0 * std::sqrt(2.0) * cut1 / rootn;
        return (4.0 * cut2 / n) / (den * den);
    }
    double cor(double cut1, double cut2) const {
        return 4.0 * cut2 / (n + 8.0 * (maxdeg1 + 1.0) * cut1);
    }
    double cor_exact(double cut1, double cut2) const {
        return 4.0 * cut2 / (n + 4.0 * (norm_l + 2.0) * cut1);
    }
};

void cuts_for_mask(const GraphPair& pair, const std::vector<char>& mask,
                   double& cut1, double& cut2) {
    cut1 = 0.0;
    for (const Edge& e : pair.g1.edges())
        if (mask[e.u] != mask[e.v]) cut1 += e.w;
    cut2 = 0.0;
    for (const Edge& e : pair.g2.edges())
        if (mask[e.u] != mask[e.v]) cut2 += e.w;
}

NodeSet mask_to_set(const std::vector<char>& mask) {
    std::vector<int> members;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) members.push_back(static_cast<int>(i));
    return NodeSet(std::move(members));
}

bool proper_nonempty(const std::vector<char>& mask) {
    bool any = false, all = true;
    for (char c : mask) {
        any = any || c;
        all = all && c;
    }
    return any && !all;
}

// Sign and sweep cuts of an eigenvector: the subsets a spectral heuristic
// would examine first.
void push_vector_cuts(const Vector& v, std::vector<std::vector<char>>& out) {
    const std::size_t n = v.size();
    std::vector<char> sign(n, 0);
    for (std::size_t i = 0; i < n; ++i) sign[i] = v[i] > 0.0 ? 1 : 0;
    if (proper_nonempty(sign)) out.push_back(sign);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    std::vector<char> prefix(n, 0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        prefix[order[k]] = 1;
        out.push_back(prefix);
    }
}

} // namespace

GraphPair::GraphPair(Graph opinion, Graph measurement)
    : g1(std::move(opinion)), g2(std::move(measurement)) {
    if (g1.node_count() != g2.node_count())
        throw ArgumentError("graph pair must share the node count");
}

double mixed_objective(const GraphPair& pair) {
    return std::max(lambda_max(mixed_operator(pair)), 0.0);
}

double mixed_lower_bound(const GraphPair& pair) {
    const EigenDecomposition dl = eig_sym(laplacian(pair.g1));
    const EigenDecomposition dm = eig_sym(laplacian(pair.g2));
    double best = 0.0;
    for (std::size_t k = 0; k < dl.values.size(); ++k) {
        const double den = 1.0 + std::max(dl.values[k], 0.0);
        best = std::max(best, std::max(dm.values[k], 0.0) / (den * den));
    }
    return best;
}

MatBound matbound(const SymMatrix& b, const SymMatrix& c) {
    if (b.size() != c.size()) throw ArgumentError("matbound dimension mismatch");
    const EigenDecomposition db = eig_sym(b);
    const EigenDecomposition dc = eig_sym(c);
    const double sb = std::max(std::fabs(db.values.back()), 1e-300);
    const double sc = std::max(std::fabs(dc.values.back()), 1e-300);
    if (db.values.front() < -1e-8 * sb || dc.values.front() < -1e-8 * sc)
        throw ArgumentError("matbound requires positive semidefinite inputs");

    const std::size_t n = b.size();
    MatBound out{0.0, 0.0};
    for (std::size_t k = 1; k <= n; ++k) {
        const double cv = std::max(dc.values[n - k], 0.0);
        const double bv = std::max(db.values[k - 1], 0.0);
        out.lower = std::max(out.lower, cv * cv * bv);
    }
    out.upper = std::max(dc.values.back(), 0.0) * std::max(dc.values.back(), 0.0) *
                std::max(db.values.back(), 0.0);
    return out;
}

SimilarityReport spectral_similarity(const GraphPair& pair) {
    const SymMatrix l = laplacian(pair.g1);
    const SymMatrix m = laplacian(pair.g2);
    const std::size_t n = l.size();

    SimilarityReport rep{};
    rep.delta_operator = operator_norm(sym_subtract(m, l));

    rep.eta = 0.0;
    rep.gamma = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double diff = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            diff += std::fabs(l(i, j) - m(i, j)); // off-diagonals are -w
        }
        rep.eta = std::max(rep.eta, diff);
        rep.gamma = std::max(rep.gamma, std::fabs(l(i, i) - m(i, i)));
    }

    if (!pair.g1.connected() || !pair.g2.connected()) {
        rep.finite = false;
        rep.epsilon_spectral = std::numeric_limits<double>::infinity();
        rep.diagnostic =
            "kernels differ: both graphs must be connected for a finite epsilon";
        return rep;
    }

    const EigenDecomposition dl = eig_sym(l);
    const EigenDecomposition dm = eig_sym(m);
    const double ktol_l = 1e-8 * std::max(1.0, dl.values.back());
    const double ktol_m = 1e-8 * std::max(1.0, dm.values.back());
    const double grow = gen_lambda_max(m, dl, ktol_l); // M <= (1+eps) L
    const double shrink = gen_lambda_max(l, dm, ktol_m); // L <= (1+eps) M
    rep.epsilon_spectral = std::max(std::max(grow, shrink) - 1.0, 0.0);
    rep.finite = true;
    return rep;
}

Bracket similarity_bracket(const GraphPair& pair, double eps) {
    if (eps < 0.0) throw ArgumentError("eps must be nonnegative");
    const EigenDecomposition dm = eig_sym(laplacian(pair.g2));
    const double c_lo = 1.0 / (1.0 + eps);
    const double c_hi = 1.0 + eps;

    Bracket out{0.0, 0.0};
    for (double lam : dm.values) {
        const double lam_pos = std::max(lam, 0.0);
        const double u_lo = c_lo * lam_pos;
        const double u_hi = c_hi * lam_pos;
        // c -> g(c*lam) is unimodal with peak at c*lam = 1.
        const double max_c = (u_lo <= 1.0 && 1.0 <= u_hi)
                                 ? 0.25
                                 : g_dis(std::clamp(1.0, u_lo, u_hi));
        const double min_c = std::min(g_dis(u_lo), g_dis(u_hi));
        out.lower = std::max(out.lower, min_c);
        out.upper = std::max(out.upper, max_c);
    }
    out.lower *= c_lo;
    out.upper *= c_hi;
    return out;
}

PhysicalBracket physical_similarity_bracket(const GraphPair& pair) {
    const SymMatrix l = laplacian(pair.g1);
    const SymMatrix m = laplacian(pair.g2);
    const double delta = operator_norm(sym_subtract(m, l));
    const EigenDecomposition dm = eig_sym(m);

    PhysicalBracket out{-std::numeric_limits<double>::infinity(), 0.0, delta};
    for (double lam : dm.values) {
        const double lo_num = lam - 2.0 * delta;
        const double lo_den = 1.0 + lam + delta;
        out.lower = std::max(out.lower, lo_num / (lo_den * lo_den));
        const double hi_num = lam + 2.0 * delta;
        const double hi_den = 1.0 + std::max(lam - delta, 0.0);
        out.upper = std::max(out.upper, hi_num / (hi_den * hi_den));
    }
    return out;
}

double bad_approx_bound(const GraphPair& pair, const Vector& x) {
    const std::size_t n = static_cast<std::size_t>(pair.g1.node_count());
    if (x.size() != n) throw ArgumentError("test vector dimension mismatch");
    const double nn = static_cast<double>(n);
    const double sq = dot(x, x);
    if (std::fabs(sq - nn) > 1e-8 * nn)
        throw ArgumentError("test vector must satisfy ||x||^2 = n");
    const SymMatrix l = laplacian(pair.g1);
    const SymMatrix m = laplacian(pair.g2);
    const double eps = quad_form(l, x);
    const double eta = quad_form(m, x);
    return eta / (nn + (lambda_max(l) + 2.0) * eps);
}

CutBounds cut_bounds(const GraphPair& pair, const NodeSet& s) {
    const int n = pair.g1.node_count();
    const std::vector<char> mask = s.mask(n);
    if (!proper_nonempty(mask))
        throw ArgumentError("cut bounds need a nonempty proper subset");

    SweepContext ctx{n, lambda_max(laplacian(pair.g1)), pair.g1.max_degree()};
    double cut1 = 0.0, cut2 = 0.0;
    cuts_for_mask(pair, mask, cut1, cut2);
    return {ctx.cor(cut1, cut2), ctx.cor_exact(cut1, cut2), ctx.prop(cut1, cut2)};
}

CutSweepResult cut_bounds_sweep(const GraphPair& pair, SweepMode mode,
                                std::uint64_t samples, std::uint64_t rng_seed) {
    const int n = pair.g1.node_count();
    CutSweepResult out{};
    out.best_prop = 0.0;
    out.best_cor = 0.0;
    out.evaluated = 0;
    if (n < 2) return out; // no proper nonempty subsets exist

    SweepContext ctx{n, lambda_max(laplacian(pair.g1)), pair.g1.max_degree()};

    if (mode == SweepMode::Exhaustive) {
        if (n > 22) throw ArgumentError("exhaustive sweep is limited to n <= 22");
        const std::uint64_t count = (1ULL << (n - 1)) - 1; // node n-1 stays out
        auto mask_of = [&](std::uint64_t idx) {
            std::vector<char> mask(n, 0);
            const std::uint64_t bits = idx + 1;
            for (int i = 0; i + 1 < n; ++i) mask[i] = (bits >> i) & 1ULL;
            return mask;
        };
        auto eval = [&](auto bound) {
            return parallel_argmax(count, [&](std::size_t idx) {
                const std::vector<char> mask = mask_of(idx);
                double c1 = 0.0, c2 = 0.0;
                cuts_for_mask(pair, mask, c1, c2);
                return bound(c1, c2);
            });
        };
        const auto [pi, pv] = eval([&](double a, double b) { return ctx.prop(a, b); });
        const auto [ci, cv] = eval([&](double a, double b) { return ctx.cor(a, b); });
        out.best_prop = pv;
        out.best_prop_set = mask_to_set(mask_of(pi));
        out.best_cor = cv;
        out.best_cor_set = mask_to_set(mask_of(ci));
        out.evaluated = count;
        return out;
    }

    // Random mode: seeded subsets plus deterministic spectral candidates.
    std::vector<std::vector<char>> structured;
    {
        const SymMatrix mixed = mixed_operator(pair);
        const EigenDecomposition dmix = eig_sym(mixed);
        push_vector_cuts(dmix.vectors.column(n - 1), structured);
        const EigenDecomposition dm = eig_sym(laplacian(pair.g2));
        push_vector_cuts(dm.vectors.column(n - 1), structured);
        const EigenDecomposition dl = eig_sym(laplacian(pair.g1));
        if (n >= 2) push_vector_cuts(dl.vectors.column(1), structured);
    }

    const CounterRng rng(rng_seed);
    const std::uint64_t total = samples + structured.size();
    auto mask_of = [&](std::uint64_t idx) {
        if (idx < samples) {
            std::vector<char> mask(n, 0);
            for (int j = 0; j < n; ++j)
                mask[j] = rng.uniform(idx * static_cast<std::uint64_t>(n) + j) < 0.5;
            if (!proper_nonempty(mask)) { // rare; force a valid subset
                std::fill(mask.begin(), mask.end(), 0);
                mask[idx % n] = 1;
            }
            return mask;
        }
        return structured[idx - samples];
    };
    auto eval = [&](auto bound) {
        return parallel_argmax(total, [&](std::size_t idx) {
            const std::vector<char> mask = mask_of(idx);
            double c1 = 0.0, c2 = 0.0;
            cuts_for_mask(pair, mask, c1, c2);
            return bound(c1, c2);
        });
    };
    if (total > 0) {
        const auto [pi, pv] = eval([&](double a, double b) { return ctx.prop(a, b); });
        const auto [ci, cv] = eval([&](double a, double b) { return ctx.cor(a, b); });
        out.best_prop = pv;
        out.best_prop_set = mask_to_set(mask_of(pi));
        out.best_cor = cv;
        out.best_cor_set = mask_to_set(mask_of(ci));
    }
    out.evaluated = total;
    return out;
}

} // namespace discordlab
