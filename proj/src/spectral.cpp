#include "discordlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "discordlab/kernels.hpp"

namespace discordlab {
namespace {

double offdiag_abs_sum(const Matrix& a) {
    double sm = 0.0;
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.cols(); ++q) sm += std::fabs(a(p, q));
    return sm;
}

double pythag(double a, double b) {
    const double absa = std::fabs(a);
    const double absb = std::fabs(b);
    if (absa > absb) {
        const double r = absb / absa;
        return absa * std::sqrt(1.0 + r * r);
    }
    if (absb == 0.0) return 0.0;
    const double r = absa / absb;
    return absb * std::sqrt(1.0 + r * r);
}

// Sort eigenvalues ascending; row k of vt is the eigenvector for d[k].
EigenDecomposition sorted_decomposition(std::vector<double> d, const Matrix& vt) {
    const std::size_t n = d.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        const double* row = vt.row(order[k]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = row[r];
    }
    return out;
}

// Householder reduction to tridiagonal form; on return z holds the
// accumulated orthogonal transform (column k pairs with d[k]/e[k]).
void tred2(Matrix& z, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = d.size();
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (std::size_t k = 0; k < i; ++k) scale += std::fabs(z(i, k));
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (std::size_t k = 0; k < i; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j < i; ++j) {
                    z(j, i) = z(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k < j + 1; ++k) g += z(j, k) * z(i, k);
                    for (std::size_t k = j + 1; k < i; ++k) g += z(k, j) * z(i, k);
                    e[j] = g / h;
                    f += e[j] * z(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j < i; ++j) {
                    f = z(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k < j + 1; ++k)
                        z(j, k) -= f * e[k] + g * z(i, k);
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] != 0.0) {
            for (std::size_t j = 0; j < i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k < i; ++k) g += z(i, k) * z(k, j);
                for (std::size_t k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
            }
        }
        d[i] = z(i, i);
        z(i, i) = 1.0;
        for (std::size_t j = 0; j < i; ++j) z(j, i) = z(i, j) = 0.0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e); zt rows accumulate the
// eigenvectors so the inner rotation runs through the contiguous kernel.
void tqli(std::vector<double>& d, std::vector<double>& e, Matrix& zt) {
    const std::size_t n = d.size();
    const double eps = std::numeric_limits<double>::epsilon();
    const auto& K = kernels::active();
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) {
                    throw ConvergenceError("QL iteration failed to settle", d,
                                           std::fabs(e[l]));
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = pythag(g, 1.0);
                const double sign_r = g >= 0.0 ? std::fabs(r) : -std::fabs(r);
                g = d[m] - d[l] + e[l] / (g + sign_r);
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    e[i + 1] = r = pythag(f, g);
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                    K.rot(zt.row(i), zt.row(i + 1), c, s, n);
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

EigenDecomposition eig_sym(const SymMatrix& sym) {
    const std::size_t n = sym.size();
    if (n == 0) return {};
    if (n == 1) {
        EigenDecomposition out;
        out.values = {sym(0, 0)};
        out.vectors = Matrix::identity(1);
        return out;
    }
    Matrix z = sym.mat();
    std::vector<double> d(n), e(n);
    tred2(z, d, e);
    Matrix zt = transpose(z); // rows become the tracked eigenvectors
    tqli(d, e, zt);
    return sorted_decomposition(std::move(d), zt);
}

EigenDecomposition eig_sym_jacobi(const SymMatrix& sym) {
    const std::size_t n = sym.size();
    Matrix a = sym.mat();
    Matrix vt = Matrix::identity(n); // row k accumulates eigenvector k
    std::vector<double> d(n), b(n), z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) b[i] = d[i] = a(i, i);

    const double scale = std::max(frobenius_norm(a), 1e-300);
    const auto& K = kernels::active();
    constexpr int kMaxSweeps = 100;
    bool converged = false;

    for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
        const double sm = offdiag_abs_sum(a);
        if (sm <= 1e-12 * scale) {
            converged = true;
            break;
        }
        const double tresh = sweep < 4 ? 0.2 * sm / (n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                const double g = 100.0 * std::fabs(apq);
                if (sweep > 4 && std::fabs(d[p]) + g == std::fabs(d[p]) &&
                    std::fabs(d[q]) + g == std::fabs(d[q])) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                if (std::fabs(apq) <= tresh) continue;

                double t;
                const double h = d[q] - d[p];
                if (std::fabs(h) + g == std::fabs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double hh = t * apq;
                z[p] -= hh;
                z[q] += hh;
                d[p] -= hh;
                d[q] += hh;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                // Rotate the remaining off-diagonal entries; only the j > q
                // segment is contiguous in both rows, so it goes through the
                // SIMD kernel while the strided segments stay scalar.
                for (std::size_t j = 0; j < p; ++j) {
                    const double gj = a(j, p);
                    const double hj = a(j, q);
                    a(j, p) = gj - s * (hj + gj * tau);
                    a(j, q) = hj + s * (gj - hj * tau);
                    a(p, j) = a(j, p);
                    a(q, j) = a(j, q);
                }
                for (std::size_t j = p + 1; j < q; ++j) {
                    const double gj = a(p, j);
                    const double hj = a(j, q);
                    a(p, j) = gj - s * (hj + gj * tau);
                    a(j, q) = hj + s * (gj - hj * tau);
                    a(j, p) = a(p, j);
                    a(q, j) = a(j, q);
                }
                if (q + 1 < n) {
                    const std::size_t len = n - q - 1;
                    K.jrot(a.row(p) + q + 1, a.row(q) + q + 1, s, tau, len);
                    for (std::size_t j = q + 1; j < n; ++j) {
                        a(j, p) = a(p, j);
                        a(j, q) = a(q, j);
                    }
                }
                K.jrot(vt.row(p), vt.row(q), s, tau, n);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if (!converged) {
        throw ConvergenceError("Jacobi eigensolver did not converge", d,
                               offdiag_abs_sum(a));
    }
    return sorted_decomposition(std::move(d), vt);
}

std::vector<EigenspaceBasis> eigenspaces(const EigenDecomposition& d,
                                         double cluster_tol_rel) {
    const std::size_t n = d.values.size();
    std::vector<EigenspaceBasis> spaces;
    if (n == 0) return spaces;
    double scale = 0.0;
    for (double v : d.values) scale = std::max(scale, std::fabs(v));
    const double tol = cluster_tol_rel * std::max(scale, 1.0);

    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && d.values[end] - d.values[end - 1] <= tol) ++end;
        EigenspaceBasis s;
        s.eigenvalue = d.values[start];
        s.basis = Matrix(n, end - start);
        for (std::size_t k = start; k < end; ++k)
            for (std::size_t r = 0; r < n; ++r) s.basis(r, k - start) = d.vectors(r, k);
        spaces.push_back(std::move(s));
        start = end;
    }
    return spaces;
}

SymMatrix matrix_function(const EigenDecomposition& d,
                          const std::function<double(double)>& f) {
    const std::size_t n = d.values.size();
    Matrix scaled(n, n); // column k = f(lambda_k) * v_k
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(d.values[k]);
        for (std::size_t r = 0; r < n; ++r) scaled(r, k) = fk * d.vectors(r, k);
    }
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = kernels::dot(scaled.row(i), d.vectors.row(j), n);
    return symmetrize(out);
}

bool psd_leq(const SymMatrix& a, const SymMatrix& b, double tol) {
    if (a.size() != b.size()) throw ArgumentError("psd_leq dimension mismatch");
    const SymMatrix diff = sym_subtract(b, a);
    const EigenDecomposition d = eig_sym(diff);
    double scale = 0.0;
    for (double v : d.values) scale = std::max(scale, std::fabs(v));
    return d.values.front() >= -tol * scale;
}

double operator_norm(const SymMatrix& a) {
    const EigenDecomposition d = eig_sym(a);
    return std::max(std::fabs(d.values.front()), std::fabs(d.values.back()));
}

double lambda_min(const SymMatrix& a) { return eig_sym(a).values.front(); }

double lambda_max(const SymMatrix& a) { return eig_sym(a).values.back(); }

} // namespace discordlab
