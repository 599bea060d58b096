#include "discordlab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "discordlab/kernels.hpp"

namespace discordlab {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ArgumentError("matrix product dimension mismatch");
    Matrix c(a.rows(), b.cols());
    // ikj order so the inner update is a contiguous axpy over rows of b.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik != 0.0) kernels::axpy(aik, b.row(k), ci, b.cols());
        }
    }
    return c;
}

Vector multiply(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw ArgumentError("matrix-vector dimension mismatch");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        y[i] = kernels::dot(a.row(i), x.data(), a.cols());
    }
    return y;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ArgumentError("matrix sum dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.rows() * c.cols(); ++i) c.data()[i] += b.data()[i];
    return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ArgumentError("matrix difference dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.rows() * c.cols(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

Matrix scale(const Matrix& a, double c) {
    Matrix s = a;
    kernels::scal(c, s.data(), s.rows() * s.cols());
    return s;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        m = std::max(m, std::fabs(a.data()[i]));
    return m;
}

double frobenius_norm(const Matrix& a) {
    return std::sqrt(kernels::dot(a.data(), a.data(), a.rows() * a.cols()));
}

double dot(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw ArgumentError("dot dimension mismatch");
    return kernels::dot(x.data(), y.data(), x.size());
}

double norm2(const Vector& x) { return std::sqrt(kernels::dot(x.data(), x.data(), x.size())); }

double norm_inf(const Vector& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

SymMatrix::SymMatrix(Matrix m, double tol_rel) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw ArgumentError("SymMatrix requires a square matrix");
    const std::size_t n = m_.rows();
    const double scale = max_abs(m_);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            worst = std::max(worst, std::fabs(m_(i, j) - m_(j, i)));
    if (worst > tol_rel * std::max(scale, 1e-300)) {
        throw ArgumentError("matrix is not symmetric (max skew " + std::to_string(worst) + ")");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (m_(i, j) + m_(j, i));
            m_(i, j) = v;
            m_(j, i) = v;
        }
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < size(); ++i) t += m_(i, i);
    return t;
}

Vector SymMatrix::diagonal() const {
    Vector d(size());
    for (std::size_t i = 0; i < size(); ++i) d[i] = m_(i, i);
    return d;
}

SymMatrix sym_add(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(add(a.mat(), b.mat()));
}

SymMatrix sym_subtract(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(subtract(a.mat(), b.mat()));
}

SymMatrix sym_scale(const SymMatrix& a, double c) { return SymMatrix(scale(a.mat(), c)); }

SymMatrix sym_identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

SymMatrix symmetrize(const Matrix& a) {
    if (a.rows() != a.cols()) throw ArgumentError("symmetrize requires a square matrix");
    Matrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
    return SymMatrix(std::move(s));
}

double quad_form(const SymMatrix& a, const Vector& x) {
    if (a.size() != x.size()) throw ArgumentError("quad_form dimension mismatch");
    const Vector ax = multiply(a.mat(), x);
    return dot(x, ax);
}

Cholesky::Cholesky(const SymMatrix& a) : l_(a.size(), a.size()) {
    const std::size_t n = a.size();
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j) - kernels::dot(l_.row(j), l_.row(j), j);
        if (d <= 0.0) throw ArgumentError("matrix is not positive definite");
        const double ljj = std::sqrt(d);
        l_(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            l_(i, j) = (a(i, j) - kernels::dot(l_.row(i), l_.row(j), j)) / ljj;
        }
    }
}

Vector Cholesky::solve(const Vector& b) const {
    const std::size_t n = l_.rows();
    if (b.size() != n) throw ArgumentError("solve dimension mismatch");
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = (b[i] - kernels::dot(l_.row(i), y.data(), i)) / l_(i, i);
    }
    Vector x(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = y[k];
        for (std::size_t i = k + 1; i < n; ++i) s -= l_(i, k) * x[i];
        x[k] = s / l_(k, k);
    }
    return x;
}

Matrix Cholesky::solve(const Matrix& b) const {
    const std::size_t n = l_.rows();
    if (b.rows() != n) throw ArgumentError("solve dimension mismatch");
    Matrix x(n, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        Vector col = solve(b.column(c));
        for (std::size_t r = 0; r < n; ++r) x(r, c) = col[r];
    }
    return x;
}

Matrix Cholesky::inverse() const { return solve(Matrix::identity(l_.rows())); }

} // namespace discordlab
