#pragma once

#include <cstddef>
#include <vector>

#include "discordlab/errors.hpp"

namespace discordlab {

using Vector = std::vector<double>;

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    double* row(std::size_t r) { return a_.data() + r * cols_; }
    const double* row(std::size_t r) const { return a_.data() + r * cols_; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    Vector column(std::size_t c) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector a_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);
Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double c);
double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);

double dot(const Vector& x, const Vector& y);
double norm2(const Vector& x);
double norm_inf(const Vector& x);

/// Dense real symmetric matrix. Construction checks that the input is
/// symmetric to within 1e-12 relative to its largest entry and then stores
/// the exactly symmetrized average, so downstream code may assume
/// a(i,j) == a(j,i) bitwise.
class SymMatrix {
public:
    explicit SymMatrix(Matrix m, double tol_rel = 1e-12);

    std::size_t size() const { return m_.rows(); }
    double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    const Matrix& mat() const { return m_; }

    double trace() const;
    Vector diagonal() const;

private:
    Matrix m_;
};

SymMatrix sym_add(const SymMatrix& a, const SymMatrix& b);
SymMatrix sym_subtract(const SymMatrix& a, const SymMatrix& b);
SymMatrix sym_scale(const SymMatrix& a, double c);
SymMatrix sym_identity(std::size_t n);
/// Exact symmetrization (a + a^T)/2 wrapped as SymMatrix; for products that
/// are symmetric in exact arithmetic but carry roundoff skew.
SymMatrix symmetrize(const Matrix& a);

/// x^T A x
double quad_form(const SymMatrix& a, const Vector& x);

/// Cholesky factorization of a symmetric positive-definite matrix.
class Cholesky {
public:
    explicit Cholesky(const SymMatrix& a);

    Vector solve(const Vector& b) const;
    Matrix solve(const Matrix& b) const; // column-wise
    Matrix inverse() const;

private:
    Matrix l_; // lower triangular factor
};

} // namespace discordlab
