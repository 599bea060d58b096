#include "discordlab/kernels.hpp"

namespace discordlab::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_scalar(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void jrot_scalar(double* x, double* y, double s, double tau, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double g = x[i];
        const double h = y[i];
        x[i] = g - s * (h + g * tau);
        y[i] = h + s * (g - h * tau);
    }
}

void rot_scalar(double* x, double* y, double c, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double g = x[i];
        const double h = y[i];
        x[i] = c * g - s * h;
        y[i] = s * g + c * h;
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{dot_scalar, axpy_scalar, scal_scalar, jrot_scalar,
                         rot_scalar, "scalar"};
    return ops;
}

} // namespace discordlab::kernels
