#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the dense linear algebra layer.
// A scalar reference implementation always exists; on x86-64 an AVX2+FMA
// variant and on aarch64 a NEON variant are selected at runtime when the
// CPU supports them. The environment variable DISCORD_LAB_KERNEL
// ("scalar", "avx2", "neon") forces a specific implementation.
//
// SIMD variants reassociate additions, so results may differ from the
// scalar path by normal floating-point roundoff; the equivalence tests
// bound that difference.

namespace discordlab::kernels {

struct Ops {
    // sum_i x[i]*y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // y[i] += a*x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // x[i] *= a
    void (*scal)(double a, double* x, std::size_t n);
    // Jacobi plane rotation, NR form: given s and tau = s/(1+c),
    //   x[i] <- x[i] - s*(y[i] + tau*x[i])
    //   y[i] <- y[i] + s*(x_old - tau*y[i])
    // which equals x <- c*x - s*y, y <- s*x_old + c*y.
    void (*jrot)(double* x, double* y, double s, double tau, std::size_t n);
    // plain Givens rotation: x <- c*x - s*y, y <- s*x_old + c*y
    // (c may be negative, unlike the jrot parametrization)
    void (*rot)(double* x, double* y, double c, double s, std::size_t n);
    const char* name;
};

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops(); // defined only when built on x86-64
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

/// Runtime-selected implementation (cached after first call).
const Ops& active();
const char* active_name();

inline double dot(const double* x, const double* y, std::size_t n) {
    return active().dot(x, y, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
    active().axpy(a, x, y, n);
}
inline void scal(double a, double* x, std::size_t n) { active().scal(a, x, n); }
inline void jrot(double* x, double* y, double s, double tau, std::size_t n) {
    active().jrot(x, y, s, tau, n);
}
inline void rot(double* x, double* y, double c, double s, std::size_t n) {
    active().rot(x, y, c, s, n);
}

} // namespace discordlab::kernels
