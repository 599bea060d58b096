// NEON variants for aarch64, where 128-bit SIMD is baseline.

#include "discordlab/kernels.hpp"

#include <arm_neon.h>

namespace discordlab::kernels {
namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    }
    double s = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scal_neon(double a, double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) x[i] *= a;
}

void rot_neon(double* x, double* y, double c, double s, std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t g = vld1q_f64(x + i);
        const float64x2_t h = vld1q_f64(y + i);
        vst1q_f64(x + i, vfmsq_f64(vmulq_f64(vc, g), vs, h));
        vst1q_f64(y + i, vfmaq_f64(vmulq_f64(vc, h), vs, g));
    }
    for (; i < n; ++i) {
        const double g = x[i];
        const double h = y[i];
        x[i] = c * g - s * h;
        y[i] = s * g + c * h;
    }
}

void jrot_neon(double* x, double* y, double s, double tau, std::size_t n) {
    const float64x2_t vs = vdupq_n_f64(s);
    const float64x2_t vtau = vdupq_n_f64(tau);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t g = vld1q_f64(x + i);
        const float64x2_t h = vld1q_f64(y + i);
        const float64x2_t xn = vfmsq_f64(g, vs, vfmaq_f64(h, vtau, g));
        const float64x2_t yn = vfmaq_f64(h, vs, vfmsq_f64(g, vtau, h));
        vst1q_f64(x + i, xn);
        vst1q_f64(y + i, yn);
    }
    for (; i < n; ++i) {
        const double g = x[i];
        const double h = y[i];
        x[i] = g - s * (h + g * tau);
        y[i] = h + s * (g - h * tau);
    }
}

} // namespace

const Ops& neon_ops() {
    static const Ops ops{dot_neon, axpy_neon, scal_neon, jrot_neon, rot_neon,
                         "neon"};
    return ops;
}

} // namespace discordlab::kernels
