// AVX2 + FMA variants of the inner-loop kernels. This translation unit is the
// only one compiled with -mavx2 -mfma; the dispatcher guards it with a CPUID
// check so no AVX2 instruction executes on older hardware.

#include "discordlab/kernels.hpp"

#include <immintrin.h>

namespace discordlab::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swap = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swap));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scal_avx2(double a, double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) x[i] *= a;
}

void rot_avx2(double* x, double* y, double c, double s, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d g = _mm256_loadu_pd(x + i);
        const __m256d h = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(x + i, _mm256_fmsub_pd(vc, g, _mm256_mul_pd(vs, h)));
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(vs, g, _mm256_mul_pd(vc, h)));
    }
    for (; i < n; ++i) {
        const double g = x[i];
        const double h = y[i];
        x[i] = c * g - s * h;
        y[i] = s * g + c * h;
    }
}

void jrot_avx2(double* x, double* y, double s, double tau, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    const __m256d vtau = _mm256_set1_pd(tau);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d g = _mm256_loadu_pd(x + i);
        const __m256d h = _mm256_loadu_pd(y + i);
        // g - s*(h + tau*g)
        const __m256d xn = _mm256_fnmadd_pd(vs, _mm256_fmadd_pd(vtau, g, h), g);
        // h + s*(g - tau*h)
        const __m256d yn = _mm256_fmadd_pd(vs, _mm256_fnmadd_pd(vtau, h, g), h);
        _mm256_storeu_pd(x + i, xn);
        _mm256_storeu_pd(y + i, yn);
    }
    for (; i < n; ++i) {
        const double g = x[i];
        const double h = y[i];
        x[i] = g - s * (h + g * tau);
        y[i] = h + s * (g - h * tau);
    }
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops{dot_avx2, axpy_avx2, scal_avx2, jrot_avx2, rot_avx2,
                         "avx2"};
    return ops;
}

} // namespace discordlab::kernels
