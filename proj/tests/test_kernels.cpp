#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "discordlab/kernels.hpp"

namespace k = discordlab::kernels;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::vector<double> v(n);
    for (double& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("dispatched kernels agree with the scalar reference") {
    const k::Ops& ref = k::scalar_ops();
    const k::Ops& act = k::active();
    std::mt19937_64 rng(71);

    // odd lengths exercise the vector tails
    for (std::size_t n : {0ul, 1ul, 2ul, 3ul, 7ul, 8ul, 31ul, 64ul, 257ul, 1000ul}) {
        const std::vector<double> x = random_vec(rng, n);
        const std::vector<double> y = random_vec(rng, n);

        const double d_ref = ref.dot(x.data(), y.data(), n);
        const double d_act = act.dot(x.data(), y.data(), n);
        CHECK(std::fabs(d_ref - d_act) <= 1e-13 * (1.0 + std::fabs(d_ref)));

        std::vector<double> y1 = y, y2 = y;
        ref.axpy(0.7, x.data(), y1.data(), n);
        act.axpy(0.7, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));

        std::vector<double> s1 = x, s2 = x;
        ref.scal(-1.25, s1.data(), n);
        act.scal(-1.25, s2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(s1[i] == s2[i]);

        std::vector<double> a1 = x, b1 = y, a2 = x, b2 = y;
        const double s = 0.6, tau = 0.25;
        ref.jrot(a1.data(), b1.data(), s, tau, n);
        act.jrot(a2.data(), b2.data(), s, tau, n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(a1[i] == doctest::Approx(a2[i]).epsilon(1e-14));
            CHECK(b1[i] == doctest::Approx(b2[i]).epsilon(1e-14));
        }

        std::vector<double> c1 = x, d1 = y, c2 = x, d2 = y;
        ref.rot(c1.data(), d1.data(), -0.8, 0.6, n); // negative cosine leg
        act.rot(c2.data(), d2.data(), -0.8, 0.6, n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(c1[i] == doctest::Approx(c2[i]).epsilon(1e-14));
            CHECK(d1[i] == doctest::Approx(d2[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("rot applies the plain Givens rotation") {
    const double c = -0.28, s = 0.96;
    std::vector<double> x{1.0, 0.5, -3.0};
    std::vector<double> y{-2.0, 0.75, 4.0};
    const std::vector<double> x0 = x, y0 = y;
    k::scalar_ops().rot(x.data(), y.data(), c, s, x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x[i] == doctest::Approx(c * x0[i] - s * y0[i]).epsilon(1e-12));
        CHECK(y[i] == doctest::Approx(s * x0[i] + c * y0[i]).epsilon(1e-12));
    }
}

TEST_CASE("jrot is the expected plane rotation") {
    // s = sin, tau = s/(1+c) reproduces x' = c x - s y, y' = s x + c y
    const double c = 0.8, s = 0.6, tau = s / (1.0 + c);
    std::vector<double> x{1.0, -2.0, 0.5};
    std::vector<double> y{0.25, 4.0, -1.0};
    const std::vector<double> x0 = x, y0 = y;
    k::scalar_ops().jrot(x.data(), y.data(), s, tau, x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x[i] == doctest::Approx(c * x0[i] - s * y0[i]).epsilon(1e-12));
        CHECK(y[i] == doctest::Approx(s * x0[i] + c * y0[i]).epsilon(1e-12));
    }
}

TEST_CASE("active kernel reports a known name") {
    const std::string name = k::active_name();
    CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}
