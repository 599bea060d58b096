#include <doctest.h>

#include <cmath>
#include <random>

#include "discordlab/graph.hpp"
#include "discordlab/spectral.hpp"
#include "testutil.hpp"

using namespace discordlab;

namespace {

SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = d(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    return SymMatrix(std::move(m));
}

} // namespace

TEST_CASE("eig_sym on closed-form spectra") {
    // P2: {0, 2}, second eigenvector proportional to (1,-1)/sqrt(2)
    const EigenDecomposition p2 = eig_sym(laplacian(path_graph(2)));
    CHECK(std::fabs(p2.values[0]) <= 1e-12);
    CHECK(p2.values[1] == doctest::Approx(2.0));
    CHECK(std::fabs(p2.vectors(0, 1)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(p2.vectors(0, 1) * p2.vectors(1, 1) < 0.0);

    // K3: {0, 3, 3}
    const EigenDecomposition k3 = eig_sym(laplacian(complete_graph(3, 3.0)));
    CHECK(k3.values[0] == doctest::Approx(0.0).scale(1.0));
    CHECK(k3.values[1] == doctest::Approx(3.0));
    CHECK(k3.values[2] == doctest::Approx(3.0));

    // C4: 2 - 2cos(2 pi k / n) -> {0, 2, 2, 4}
    const EigenDecomposition c4 = eig_sym(laplacian(cycle_graph(4)));
    CHECK(c4.values[0] == doctest::Approx(0.0).scale(1.0));
    CHECK(c4.values[1] == doctest::Approx(2.0));
    CHECK(c4.values[2] == doctest::Approx(2.0));
    CHECK(c4.values[3] == doctest::Approx(4.0));

    // longer cycles against the cosine formula
    for (int n : {5, 9}) {
        const EigenDecomposition dn = eig_sym(laplacian(cycle_graph(n)));
        std::vector<double> expected;
        for (int k = 0; k < n; ++k)
            expected.push_back(2.0 - 2.0 * std::cos(2.0 * M_PI * k / n));
        std::sort(expected.begin(), expected.end());
        for (int k = 0; k < n; ++k)
            CHECK(dn.values[k] == doctest::Approx(expected[k]).epsilon(1e-10));
    }
}

TEST_CASE("eig_sym reconstruction and orthonormality on random matrices") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {2ul, 5ul, 17ul, 60ul, 200ul}) {
        const SymMatrix a = random_symmetric(rng, n);
        const EigenDecomposition d = eig_sym(a);

        // residual per eigenpair
        for (std::size_t k = 0; k < n; k += std::max<std::size_t>(1, n / 7)) {
            const Vector v = d.vectors.column(k);
            const Vector av = multiply(a.mat(), v);
            double res = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double r = av[i] - d.values[k] * v[i];
                res += r * r;
            }
            CHECK(std::sqrt(res) <= 1e-9 * std::max(1.0, operator_norm(a)));
        }

        // V^T V = I
        for (std::size_t i = 0; i < n; i += std::max<std::size_t>(1, n / 5)) {
            for (std::size_t j = i; j < n; j += std::max<std::size_t>(1, n / 5)) {
                const double ip = dot(d.vectors.column(i), d.vectors.column(j));
                CHECK(std::fabs(ip - (i == j ? 1.0 : 0.0)) <= 1e-10);
            }
        }

        // reconstruction through matrix_function with the identity map
        const SymMatrix rebuilt = matrix_function(d, [](double y) { return y; });
        double err = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                err = std::max(err, std::fabs(rebuilt(i, j) - a(i, j)));
                scale = std::max(scale, std::fabs(a(i, j)));
            }
        CHECK(err <= 1e-8 * std::max(scale, 1.0));
    }
}

TEST_CASE("connected Laplacian eigenstructure: kernel vector is constant") {
    std::mt19937_64 rng(12);
    const Graph g = testutil::random_connected_graph(rng, 25);
    const EigenDecomposition d = eig_sym(laplacian(g));
    CHECK(std::fabs(d.values[0]) <= 1e-9);
    CHECK(d.values[1] > 1e-6);
    const double expect = 1.0 / std::sqrt(25.0);
    for (int i = 0; i < 25; ++i)
        CHECK(std::fabs(std::fabs(d.vectors(i, 0)) - expect) <= 1e-9);
}

TEST_CASE("Gershgorin bound holds for graph Laplacians") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = testutil::random_connected_graph(rng, 4 + trial * 3);
        const SymMatrix l = laplacian(g);
        CHECK(lambda_max(l) <= 2.0 * g.max_degree() + 1e-9);
    }
}

TEST_CASE("matrix_function closed forms on P2") {
    const EigenDecomposition d = eig_sym(laplacian(path_graph(2)));

    const SymMatrix inv = matrix_function(d, [](double y) { return 1.0 / (1.0 + y); });
    CHECK(inv(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(inv(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(inv(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

    const SymMatrix zero = matrix_function(d, [](double) { return 0.0; });
    CHECK(max_abs(zero.mat()) == 0.0);
}

TEST_CASE("matrix_function matches the explicit resolvent product") {
    std::mt19937_64 rng(14);
    const Graph g = testutil::random_connected_graph(rng, 18);
    const SymMatrix l = laplacian(g);
    const EigenDecomposition d = eig_sym(l);

    const SymMatrix via_f = matrix_function(
        d, [](double y) { return y / ((1.0 + y) * (1.0 + y)); });

    const Matrix binv = Cholesky(sym_add(l, sym_identity(l.size()))).inverse();
    const Matrix explicit_prod = multiply(multiply(binv, l.mat()), binv);
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < l.size(); ++j)
            CHECK(std::fabs(via_f(i, j) - explicit_prod(i, j)) <= 1e-8);
}

TEST_CASE("psd_leq on the named examples") {
    const SymMatrix l = laplacian(path_graph(2));
    CHECK(psd_leq(l, sym_scale(l, 2.0), 1e-10));
    CHECK_FALSE(psd_leq(sym_identity(2), l, 1e-10)); // eigenvalues of L-I: {-1, 1}
    CHECK(psd_leq(l, l, 1e-10));
    CHECK_THROWS_AS(psd_leq(l, sym_identity(3), 1e-10), ArgumentError);
}

TEST_CASE("operator_norm examples") {
    CHECK(operator_norm(laplacian(path_graph(2))) == doctest::Approx(2.0));
    CHECK(operator_norm(SymMatrix(Matrix(3, 3))) == 0.0);
    CHECK(operator_norm(laplacian(cycle_graph(4))) == doctest::Approx(4.0));
}

TEST_CASE("eigenspaces cluster degenerate eigenvalues") {
    const EigenDecomposition c4 = eig_sym(laplacian(cycle_graph(4)));
    const auto spaces = eigenspaces(c4);
    REQUIRE(spaces.size() == 3);
    CHECK(spaces[0].eigenvalue == doctest::Approx(0.0).scale(1.0));
    CHECK(spaces[0].basis.cols() == 1);
    CHECK(spaces[1].eigenvalue == doctest::Approx(2.0));
    CHECK(spaces[1].basis.cols() == 2);
    CHECK(spaces[2].eigenvalue == doctest::Approx(4.0));
    CHECK(spaces[2].basis.cols() == 1);

    // residual of every basis column
    const SymMatrix l = laplacian(cycle_graph(4));
    for (const auto& sp : spaces) {
        for (std::size_t c = 0; c < sp.basis.cols(); ++c) {
            const Vector v = sp.basis.column(c);
            const Vector lv = multiply(l.mat(), v);
            for (std::size_t i = 0; i < v.size(); ++i)
                CHECK(std::fabs(lv[i] - sp.eigenvalue * v[i]) <= 1e-9);
        }
    }
}

TEST_CASE("QL and Jacobi routes agree") {
    std::mt19937_64 rng(15);
    for (std::size_t n : {1ul, 2ul, 3ul, 7ul, 24ul, 80ul}) {
        const SymMatrix a = random_symmetric(rng, n);
        const EigenDecomposition ql = eig_sym(a);
        const EigenDecomposition ja = eig_sym_jacobi(a);
        const double scale = std::max(operator_norm(a), 1.0);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(std::fabs(ql.values[k] - ja.values[k]) <= 1e-11 * scale);
            // the bases may differ inside degenerate clusters, so compare
            // through the residual instead of the vectors
            const Vector v = ql.vectors.column(k);
            const Vector av = multiply(a.mat(), v);
            double res = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double r = av[i] - ql.values[k] * v[i];
                res += r * r;
            }
            CHECK(std::sqrt(res) <= 1e-10 * scale);
        }
    }

    // graph Laplacians bring degenerate eigenvalues into play
    for (const Graph& g : {cycle_graph(6), star_graph(5), hypercube_graph(3)}) {
        const SymMatrix l = laplacian(g);
        const EigenDecomposition ql = eig_sym(l);
        const EigenDecomposition ja = eig_sym_jacobi(l);
        for (std::size_t k = 0; k < l.size(); ++k)
            CHECK(std::fabs(ql.values[k] - ja.values[k]) <= 1e-11 * operator_norm(l));
    }
}

TEST_CASE("eigenspace clustering merges near-degenerate values only") {
    Matrix m(3, 3);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0 + 5e-9; // inside the 1e-7 cluster tolerance
    m(2, 2) = 1.1;        // outside
    const EigenDecomposition d = eig_sym(SymMatrix(std::move(m)));
    const auto spaces = eigenspaces(d);
    REQUIRE(spaces.size() == 2);
    CHECK(spaces[0].basis.cols() == 2);
    CHECK(spaces[1].basis.cols() == 1);
    CHECK(spaces[1].eigenvalue == doctest::Approx(1.1));
}

TEST_CASE("SymMatrix rejects asymmetric input") {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0 + 1e-6;
    CHECK_THROWS_AS(SymMatrix{std::move(m)}, ArgumentError);
}
