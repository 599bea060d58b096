#include <doctest.h>

#include <random>
#include <sstream>

#include "discordlab/dynamics.hpp"
#include "discordlab/graph.hpp"
#include "testutil.hpp"

using namespace discordlab;

TEST_CASE("load_graph parses the smallest graph") {
    std::istringstream in("n 2\n0 1 1.0\n");
    const Graph g = load_graph(in);
    CHECK(g.node_count() == 2);
    CHECK(g.edges().size() == 1);
    CHECK(g.total_weight() == 1.0);
    CHECK(g.connected());
}

TEST_CASE("load_graph parses K3 with comments and blanks") {
    std::istringstream in("# triangle\n\nn 3\n0 1 1\n1 2 1 # third\n0 2 1\n");
    const Graph g = load_graph(in);
    CHECK(g.node_count() == 3);
    CHECK(g.total_weight() == doctest::Approx(3.0));
    CHECK(g.connected());
}

TEST_CASE("load_graph flags a disconnected graph") {
    std::istringstream in("n 4\n0 1 1\n2 3 1\n");
    const Graph g = load_graph(in);
    CHECK_FALSE(g.connected());
}

TEST_CASE("load_graph rejects malformed input, naming the line") {
    auto expect_parse_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            load_graph(in);
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line_no() == line);
        }
    };
    expect_parse_error("n 2\n0 0 1\n", 2);        // self-loop
    expect_parse_error("n 2\n0 1 -1\n", 2);       // nonpositive weight
    expect_parse_error("n 2\n0 1 0\n", 2);        // zero weight
    expect_parse_error("n 2\n0 2 1\n", 2);        // id out of range
    expect_parse_error("n 2\n0 1\n", 2);          // missing weight
    expect_parse_error("0 1 1\n", 1);             // missing header
    expect_parse_error("n 3\n0 1 1\n1 0 2\n", 3); // duplicate edge
}

TEST_CASE("laplacian matches the definition on small graphs") {
    const SymMatrix p2 = laplacian(path_graph(2));
    CHECK(p2(0, 0) == 1.0);
    CHECK(p2(0, 1) == -1.0);
    CHECK(p2(1, 1) == 1.0);

    const SymMatrix k3 = laplacian(complete_graph(3, 3.0));
    for (int i = 0; i < 3; ++i) {
        CHECK(k3(i, i) == doctest::Approx(2.0));
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(k3(i, j) == doctest::Approx(-1.0));
    }

    const SymMatrix s3 = laplacian(star_graph(3));
    CHECK(s3(0, 0) == 3.0);
    for (int k = 1; k <= 3; ++k) {
        CHECK(s3(k, k) == 1.0);
        CHECK(s3(0, k) == -1.0);
    }
}

TEST_CASE("laplacian row sums vanish exactly for dyadic weights") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testutil::random_dyadic_graph(rng, 2 + trial % 17);
        const SymMatrix l = laplacian(g);
        for (std::size_t i = 0; i < l.size(); ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < l.size(); ++j) row += l(i, j);
            CHECK(row == 0.0);
        }
    }
}

TEST_CASE("trace of the Laplacian equals twice the total weight") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testutil::random_connected_graph(rng, 3 + trial);
        const SymMatrix l = laplacian(g);
        CHECK(l.trace() ==
              doctest::Approx(2.0 * g.total_weight()).epsilon(1e-12));
    }
}

TEST_CASE("cut_value on the named examples") {
    const Graph k3 = complete_graph(3, 3.0);
    CHECK(cut_value(k3, NodeSet({0})) == doctest::Approx(2.0));

    const Graph c4 = cycle_graph(4);
    CHECK(cut_value(c4, NodeSet({0, 2})) == doctest::Approx(4.0));

    const Graph p2 = path_graph(2);
    CHECK(cut_value(p2, NodeSet({0})) == doctest::Approx(1.0));
    // chi_S^T L chi_S = 4 cut(S)
    const SymMatrix l = laplacian(p2);
    const Vector chi{1.0, -1.0};
    CHECK(quad_form(l, chi) == doctest::Approx(4.0));
}

TEST_CASE("cut_value rejects overlapping sets") {
    const Graph k3 = complete_graph(3, 3.0);
    CHECK_THROWS_AS(cut_value(k3, NodeSet({0, 1}), NodeSet({1, 2})), ArgumentError);
}

TEST_CASE("chi quadratic form equals four times the cut on random graphs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = testutil::random_connected_graph(rng, 3 + trial % 20);
        const SymMatrix l = laplacian(g);
        std::vector<int> members;
        Vector chi(g.node_count());
        for (int i = 0; i < g.node_count(); ++i) {
            if (coin(rng)) {
                members.push_back(i);
                chi[i] = 1.0;
            } else {
                chi[i] = -1.0;
            }
        }
        const double cut = cut_value(g, NodeSet(members));
        CHECK(quad_form(l, chi) == doctest::Approx(4.0 * cut).epsilon(1e-12));
    }
}

TEST_CASE("complete_graph weighting") {
    const Graph k4 = complete_graph(4, 6.0);
    CHECK(k4.edges().size() == 6);
    for (const Edge& e : k4.edges()) CHECK(e.w == doctest::Approx(1.0));

    const Graph k4w = complete_graph(4, 4.0);
    for (const Edge& e : k4w.edges()) CHECK(e.w == doctest::Approx(2.0 / 3.0));
    CHECK(laplacian(k4w).trace() == doctest::Approx(8.0));

    CHECK_THROWS_AS(complete_graph(1, 1.0), ArgumentError);
}

TEST_CASE("complement of C4 is the perfect matching") {
    const Graph comp = complement_graph(cycle_graph(4));
    REQUIRE(comp.edges().size() == 2);
    for (const Edge& e : comp.edges()) {
        CHECK(((e.u == 0 && e.v == 2) || (e.u == 1 && e.v == 3)));
    }
}

TEST_CASE("complement of complete and tiny graphs is empty") {
    CHECK(complement_graph(complete_graph(3, 3.0)).edges().empty());
    CHECK(complement_graph(path_graph(2)).edges().empty());
}

TEST_CASE("complement is an involution on unweighted graphs") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 4 + trial);
        std::vector<Edge> unit = g.edges();
        for (Edge& e : unit) e.w = 1.0;
        const Graph gu(g.node_count(), unit);
        const Graph back = complement_graph(complement_graph(gu));
        auto key = [](const Graph& h) {
            std::vector<std::pair<int, int>> k;
            for (const Edge& e : h.edges())
                k.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
            std::sort(k.begin(), k.end());
            return k;
        };
        CHECK(key(back) == key(gu));
    }
}

TEST_CASE("complement rejects weighted graphs") {
    const Graph g(2, {{0, 1, 0.5}});
    CHECK_THROWS_AS(complement_graph(g), ArgumentError);
}

TEST_CASE("complement Laplacians satisfy L + M = nI - J exactly") {
    for (const Graph& g : {cycle_graph(4), cycle_graph(7), star_graph(4)}) {
        const int n = g.node_count();
        const SymMatrix l = laplacian(g);
        const SymMatrix m = laplacian(complement_graph(g));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double expect = (i == j ? n : 0.0) - 1.0;
                CHECK(l(i, j) + m(i, j) == doctest::Approx(expect).epsilon(1e-14));
            }
    }
}
