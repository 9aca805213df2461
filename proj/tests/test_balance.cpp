#include <doctest.h>

#include "hperc/balance.hpp"
#include "oracles.hpp"

using namespace hperc;

namespace {

TemplateGraph k4_plus_pendant() {
    Graph g(5);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    g.add_edge(0, 4);
    return TemplateGraph::from_graph(std::move(g), "k4+pendant");
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1u << bit)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("fraction arithmetic is exact and reduced") {
    CHECK(Fraction(4, 2) == Fraction(2, 1));
    CHECK(Fraction(-4, -2) == Fraction(2, 1));
    CHECK(Fraction(1, -2) == Fraction(-1, 2));
    CHECK(Fraction(1, 3) < Fraction(2, 5));
    CHECK(Fraction(5, 3).reciprocal() == Fraction(3, 5));
    CHECK(Fraction(5, 3).str() == "5/3");
    CHECK(Fraction(4, 2).str() == "2");
    CHECK_THROWS_AS(Fraction(1, 0), std::domain_error);
    CHECK_THROWS_AS(Fraction(0, 5).reciprocal(), std::domain_error);
}

TEST_CASE("lambda formula") {
    CHECK(lambda(TemplateGraph::clique(4)) == Fraction(2, 1));
    CHECK(lambda(TemplateGraph::clique(5)) == Fraction(8, 3));
    CHECK(lambda(k4_plus_pendant()) == Fraction(5, 3));
    CHECK_THROWS_AS(lambda(TemplateGraph::path(2)), std::domain_error);
}

TEST_CASE("max induced edges") {
    CHECK(max_induced_edges(TemplateGraph::clique(5), 3) == 3);
    CHECK(max_induced_edges(k4_plus_pendant(), 4) == 6);
    CHECK(max_induced_edges(TemplateGraph::cycle(5), 3) == 2);
    CHECK(max_induced_edges(TemplateGraph::clique(4), 0) == 0);
    CHECK_THROWS_AS(max_induced_edges(TemplateGraph::clique(4), 5), std::domain_error);
}

TEST_CASE("balance classification examples") {
    CHECK(is_balanced(TemplateGraph::clique(6)).first);

    auto [bal, wit] = is_balanced(k4_plus_pendant());
    CHECK_FALSE(bal);
    REQUIRE(wit.has_value());
    CHECK(wit->first == std::vector<int>{0, 1, 2, 3});
    CHECK(wit->second == 6);

    CHECK(is_balanced(TemplateGraph::clique(3)).first);
    CHECK(is_strictly_balanced(TemplateGraph::clique(3)).first);

    // K_4 is the boundary case: its K_3 subgraph hits the ratio exactly, so
    // K_4 is balanced but not strictly; larger cliques are strict.
    CHECK(is_balanced(TemplateGraph::clique(4)).first);
    CHECK_FALSE(is_strictly_balanced(TemplateGraph::clique(4)).first);
    for (int k = 5; k <= 8; ++k) CHECK(is_strictly_balanced(TemplateGraph::clique(k)).first);
    CHECK_FALSE(is_strictly_balanced(k4_plus_pendant()).first);

    // two triangles sharing one vertex: lambda = 4/3, a triangle gives ratio 2
    Graph bowtie(5);
    bowtie.add_edge(0, 1);
    bowtie.add_edge(0, 2);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(0, 3);
    bowtie.add_edge(0, 4);
    bowtie.add_edge(3, 4);
    auto [sb, sw] = is_strictly_balanced(TemplateGraph::from_graph(std::move(bowtie)));
    CHECK_FALSE(sb);
    REQUIRE(sw.has_value());
    CHECK(sw->first.size() == 3);
    CHECK(sw->second == 3);
}

TEST_CASE("lambda_star examples") {
    auto [v4, m4] = lambda_star(TemplateGraph::clique(4));
    CHECK(v4 == Fraction(2, 1));
    // the single edge attains the minimum; the K_3 subgraph ties it, which is
    // exactly why K_4 just misses strict balance
    CHECK(m4 == std::vector<std::pair<int, int>>{{2, 1}, {3, 3}});

    auto [vp, mp] = lambda_star(k4_plus_pendant());
    CHECK(vp == Fraction(0, 1));
    CHECK(mp == std::vector<std::pair<int, int>>{{4, 6}});

    auto [v5, m5] = lambda_star(TemplateGraph::clique(5));
    CHECK(v5 == Fraction(8, 3));
}

TEST_CASE("ell bounds") {
    BalanceReport k5 = analyze_balance(TemplateGraph::clique(5));
    REQUIRE(k5.ell_exact.has_value());
    CHECK(*k5.ell_exact == Fraction(3, 8));

    BalanceReport pend = analyze_balance(k4_plus_pendant());
    CHECK_FALSE(pend.ell_lower.has_value());  // lambda_star = 0 and unbalanced
    CHECK_FALSE(pend.ell_upper.has_value());  // leaf: min degree 1
    CHECK_FALSE(pend.ell_exact.has_value());

    BalanceReport c5 = analyze_balance(TemplateGraph::cycle(5));
    CHECK(c5.lambda == Fraction(1, 1));
    CHECK(c5.balanced);
    REQUIRE(c5.ell_exact.has_value());
    CHECK(*c5.ell_exact == Fraction(1, 1));
}

TEST_CASE("naive oracle agreement on all graphs up to 5 vertices") {
    for (int n = 3; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            TemplateGraph h = TemplateGraph::from_graph(g);
            auto naive = oracles::naive_balance(g);
            CHECK(is_balanced(h).first == naive.balanced);
            CHECK(is_strictly_balanced(h).first == naive.strictly_balanced);
            CHECK(lambda_star(h).first == naive.lambda_star);
        }
    }
}

TEST_CASE("lambda_star relations on random templates") {
    Seed master{271828, 0};
    for (int rep = 0; rep < 1000; ++rep) {
        int k = 3 + static_cast<int>(rep % 10);  // k <= 12
        Graph g = sample_gnp(k, 0.5, child_seed(master, rep));
        if (g.edge_count() == 0) continue;  // relations below need an edge at s=2
        TemplateGraph h = TemplateGraph::from_graph(std::move(g));
        BalanceReport rep_out = analyze_balance(h);
        CHECK(rep_out.lambda_star <= rep_out.lambda);
        CHECK((rep_out.lambda_star == rep_out.lambda) == rep_out.balanced);
        if (rep_out.strictly_balanced) CHECK(rep_out.balanced);

        bool single_edge_minimizer = false;
        bool any_larger_minimizer = false;
        for (auto [v_f, e_f] : rep_out.lambda_star_minimizers) {
            if (v_f == 2) single_edge_minimizer = true;
            if (v_f > 2) any_larger_minimizer = true;
        }
        if (rep_out.balanced) CHECK(single_edge_minimizer);
        if (rep_out.strictly_balanced) CHECK_FALSE(any_larger_minimizer);
    }
}

TEST_CASE("branch-and-bound path matches enumeration") {
    SplitMix64 rng(Seed{5150, 0});
    for (int rep = 0; rep < 60; ++rep) {
        int n = 5 + static_cast<int>(rng.next_u64() % 8);
        Graph g = oracles::random_graph(n, rng.next_uniform(), rng);
        auto dp = induced_edge_profile(g);
        auto bnb = induced_edge_profile(g, false, true);
        for (int s = 0; s <= n; ++s) {
            CHECK(dp[s].max_edges == bnb[s].max_edges);
            CHECK(dp[s].witness == bnb[s].witness);
        }
    }
}

TEST_CASE("analyzer guard refuses oversized templates") {
    Graph big(kAnalyzerGuardVertices + 1);
    big.add_edge(0, 1);
    big.add_edge(1, 2);
    CHECK_THROWS_AS(induced_edge_profile(big), std::domain_error);
    CHECK_NOTHROW(induced_edge_profile(Graph(3)));
}
