#include "oracles.hpp"

#include <sgc/colouring.hpp>
#include <sgc/solver.hpp>
#include <sgc/structure.hpp>
#include <sgc/switching.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace sgc;

namespace {
    const auto P = Sign::positive;
    const auto N = Sign::negative;

    auto star(int leaves) -> SignedGraph
    {
        std::vector<Edge> edges;
        for (int v = 1 ; v <= leaves ; ++v)
            edges.push_back(Edge{0, v, v % 2 ? P : N});
        return SignedGraph{leaves + 1, edges};
    }

    auto negative_minus_matching(int n, int m) -> SignedGraph
    {
        auto g = complete_graph(n, N);
        for (int i = 0 ; i < m ; ++i)
            g = g.without_edge(2 * i, 2 * i + 1);
        return g;
    }
}

TEST(Matching, Examples)
{
    EXPECT_EQ(maximum_matching_size(SignedGraph{5}), 0);
    EXPECT_EQ(maximum_matching_size(path_graph(std::vector<Sign>(4, P))), 2);
    EXPECT_EQ(maximum_matching_size(complete_graph(4, N)), 2);
    EXPECT_EQ(maximum_matching_size(star(5)), 1);
}

TEST(Matching, AgreesWithEnumeration)
{
    std::mt19937_64 rng{31};
    for (int t = 0 ; t < 200 ; ++t) {
        auto g = oracle::random_graph(1 + t % 7, rng, 0.4);
        EXPECT_EQ(maximum_matching_size(g), oracle::matching(g));
        EXPECT_EQ(maximum_matching_size(underlying(g)), oracle::matching(g));
    }
}

TEST(UpperBound, Examples)
{
    auto k4 = psi_upper_bound(complete_graph(4, P));
    EXPECT_EQ(k4.value, 4);
    EXPECT_EQ(k4.order_bound, 4);
    EXPECT_EQ(k4.matching_bound, 5);
    EXPECT_EQ(k4.size_bound, 4);
    auto s = psi_upper_bound(star(5));
    EXPECT_EQ(s.order_bound, 6);
    EXPECT_EQ(s.matching_bound, 3);
    EXPECT_EQ(s.size_bound, 4);
    EXPECT_EQ(s.value, 3);
    EXPECT_EQ(psi_upper_bound(SignedGraph{6}).value, 1);
}

TEST(ExistsComplete, Examples)
{
    EXPECT_FALSE(exists_complete_k(complete_graph(5, N), 3).has_value());
    auto w = exists_complete_k(path_graph(std::vector<Sign>(4, P)), 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_inferred_complete(path_graph(std::vector<Sign>(4, P)), *w));
    SignedGraph neg{2, {{0, 1, N}}};
    auto e = exists_complete_k(neg, 2);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ((*e)[0], (SignedColour{1, Flag::plus}));
    EXPECT_EQ((*e)[1], (SignedColour{1, Flag::plus}));
}

TEST(Psi, SignedCliqueValues)
{
    for (int n = 1 ; n <= 7 ; ++n)
        EXPECT_EQ(psi(complete_graph(n, P)).value, n);
    for (int n = 5 ; n <= 7 ; ++n) {
        EXPECT_EQ(psi(complete_graph(n, N)).value, 2);
        EXPECT_EQ(psi(negative_minus_matching(n, 1)).value, 3);
    }
    EXPECT_THROW(psi(SignedGraph{0}), InvalidParameter);
}

TEST(Psi, AgreesWithBruteForce)
{
    std::mt19937_64 rng{32};
    for (int t = 0 ; t < 120 ; ++t) {
        auto g = oracle::random_graph(1 + t % 6, rng);
        auto r = psi(g);
        EXPECT_EQ(r.value, oracle::psi(g)) << t;
        EXPECT_EQ(r.witness.k(), r.value);
        EXPECT_TRUE(is_inferred_complete(g, r.witness));
        EXPECT_LE(r.value, r.upper_bound.value);
    }
}

TEST(Psi, EdgelessIsOne)
{
    auto r = psi(SignedGraph{4});
    EXPECT_EQ(r.value, 1);
    EXPECT_TRUE(is_inferred_complete(SignedGraph{4}, r.witness));
}

TEST(Psi, WorkerCountDoesNotChangeResult)
{
    std::mt19937_64 rng{33};
    for (int t = 0 ; t < 40 ; ++t) {
        auto g = oracle::random_graph(4 + t % 5, rng);
        auto one = psi(g);
        for (unsigned w : {2u, 3u, 8u}) {
            SearchOptions o;
            o.workers = w;
            auto many = psi(g, o);
            EXPECT_EQ(many.value, one.value);
            EXPECT_EQ(many.witness, one.witness);
            EXPECT_EQ(many.refuted, one.refuted);
        }
    }
}

TEST(Psi, SymmetryBreakingMatchesUnrestrictedSearch)
{
    std::mt19937_64 rng{34};
    for (int t = 0 ; t < 150 ; ++t) {
        auto g = oracle::random_graph(1 + t % 5, rng);
        SearchOptions plain;
        plain.symmetry_breaking = false;
        for (int k = 1 ; k <= 5 ; ++k)
            EXPECT_EQ(exists_complete_k(g, k).has_value(), exists_complete_k(g, k, plain).has_value()) << t << " " << k;
    }
}

TEST(Psi, BudgetExhaustion)
{
    SearchOptions o;
    o.node_budget = 10;
    EXPECT_THROW(psi(complete_graph(7, N), o), ResourceExhausted);
    try {
        psi(complete_graph(7, N), o);
    }
    catch (const ResourceExhausted & e) {
        EXPECT_GE(e.nodes(), 10u);
    }
    o.node_budget = 100000000;
    EXPECT_EQ(psi(complete_graph(7, N), o).value, 2);
}

TEST(Psi, SwitchingInvariance)
{
    std::mt19937_64 rng{35};
    for (int t = 0 ; t < 60 ; ++t) {
        int n = 1 + t % 7;
        auto g = oracle::random_graph(n, rng);
        std::vector<bool> mask(n);
        for (int v = 0 ; v < n ; ++v)
            mask[v] = rng() & 1;
        auto h = switch_vertices(g, SwitchSet::from_mask(mask));
        EXPECT_EQ(psi(g).value, psi(h).value);
        EXPECT_EQ(chi(g).value, chi(h).value);
    }
}

TEST(Psi, InducedSubgraphMonotone)
{
    std::mt19937_64 rng{36};
    for (int t = 0 ; t < 60 ; ++t) {
        int n = 2 + t % 6;
        auto g = oracle::random_graph(n, rng);
        std::vector<int> keep;
        for (int v = 0 ; v < n ; ++v)
            if (rng() & 1)
                keep.push_back(v);
        if (keep.empty())
            continue;
        EXPECT_LE(psi(g.induced(keep)).value, psi(g).value);
    }
}

TEST(Chi, Examples)
{
    EXPECT_EQ(chi(SignedGraph{3}).value, 1);
    for (int n = 2 ; n <= 6 ; ++n)
        EXPECT_EQ(chi(complete_graph(n, N)).value, 2);
    auto r = chi(complete_graph(4, P));
    EXPECT_EQ(r.value, 4);
    EXPECT_TRUE(is_proper(complete_graph(4, P), r.witness));
}

TEST(Chi, AgreesWithBruteForce)
{
    std::mt19937_64 rng{37};
    for (int t = 0 ; t < 150 ; ++t) {
        auto g = oracle::random_graph(1 + t % 7, rng);
        auto r = chi(g);
        EXPECT_EQ(r.value, oracle::chi(g));
        EXPECT_TRUE(is_proper(g, r.witness));
        EXPECT_LE(r.value, psi(g).value);
    }
}

TEST(Unsigned, Achromatic)
{
    auto kn = underlying(complete_graph(5, P));
    EXPECT_EQ(psi_unsigned(kn).value, 5);
    auto p5 = underlying(path_graph(std::vector<Sign>(4, P)));
    EXPECT_EQ(psi_unsigned(p5).value, 3);
    EXPECT_EQ(psi_unsigned(UnsignedGraph{4, {}}).value, 1);
    std::mt19937_64 rng{38};
    for (int t = 0 ; t < 80 ; ++t) {
        auto g = underlying(oracle::random_graph(1 + t % 7, rng));
        auto r = psi_unsigned(g);
        EXPECT_EQ(r.value, oracle::psi_unsigned(g.order(), g.edges()));
        EXPECT_TRUE(is_complete_unsigned(g, r.colours, r.value));
    }
}

TEST(WitnessSubgraph, Examples)
{
    Colouring k4{4, std::vector<int>{-2, -1, 1, 2}};
    EXPECT_EQ(witness_subgraph(complete_graph(4, P), k4), (std::vector<int>{0, 1, 2, 3}));

    std::vector<Edge> edges = complete_graph(4, P).edges();
    SignedGraph padded{14, edges};
    std::vector<int> colours{-2, -1, 1, 2};
    for (int v = 4 ; v < 14 ; ++v)
        colours.push_back(v % 2 ? 1 : -2);
    EXPECT_EQ(witness_subgraph(padded, Colouring{4, colours}), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_THROW(witness_subgraph(complete_graph(4, P), Colouring{4, std::vector<int>{1, 1, 2, 2}}), InvalidParameter);
}

TEST(WitnessSubgraph, KeepsCompletenessWithinBound)
{
    std::mt19937_64 rng{39};
    for (int t = 0 ; t < 150 ; ++t) {
        auto g = oracle::random_graph(1 + t % 8, rng);
        auto r = psi(g);
        auto [h, phi] = realize(g, r.witness);
        auto vertices = witness_subgraph(h, phi);
        int limit = std::max(2 * kstar_size(phi.k()), 1);
        EXPECT_LE(static_cast<int>(vertices.size()), limit);
        std::vector<Colour> restricted;
        for (int v : vertices)
            restricted.push_back(phi[v]);
        EXPECT_TRUE(is_complete(h.induced(vertices), Colouring{phi.k(), restricted}));
    }
}

TEST(Structure, CliqueAndInducedPatterns)
{
    EXPECT_EQ(clique_number(underlying(complete_graph(5, P))), 5);
    EXPECT_EQ(clique_number(UnsignedGraph{3, {}}), 1);
    auto c5 = underlying(cycle_graph(std::vector<Sign>(5, P)));
    EXPECT_EQ(clique_number(c5), 2);
    EXPECT_TRUE(contains_induced(c5, linear_forest({4})));
    EXPECT_FALSE(contains_induced(c5, linear_forest({5})));
    EXPECT_TRUE(contains_induced(c5, linear_forest({2, 1})));
    EXPECT_FALSE(contains_induced(c5, linear_forest({2, 2})));
    EXPECT_EQ(longest_induced_path(c5), 4);
    auto lf = linear_forest({3, 1, 2});
    EXPECT_EQ(lf.order(), 6);
    EXPECT_EQ(lf.size(), 3);
    EXPECT_EQ(components(lf).size(), 3u);
    EXPECT_EQ(components(lf)[1], (std::vector<int>{3}));
}
