#include "oracles.hpp"

#include <sgc/colouring.hpp>
#include <sgc/solver.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace sgc;

namespace {
    const auto P = Sign::positive;
    const auto N = Sign::negative;

    // A complete 4-colouring on five vertices, v1..v5 as 0..4.
    auto reduction_example() -> std::pair<SignedGraph, Colouring>
    {
        SignedGraph g{5, {{0, 1, N}, {1, 4, N}, {3, 4, P}, {0, 2, P}, {1, 2, P}, {2, 3, P}, {2, 4, P}}};
        return {g, Colouring{4, std::vector<int>{1, 2, -1, -2, 2}}};
    }

    // A star with two 0-coloured leaves, before and after switching one of them.
    auto zero_leaf_example(bool after) -> std::pair<SignedGraph, Colouring>
    {
        if (! after)
            return {SignedGraph{4, {{0, 1, N}, {1, 2, N}, {1, 3, P}}}, Colouring{3, std::vector<int>{1, 1, 0, 0}}};
        return {SignedGraph{4, {{0, 1, P}, {1, 2, N}, {1, 3, N}}}, Colouring{3, std::vector<int>{-1, 1, 0, 0}}};
    }

    auto ints(const Colouring & phi) -> std::vector<int>
    {
        std::vector<int> out;
        for (auto c : phi.colours())
            out.push_back(c.value);
        return out;
    }

    auto random_inferred(int n, int k, std::mt19937_64 & rng) -> InferredColouring
    {
        auto mags = magnitude_set(k);
        std::vector<SignedColour> c;
        for (int v = 0 ; v < n ; ++v)
            c.push_back(SignedColour{mags[rng() % mags.size()], rng() & 1 ? Flag::plus : Flag::minus});
        return InferredColouring{k, c};
    }
}

TEST(Colouring, Validation)
{
    EXPECT_THROW((Colouring{2, std::vector<int>{0}}), InvalidParameter);
    EXPECT_THROW((Colouring{3, std::vector<int>{2}}), InvalidParameter);
    EXPECT_THROW((InferredColouring{4, {{0, Flag::plus}}}), InvalidParameter);
    EXPECT_THROW((InferredColouring{4, {{3, Flag::plus}}}), InvalidParameter);
    EXPECT_NO_THROW((Colouring{5, std::vector<int>{-2, 0, 2}}));
}

TEST(Proper, Examples)
{
    SignedGraph pos{2, {{0, 1, P}}}, neg{2, {{0, 1, N}}};
    EXPECT_FALSE(is_proper(pos, Colouring{2, std::vector<int>{1, 1}}));
    EXPECT_FALSE(is_proper(neg, Colouring{2, std::vector<int>{1, -1}}));
    EXPECT_TRUE(is_proper(neg, Colouring{2, std::vector<int>{1, 1}}));
    EXPECT_FALSE(is_proper(neg, Colouring{3, std::vector<int>{0, 0}}));
    auto [g, phi] = reduction_example();
    EXPECT_TRUE(is_proper(g, phi));
    EXPECT_THROW(is_proper(g, Colouring{4, std::vector<int>{1, 2}}), InvalidParameter);
}

TEST(ClassifyEdge, Examples)
{
    SignedGraph pos{2, {{0, 1, P}}}, neg{2, {{0, 1, N}}};
    EXPECT_EQ(classify_edge(pos, Colouring{4, std::vector<int>{1, 2}}, 0, 1), (EdgeType{1, 2, P}));
    EXPECT_EQ(classify_edge(neg, Colouring{4, std::vector<int>{-1, 2}}, 0, 1), (EdgeType{1, 2, P}));
    EXPECT_EQ(classify_edge(pos, Colouring{2, std::vector<int>{1, -1}}, 0, 1), (EdgeType{1, 1, N}));
}

TEST(Reduce, ExampleGivesKStar4)
{
    auto [g, phi] = reduction_example();
    EXPECT_EQ(reduce(g, phi), build_kstar(4));
    EXPECT_TRUE(is_complete(g, phi));
    EXPECT_TRUE(oracle::complete(g, ints(phi), 4));
}

TEST(Reduce, SmallCases)
{
    SignedGraph empty{3};
    auto r = reduce(empty, Colouring{1, std::vector<int>{0, 0, 0}});
    EXPECT_EQ(r, build_kstar(1));
    SignedGraph neg{2, {{0, 1, N}}};
    EXPECT_EQ(reduce(neg, Colouring{2, std::vector<int>{1, 1}}), build_kstar(2));
    SignedGraph pos{2, {{0, 1, P}}};
    EXPECT_THROW(reduce(pos, Colouring{2, std::vector<int>{1, 1}}), InvalidParameter);
}

TEST(Complete, ZeroLeafExamples)
{
    auto [a, phi_a] = zero_leaf_example(false);
    EXPECT_TRUE(is_complete(a, phi_a));
    auto [c, phi_c] = zero_leaf_example(true);
    EXPECT_TRUE(is_proper(c, phi_c));
    EXPECT_FALSE(is_complete(c, phi_c));
    EXPECT_TRUE(is_complete(complete_graph(4, P), Colouring{4, std::vector<int>{-2, -1, 1, 2}}));
}

TEST(Complete, AgreesWithOracle)
{
    std::mt19937_64 rng{21};
    int complete_seen = 0;
    for (int t = 0 ; t < 4000 ; ++t) {
        int n = 1 + t % 6, k = 1 + static_cast<int>(rng() % 5);
        auto g = oracle::random_graph(n, rng, 0.7);
        auto values = oracle::colours_of(k);
        std::vector<int> c;
        for (int v = 0 ; v < n ; ++v)
            c.push_back(values[rng() % values.size()]);
        Colouring phi{k, c};
        EXPECT_EQ(is_proper(g, phi), oracle::proper(g, c));
        bool expected = oracle::complete(g, c, k);
        EXPECT_EQ(is_complete(g, phi), expected);
        complete_seen += expected;
        if (oracle::proper(g, c)) {
            // Every reduced edge is an edge of K*_k.
            auto need = oracle::required_types(k);
            auto r = reduce(g, phi);
            for (auto & e : r.edges()) {
                int a = r.labels()[e.u], b = r.labels()[e.v];
                EXPECT_TRUE(need.count({std::min(a, b), std::max(a, b), oracle::as_int(e.sign)}));
            }
        }
    }
    EXPECT_GT(complete_seen, 50);
}

TEST(Complete, SwitchingNonZeroVertexWithNegation)
{
    std::mt19937_64 rng{22};
    for (int t = 0 ; t < 3000 ; ++t) {
        int n = 2 + t % 5, k = 2 + static_cast<int>(rng() % 4);
        auto g = oracle::random_graph(n, rng, 0.7);
        auto values = oracle::colours_of(k);
        std::vector<int> c;
        for (int v = 0 ; v < n ; ++v)
            c.push_back(values[rng() % values.size()]);
        int v = static_cast<int>(rng() % n);
        if (c[v] == 0)
            continue;
        Colouring phi{k, c};
        auto s = SwitchSet{n, {v}};
        auto moved = switch_colouring(phi, s);
        EXPECT_EQ(moved[v].value, -c[v]);
        EXPECT_EQ(is_complete(switch_vertices(g, s), moved), is_complete(g, phi));
    }
}

TEST(Complete, SwitchingZeroVertexCanBreakCompleteness)
{
    // Switching a 0-coloured vertex.
    SignedGraph b{4, {{0, 1, P}, {1, 2, N}, {1, 3, P}}};
    Colouring phi{3, std::vector<int>{-1, 1, 0, 0}};
    EXPECT_TRUE(is_complete(b, phi));
    EXPECT_FALSE(is_complete(switch_vertices(b, SwitchSet{4, {3}}), phi));
}

TEST(Inferred, SignedK5Example)
{
    SignedGraph g{5, {{0, 1, P}, {0, 2, N}, {0, 3, N}, {0, 4, N}, {1, 2, N}, {1, 3, N}, {1, 4, N},
        {2, 3, P}, {2, 4, P}, {3, 4, P}}};
    InferredColouring gamma{5, {{0, Flag::minus}, {1, Flag::plus}, {1, Flag::plus}, {2, Flag::plus}, {2, Flag::minus}}};
    EXPECT_TRUE(is_inferred_complete(g, gamma));
    auto r = realize(g, gamma);
    EXPECT_EQ(r.graph, switch_vertices(g, SwitchSet{5, {0, 4}}));
    EXPECT_EQ(ints(r.colouring), (std::vector<int>{0, 1, 1, 2, 2}));
    EXPECT_TRUE(is_complete(r.graph, r.colouring));
}

TEST(Inferred, SmallExamples)
{
    SignedGraph neg{2, {{0, 1, N}}}, pos{2, {{0, 1, P}}};
    EXPECT_FALSE(is_inferred_proper(neg, InferredColouring{3, {{0, Flag::plus}, {0, Flag::minus}}}));
    EXPECT_FALSE(is_inferred_proper(pos, InferredColouring{2, {{1, Flag::plus}, {1, Flag::plus}}}));
    EXPECT_FALSE(is_inferred_proper(pos, InferredColouring{2, {{1, Flag::minus}, {1, Flag::minus}}}));
    EXPECT_TRUE(is_inferred_complete(pos, InferredColouring{2, {{1, Flag::plus}, {1, Flag::minus}}}));
    SignedGraph one{1};
    auto r = realize(one, InferredColouring{1, {{0, Flag::minus}}});
    EXPECT_EQ(r.graph, one);
    EXPECT_EQ(r.colouring[0].value, 0);
    auto plain = realize(pos, InferredColouring{4, {{1, Flag::plus}, {2, Flag::plus}}});
    EXPECT_EQ(plain.graph, pos);
}

TEST(Inferred, AgreesWithRealizationExhaustively)
{
    std::mt19937_64 rng{23};
    for (int t = 0 ; t < 60 ; ++t) {
        int n = 1 + t % 5;
        auto g = oracle::random_graph(n, rng, 0.6);
        for (int k = 1 ; k <= 5 ; ++k) {
            auto mags = magnitude_set(k);
            std::vector<int> choices;
            for (int m : mags) {
                choices.push_back(2 * m);
                choices.push_back(2 * m + 1);
            }
            oracle::any_assignment(n, choices, [&] (const std::vector<int> & code) {
                std::vector<SignedColour> c;
                for (int x : code)
                    c.push_back(SignedColour{x / 2, x % 2 ? Flag::minus : Flag::plus});
                InferredColouring gamma{k, c};
                auto r = realize(g, gamma);
                EXPECT_EQ(is_inferred_complete(g, gamma), is_complete(r.graph, r.colouring));
                EXPECT_EQ(is_inferred_proper(g, gamma), is_proper(r.graph, r.colouring));
                return false;
            });
        }
    }
}

TEST(Infer, PlainToInferredRoundTrip)
{
    std::mt19937_64 rng{24};
    for (int t = 0 ; t < 500 ; ++t) {
        int n = 1 + t % 6, k = 1 + static_cast<int>(rng() % 6);
        auto g = oracle::random_graph(n, rng, 0.7);
        auto values = oracle::colours_of(k);
        std::vector<int> c;
        for (int v = 0 ; v < n ; ++v)
            c.push_back(values[rng() % values.size()]);
        Colouring phi{k, c};
        EXPECT_EQ(is_inferred_complete(g, infer(phi)), is_complete(g, phi));
    }
}

TEST(ColourOperations, NegateClass)
{
    Colouring phi{5, std::vector<int>{-2, 1, 0, 2, -1}};
    EXPECT_EQ(ints(negate_colour_class(phi, 2)), (std::vector<int>{2, 1, 0, -2, -1}));
    EXPECT_EQ(negate_colour_class(negate_colour_class(phi, 1), 1), phi);
    Colouring unused{5, std::vector<int>{1, 0}};
    EXPECT_EQ(negate_colour_class(unused, 2), unused);
    EXPECT_THROW(negate_colour_class(phi, 0), InvalidParameter);
    EXPECT_THROW(negate_colour_class(phi, 3), InvalidParameter);
    Colouring k4{4, std::vector<int>{-2, -1, 1, 2}};
    EXPECT_TRUE(is_complete(complete_graph(4, P), negate_colour_class(k4, 1)));
}

TEST(ColourOperations, SwapFlags)
{
    InferredColouring gamma{3, {{1, Flag::plus}, {0, Flag::minus}, {1, Flag::minus}}};
    auto s = swap_inferred_flags(gamma, 1);
    EXPECT_EQ(s[0].flag, Flag::minus);
    EXPECT_EQ(s[2].flag, Flag::plus);
    EXPECT_EQ(s[1], gamma[1]);
    EXPECT_EQ(swap_inferred_flags(s, 1), gamma);
    InferredColouring no_two{5, {{1, Flag::plus}, {0, Flag::minus}}};
    EXPECT_EQ(swap_inferred_flags(no_two, 2), no_two);
}

TEST(ColourOperations, PreserveCompletenessOnSolverWitnesses)
{
    std::mt19937_64 rng{25};
    int checked = 0;
    for (int t = 0 ; t < 150 ; ++t) {
        auto g = oracle::random_graph(2 + t % 6, rng, 0.6);
        auto r = psi(g);
        auto gamma = r.witness;
        auto [h, phi] = realize(g, gamma);
        ASSERT_TRUE(is_complete(h, phi));
        for (int i = 1 ; i <= max_magnitude(gamma.k()) ; ++i)
            EXPECT_TRUE(is_complete(h, negate_colour_class(phi, i)));
        for (int i : magnitude_set(gamma.k())) {
            EXPECT_TRUE(is_inferred_complete(g, swap_inferred_flags(gamma, i)));
            if ((i == 0 ? gamma.k() - 1 : gamma.k() - 2) >= 1) {
                auto d = drop_colour_class(h, phi, i);
                EXPECT_TRUE(is_complete(d.graph, d.colouring));
                EXPECT_EQ(d.colouring.k(), gamma.k() - (i == 0 ? 1 : 2));
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(ColourOperations, DropExamples)
{
    Colouring k4{4, std::vector<int>{-2, -1, 1, 2}};
    auto d = drop_colour_class(complete_graph(4, P), k4, 2);
    EXPECT_EQ(d.graph, complete_graph(2, P));
    EXPECT_EQ(d.kept, (std::vector<int>{1, 2}));
    EXPECT_EQ(ints(d.colouring), (std::vector<int>{-1, 1}));
    EXPECT_TRUE(is_complete(d.graph, d.colouring));

    auto [a, phi_a] = zero_leaf_example(false);
    auto z = drop_colour_class(a, phi_a, 0);
    EXPECT_EQ(z.colouring.k(), 2);
    EXPECT_TRUE(is_complete(z.graph, z.colouring));

    // Relabelling moves the largest magnitude into the gap.
    Colouring k5{5, std::vector<int>{-2, -1, 0, 1, 2}};
    auto g5 = complete_graph(5, P);
    auto one = drop_colour_class(g5, k5, 1);
    EXPECT_EQ(ints(one.colouring), (std::vector<int>{-1, 0, 1}));
    EXPECT_TRUE(is_complete(one.graph, one.colouring));

    EXPECT_THROW(drop_colour_class(a, Colouring{3, std::vector<int>{1, 1, 0, 1}}, 0), InvalidParameter);
    EXPECT_THROW(drop_colour_class(complete_graph(2, P), Colouring{2, std::vector<int>{-1, 1}}, 1), InvalidParameter);
}

TEST(ColourOperations, DropOrderDoesNotMatter)
{
    // A complete 5-colouring on six vertices.
    SignedGraph g;
    InferredColouring gamma;
    std::mt19937_64 rng{26};
    for (int t = 0 ; ; ++t) {
        ASSERT_LT(t, 1000);
        g = oracle::random_graph(6, rng, 0.8);
        if (auto w = exists_complete_k(g, 5)) {
            gamma = *w;
            break;
        }
    }
    auto [h, phi] = realize(g, gamma);
    for (int i : magnitude_set(5))
        for (int j : magnitude_set(5)) {
            if (i == j)
                continue;
            auto first = drop_colour_class(h, phi, i);
            // The largest magnitude moves into the gap left by a nonzero i.
            int j_after = (i != 0 && j == max_magnitude(5)) ? i : j;
            if (first.colouring.k() - (j_after == 0 ? 1 : 2) < 1)
                continue;
            auto second = drop_colour_class(first.graph, first.colouring, j_after);
            EXPECT_TRUE(is_complete(second.graph, second.colouring)) << i << " " << j;
        }
}

TEST(InferredRandom, ProperIffRealizedProper)
{
    std::mt19937_64 rng{27};
    for (int t = 0 ; t < 2000 ; ++t) {
        int n = 1 + t % 7, k = 1 + static_cast<int>(rng() % 7);
        auto g = oracle::random_graph(n, rng);
        auto gamma = random_inferred(n, k, rng);
        auto r = realize(g, gamma);
        std::vector<int> c;
        for (auto x : r.colouring.colours())
            c.push_back(x.value);
        EXPECT_EQ(is_inferred_proper(g, gamma), oracle::proper(r.graph, c));
        EXPECT_EQ(is_inferred_complete(g, gamma), oracle::complete(r.graph, c, k));
    }
}
