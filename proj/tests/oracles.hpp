#pragma once

// Brute-force reference implementations.  They only use SignedGraph's edge
// list and plain integers, never the library's colouring or search code.

#include <sgc/core.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using sgc::Sign;
using sgc::SignedGraph;

inline auto sign_of(int s) -> int { return s < 0 ? -1 : 1; }

inline auto as_int(Sign s) -> int { return s == Sign::positive ? 1 : -1; }

// Colours are plain integers in M_k.
inline auto colours_of(int k) -> std::vector<int>
{
    std::vector<int> c;
    int h = k / 2;
    for (int i = -h ; i <= h ; ++i)
        if (i != 0 || k % 2 == 1)
            c.push_back(i);
    return c;
}

inline auto proper(const SignedGraph & g, const std::vector<int> & c) -> bool
{
    for (auto & e : g.edges())
        if (c[e.u] == as_int(e.sign) * c[e.v])
            return false;
    return true;
}

using Type = std::tuple<int, int, int>;

// The edge types K*_k needs: both signs between distinct magnitudes, a
// negative loop at each nonzero magnitude.
inline auto required_types(int k) -> std::set<Type>
{
    std::set<Type> need;
    std::vector<int> mags;
    for (int i = (k % 2 == 1 ? 0 : 1) ; i <= k / 2 ; ++i)
        mags.push_back(i);
    for (std::size_t a = 0 ; a < mags.size() ; ++a) {
        if (mags[a] != 0)
            need.emplace(mags[a], mags[a], -1);
        for (std::size_t b = a + 1 ; b < mags.size() ; ++b) {
            need.emplace(mags[a], mags[b], 1);
            need.emplace(mags[a], mags[b], -1);
        }
    }
    return need;
}

// Switch negatively coloured vertices, then read off magnitudes and signs.
inline auto complete(const SignedGraph & g, const std::vector<int> & c, int k) -> bool
{
    if (! proper(g, c))
        return false;
    std::set<Type> seen;
    for (auto & e : g.edges()) {
        int s = as_int(e.sign) * sign_of(c[e.u]) * sign_of(c[e.v]);
        int a = std::abs(c[e.u]), b = std::abs(c[e.v]);
        seen.emplace(std::min(a, b), std::max(a, b), s);
    }
    std::set<int> used;
    for (int x : c)
        used.insert(std::abs(x));
    std::set<int> mags;
    for (int i = (k % 2 == 1 ? 0 : 1) ; i <= k / 2 ; ++i)
        mags.insert(i);
    return used == mags && seen == required_types(k);
}

inline auto switched(const SignedGraph & g, std::uint64_t mask) -> SignedGraph
{
    std::vector<sgc::Edge> edges;
    for (auto e : g.edges()) {
        if (((mask >> e.u) & 1) != ((mask >> e.v) & 1))
            e.sign = sgc::flip(e.sign);
        edges.push_back(e);
    }
    return SignedGraph{g.order(), edges};
}

// Calls f on every assignment of values from choices to n positions until f
// returns true.
template <typename F>
auto any_assignment(int n, const std::vector<int> & choices, F && f) -> bool
{
    std::vector<int> index(n, 0), value(n, choices.empty() ? 0 : choices[0]);
    if (choices.empty())
        return n == 0 && f(value);
    while (true) {
        for (int i = 0 ; i < n ; ++i)
            value[i] = choices[index[i]];
        if (f(value))
            return true;
        int i = 0;
        while (i < n && ++index[i] == static_cast<int>(choices.size()))
            index[i++] = 0;
        if (i == n)
            return false;
    }
}

// Some switching of g has a complete k-colouring.  Colourings with negative
// colours already cover switching a vertex, so only switch sets of
// zero-coloured vertices are tried on top.
inline auto has_complete(const SignedGraph & g, int k) -> bool
{
    int n = g.order();
    return any_assignment(n, colours_of(k), [&] (const std::vector<int> & c) {
        std::uint64_t zeros = 0;
        for (int v = 0 ; v < n ; ++v)
            if (c[v] == 0)
                zeros |= std::uint64_t{1} << v;
        for (std::uint64_t sub = zeros ; ; sub = (sub - 1) & zeros) {
            if (complete(switched(g, sub), c, k))
                return true;
            if (sub == 0)
                break;
        }
        return false;
    });
}

inline auto psi(const SignedGraph & g) -> int
{
    for (int k = g.order() ; k >= 1 ; --k)
        if (has_complete(g, k))
            return k;
    return 1;
}

inline auto chi(const SignedGraph & g) -> int
{
    for (int k = 1 ; ; ++k)
        if (any_assignment(g.order(), colours_of(k), [&] (const std::vector<int> & c) { return proper(g, c); }))
            return k;
}

inline auto matching(const SignedGraph & g) -> int
{
    int m = g.size(), best = 0;
    for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << m) ; ++mask) {
        std::uint64_t used = 0;
        bool ok = true;
        int count = 0;
        for (int i = 0 ; i < m && ok ; ++i)
            if ((mask >> i) & 1) {
                auto & e = g.edges()[i];
                std::uint64_t ends = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
                ok = (used & ends) == 0;
                used |= ends;
                ++count;
            }
        if (ok)
            best = std::max(best, count);
    }
    return best;
}

inline auto equivalent(const SignedGraph & a, const SignedGraph & b) -> bool
{
    for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << a.order()) ; ++mask)
        if (switched(a, mask) == b)
            return true;
    return false;
}

// Classic achromatic number: colours 1..k, adjacent vertices differ, every
// pair of colours on some edge.
inline auto psi_unsigned(int n, const std::vector<std::pair<int, int>> & edges) -> int
{
    for (int k = n ; k >= 1 ; --k) {
        std::vector<int> choices;
        for (int i = 1 ; i <= k ; ++i)
            choices.push_back(i);
        bool found = any_assignment(n, choices, [&] (const std::vector<int> & c) {
            std::set<std::pair<int, int>> pairs;
            for (auto [u, v] : edges) {
                if (c[u] == c[v])
                    return false;
                pairs.emplace(std::min(c[u], c[v]), std::max(c[u], c[v]));
            }
            std::set<int> used(c.begin(), c.end());
            return static_cast<int>(used.size()) == k && static_cast<int>(pairs.size()) == k * (k - 1) / 2;
        });
        if (found)
            return k;
    }
    return 1;
}

inline auto random_graph(int n, std::mt19937_64 & rng, double p = 0.5) -> SignedGraph
{
    std::bernoulli_distribution edge(p), negative(0.5);
    std::vector<sgc::Edge> edges;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (edge(rng))
                edges.push_back(sgc::Edge{u, v, negative(rng) ? Sign::negative : Sign::positive});
    return SignedGraph{n, edges};
}

inline auto signs_from_mask(int count, std::uint64_t mask) -> std::vector<Sign>
{
    std::vector<Sign> s(count);
    for (int i = 0 ; i < count ; ++i)
        s[i] = (mask >> i) & 1 ? Sign::negative : Sign::positive;
    return s;
}

}
