#include <sgc/homomorphism.hpp>
#include <sgc/switching.hpp>

#include <algorithm>
#include <numeric>

namespace sgc {

auto signed_neighbourhood(const SignedGraph & g, int v) -> SignedNeighbourhood
{
    if (v < 0 || v >= g.order())
        throw InvalidParameter("vertex out of range: " + std::to_string(v));
    SignedNeighbourhood result;
    for (int w : g.neighbours(v))
        result.emplace_back(w, *g.sign(v, w));
    return result;
}

auto identification(const SignedGraph & g, int u, int v) -> std::optional<Identification>
{
    if (u == v)
        throw InvalidParameter("cannot identify a vertex with itself");
    if (g.adjacent(u, v))
        return std::nullopt;
    bool all_same = true, all_flipped = true;
    for (int w : g.neighbours(u)) {
        auto s = g.sign(v, w);
        if (! s)
            continue;
        if (*s == *g.sign(u, w))
            all_flipped = false;
        else
            all_same = false;
    }
    if (all_same)
        return Identification::same;
    if (all_flipped)
        return Identification::flipped;
    return std::nullopt;
}

auto identifiable(const SignedGraph & g, int u, int v) -> bool
{
    return identification(g, u, v).has_value();
}

auto identify(const SignedGraph & g, int u, int v) -> SignedGraph
{
    auto how = identification(g, u, v);
    if (! how)
        throw InvalidParameter("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not identifiable");

    auto source = g;
    if (*how == Identification::flipped)
        source = switch_vertices(g, SwitchSet{g.order(), {v}});

    auto rename = [&] (int x) {
        if (x == v)
            x = u;
        return x > v ? x - 1 : x;
    };
    std::vector<Edge> edges;
    for (auto & e : source.edges()) {
        Edge f{rename(e.u), rename(e.v), e.sign};
        if (f.u > f.v)
            std::swap(f.u, f.v);
        edges.push_back(f);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SignedGraph{g.order() - 1, std::move(edges)};
}

auto is_homomorphism(const SignedGraph & g, const SignedGraph & h, const std::vector<int> & map,
        const std::vector<int> & switched) -> bool
{
    if (static_cast<int>(map.size()) != g.order())
        return false;
    auto source = switch_vertices(g, SwitchSet{g.order(), switched});
    for (int x : map)
        if (x < 0 || x >= h.order())
            return false;
    for (auto & e : source.edges()) {
        if (map[e.u] == map[e.v])
            return false;
        if (h.sign(map[e.u], map[e.v]) != e.sign)
            return false;
    }
    return true;
}

namespace {
    // Same neighbour set, no edge between them, and signs agreeing either
    // everywhere or nowhere.
    auto congruent(const SignedGraph & g, int u, int v) -> std::optional<Identification>
    {
        if (g.adjacent(u, v) || g.neighbours(u) != g.neighbours(v))
            return std::nullopt;
        return identification(g, u, v);
    }

    struct Classes {
        std::vector<std::vector<int>> members;
        std::vector<bool> flipped;  // relative to the least member of the class
    };

    auto compute_classes(const SignedGraph & g) -> Classes
    {
        int n = g.order();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (congruent(g, u, v)) {
                    int a = find(u), b = find(v);
                    if (a != b)
                        parent[std::max(a, b)] = std::min(a, b);
                }

        Classes result;
        result.flipped.assign(n, false);
        std::vector<int> slot(n, -1);
        for (int v = 0 ; v < n ; ++v) {
            int r = find(v);
            if (slot[r] < 0) {
                slot[r] = static_cast<int>(result.members.size());
                result.members.emplace_back();
            }
            result.members[slot[r]].push_back(v);
            if (r != v)
                result.flipped[v] = *congruent(g, r, v) == Identification::flipped;
        }
        return result;
    }
}

auto congruence_classes(const SignedGraph & g) -> std::vector<std::vector<int>>
{
    return compute_classes(g).members;
}

auto reduced_signed_graph(const SignedGraph & g) -> SignedGraph
{
    auto classes = compute_classes(g);
    std::vector<int> flipped, representatives;
    for (int v = 0 ; v < g.order() ; ++v)
        if (classes.flipped[v])
            flipped.push_back(v);
    for (auto & c : classes.members)
        representatives.push_back(c.front());
    auto normalized = switch_vertices(g, SwitchSet{g.order(), flipped});
    return normalized.induced(representatives);
}

auto is_irreducible(const SignedGraph & g) -> bool
{
    auto classes = congruence_classes(g);
    return std::all_of(classes.begin(), classes.end(), [] (const auto & c) { return c.size() == 1; });
}

}
