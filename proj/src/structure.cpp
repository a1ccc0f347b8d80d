#include <sgc/structure.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace sgc {

auto clique_number(const UnsignedGraph & g) -> int
{
    int best = 0;
    std::vector<int> current;
    std::function<void (int)> extend = [&] (int next) {
        best = std::max(best, static_cast<int>(current.size()));
        for (int v = next ; v < g.order() ; ++v)
            if (std::all_of(current.begin(), current.end(), [&] (int u) { return g.adjacent(u, v); })) {
                current.push_back(v);
                extend(v + 1);
                current.pop_back();
            }
    };
    extend(0);
    return best;
}

auto contains_induced(const UnsignedGraph & g, const UnsignedGraph & pattern) -> bool
{
    int p = pattern.order();
    if (p > g.order())
        return false;
    // Map pattern vertices one at a time to distinct graph vertices, keeping
    // adjacency and non-adjacency consistent.
    std::vector<int> image(p, -1);
    std::vector<char> used(g.order(), 0);
    std::function<bool (int)> place = [&] (int i) {
        if (i == p)
            return true;
        for (int v = 0 ; v < g.order() ; ++v) {
            if (used[v])
                continue;
            bool ok = true;
            for (int j = 0 ; j < i && ok ; ++j)
                ok = pattern.adjacent(i, j) == g.adjacent(v, image[j]);
            if (! ok)
                continue;
            used[v] = 1;
            image[i] = v;
            if (place(i + 1))
                return true;
            used[v] = 0;
        }
        return false;
    };
    return place(0);
}

auto linear_forest(const std::vector<int> & path_orders) -> UnsignedGraph
{
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (int length : path_orders) {
        for (int i = 0 ; i + 1 < length ; ++i)
            edges.emplace_back(base + i, base + i + 1);
        base += length;
    }
    return UnsignedGraph{base, std::move(edges)};
}

auto components(const UnsignedGraph & g) -> std::vector<std::vector<int>>
{
    std::vector<int> label(g.order(), -1);
    std::vector<std::vector<int>> result;
    for (int root = 0 ; root < g.order() ; ++root) {
        if (label[root] >= 0)
            continue;
        std::vector<int> members{root}, stack{root};
        label[root] = static_cast<int>(result.size());
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0 ; w < g.order() ; ++w)
                if (g.adjacent(v, w) && label[w] < 0) {
                    label[w] = label[root];
                    members.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        result.push_back(std::move(members));
    }
    return result;
}

auto longest_induced_path(const UnsignedGraph & g) -> int
{
    int best = g.order() > 0 ? 1 : 0;
    std::vector<int> path;
    std::vector<char> on_path(g.order(), 0);
    // Grow induced paths from each end vertex: a new vertex must be adjacent
    // to the current end and to no other path vertex.
    std::function<void ()> extend = [&] {
        best = std::max(best, static_cast<int>(path.size()));
        int end = path.back();
        for (int v = 0 ; v < g.order() ; ++v) {
            if (on_path[v] || ! g.adjacent(end, v))
                continue;
            bool induced = true;
            for (std::size_t i = 0 ; i + 1 < path.size() && induced ; ++i)
                induced = ! g.adjacent(path[i], v);
            if (! induced)
                continue;
            on_path[v] = 1;
            path.push_back(v);
            extend();
            path.pop_back();
            on_path[v] = 0;
        }
    };
    for (int v = 0 ; v < g.order() ; ++v) {
        on_path[v] = 1;
        path.push_back(v);
        extend();
        path.pop_back();
        on_path[v] = 0;
    }
    return best;
}

}
