#include <sgc/core.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace sgc {

SignedGraph::SignedGraph(int order, std::vector<Edge> edges) :
    order_(order),
    edges_(std::move(edges))
{
    if (order < 0)
        throw InvalidParameter("negative order");

    adjacency_.resize(order);
    matrix_.assign(static_cast<std::size_t>(order) * order, 0);
    for (auto & e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
            throw InvalidParameter("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
        if (e.u == e.v)
            throw InvalidParameter("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
        auto & cell = matrix_[e.u * order + e.v];
        if (cell != 0)
            throw InvalidParameter("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        cell = static_cast<std::int8_t>(e.sign);
        matrix_[e.v * order + e.u] = cell;
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto & a : adjacency_)
        std::sort(a.begin(), a.end());
}

auto SignedGraph::check_vertex(int v) const -> void
{
    if (v < 0 || v >= order_)
        throw InvalidParameter("vertex out of range: " + std::to_string(v));
}

auto SignedGraph::adjacent(int u, int v) const -> bool
{
    check_vertex(u);
    check_vertex(v);
    return matrix_[u * order_ + v] != 0;
}

auto SignedGraph::sign(int u, int v) const -> std::optional<Sign>
{
    check_vertex(u);
    check_vertex(v);
    auto cell = matrix_[u * order_ + v];
    if (cell == 0)
        return std::nullopt;
    return static_cast<Sign>(cell);
}

auto SignedGraph::negative_count() const -> int
{
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
        [] (const Edge & e) { return e.sign == Sign::negative; }));
}

auto SignedGraph::balance() const -> Parity
{
    return negative_count() % 2 == 0 ? Parity::even : Parity::odd;
}

auto SignedGraph::without_vertex(int v) const -> SignedGraph
{
    check_vertex(v);
    std::vector<int> keep;
    for (int w = 0 ; w < order_ ; ++w)
        if (w != v)
            keep.push_back(w);
    return induced(keep);
}

auto SignedGraph::without_edge(int u, int v) const -> SignedGraph
{
    if (! adjacent(u, v))
        throw InvalidParameter("not an edge: " + std::to_string(u) + " " + std::to_string(v));
    std::vector<Edge> kept;
    for (auto & e : edges_)
        if (! ((e.u == u && e.v == v) || (e.u == v && e.v == u)))
            kept.push_back(e);
    return SignedGraph{order_, std::move(kept)};
}

auto SignedGraph::with_edge_flipped(int u, int v) const -> SignedGraph
{
    if (! adjacent(u, v))
        throw InvalidParameter("not an edge: " + std::to_string(u) + " " + std::to_string(v));
    auto result = edges_;
    for (auto & e : result)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
            e.sign = flip(e.sign);
    return SignedGraph{order_, std::move(result)};
}

auto SignedGraph::with_all_signs(Sign s) const -> SignedGraph
{
    auto result = edges_;
    for (auto & e : result)
        e.sign = s;
    return SignedGraph{order_, std::move(result)};
}

auto SignedGraph::induced(std::vector<int> vertices) const -> SignedGraph
{
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw InvalidParameter("repeated vertex in induced subgraph");
    std::vector<int> index(order_, -1);
    for (std::size_t i = 0 ; i < vertices.size() ; ++i) {
        check_vertex(vertices[i]);
        index[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> kept;
    for (auto & e : edges_)
        if (index[e.u] >= 0 && index[e.v] >= 0)
            kept.push_back(Edge{index[e.u], index[e.v], e.sign});
    return SignedGraph{static_cast<int>(vertices.size()), std::move(kept)};
}

SignedMultigraph::SignedMultigraph(std::vector<int> labels, std::vector<MultiEdge> edges) :
    labels_(std::move(labels)),
    edges_(std::move(edges))
{
    for (auto & e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= order() || e.v >= order())
            throw InvalidParameter("multigraph edge endpoint out of range");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
}

auto SignedMultigraph::simplified() const -> SignedMultigraph
{
    auto e = edges_;
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return SignedMultigraph{labels_, std::move(e)};
}

auto SignedMultigraph::label_edges() const -> std::vector<MultiEdge>
{
    std::vector<MultiEdge> result;
    for (auto & e : edges_) {
        auto a = labels_[e.u], b = labels_[e.v];
        result.push_back(MultiEdge{std::min(a, b), std::max(a, b), e.sign});
    }
    std::sort(result.begin(), result.end());
    return result;
}

auto SignedMultigraph::operator==(const SignedMultigraph & other) const -> bool
{
    auto a = labels_, b = other.labels_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && label_edges() == other.label_edges();
}

auto to_string(Colour c) -> std::string
{
    if (c.value > 0)
        return "+" + std::to_string(c.value);
    return std::to_string(c.value);
}

auto max_magnitude(int k) -> int
{
    if (k < 1)
        throw InvalidParameter("k must be at least 1");
    return k / 2;
}

auto has_zero_colour(int k) -> bool
{
    if (k < 1)
        throw InvalidParameter("k must be at least 1");
    return k % 2 == 1;
}

auto colour_set(int k) -> std::vector<Colour>
{
    int h = max_magnitude(k);
    std::vector<Colour> result;
    for (int i = h ; i >= 1 ; --i)
        result.push_back(Colour{-i});
    if (has_zero_colour(k))
        result.push_back(Colour{0});
    for (int i = 1 ; i <= h ; ++i)
        result.push_back(Colour{i});
    return result;
}

auto magnitude_set(int k) -> std::vector<int>
{
    std::vector<int> result;
    for (int i = has_zero_colour(k) ? 0 : 1 ; i <= max_magnitude(k) ; ++i)
        result.push_back(i);
    return result;
}

auto kstar_size(int k) -> int
{
    if (k < 1)
        throw InvalidParameter("k must be at least 1");
    if (k % 2 == 0)
        return (k / 2) * (k / 2);
    int c = (k + 1) / 2;
    return c * c - 1;
}

auto kstar_balance(int k) -> Parity
{
    int negatives = 0;
    auto kstar = build_kstar(k);
    for (auto & e : kstar.edges())
        if (e.sign == Sign::negative)
            ++negatives;
    return negatives % 2 == 0 ? Parity::even : Parity::odd;
}

auto build_kstar(int k) -> SignedMultigraph
{
    auto labels = magnitude_set(k);
    std::vector<MultiEdge> edges;
    int n = static_cast<int>(labels.size());
    for (int a = 0 ; a < n ; ++a) {
        if (labels[a] != 0)
            edges.push_back(MultiEdge{a, a, Sign::negative});
        for (int b = a + 1 ; b < n ; ++b) {
            edges.push_back(MultiEdge{a, b, Sign::positive});
            edges.push_back(MultiEdge{a, b, Sign::negative});
        }
    }
    return SignedMultigraph{std::move(labels), std::move(edges)};
}

auto largest_k_within(int edges) -> int
{
    int k = 1;
    while (kstar_size(k + 1) <= edges)
        ++k;
    return k;
}

auto complete_graph(int n, Sign s) -> SignedGraph
{
    std::vector<Edge> edges;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            edges.push_back(Edge{u, v, s});
    return SignedGraph{n, std::move(edges)};
}

auto path_graph(std::span<const Sign> signs) -> SignedGraph
{
    std::vector<Edge> edges;
    for (std::size_t i = 0 ; i < signs.size() ; ++i)
        edges.push_back(Edge{static_cast<int>(i), static_cast<int>(i + 1), signs[i]});
    return SignedGraph{static_cast<int>(signs.size()) + 1, std::move(edges)};
}

auto cycle_graph(std::span<const Sign> signs) -> SignedGraph
{
    int n = static_cast<int>(signs.size());
    if (n < 3)
        throw InvalidParameter("a cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int i = 0 ; i < n ; ++i)
        edges.push_back(Edge{i, (i + 1) % n, signs[i]});
    return SignedGraph{n, std::move(edges)};
}

UnsignedGraph::UnsignedGraph(int order, std::vector<std::pair<int, int>> edges) :
    order_(order),
    edges_(std::move(edges)),
    matrix_(static_cast<std::size_t>(order) * order, 0)
{
    for (auto & [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= order || v >= order || u == v)
            throw InvalidParameter("bad unsigned edge");
        if (u > v)
            std::swap(u, v);
        if (matrix_[u * order + v])
            throw InvalidParameter("duplicate unsigned edge");
        matrix_[u * order + v] = matrix_[v * order + u] = 1;
    }
    std::sort(edges_.begin(), edges_.end());
}

auto underlying(const SignedGraph & g) -> UnsignedGraph
{
    std::vector<std::pair<int, int>> edges;
    for (auto & e : g.edges())
        edges.emplace_back(e.u, e.v);
    return UnsignedGraph{g.order(), std::move(edges)};
}

}
