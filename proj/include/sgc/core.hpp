#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgc {

// Raised when an argument violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised for parameter ranges a closed form does not cover.
class UnsupportedParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a search exceeds its node budget.
class ResourceExhausted : public std::runtime_error {
public:
    ResourceExhausted(const std::string & what, std::uint64_t nodes)
        : std::runtime_error(what), nodes_(nodes) {}
    auto nodes() const -> std::uint64_t { return nodes_; }

private:
    std::uint64_t nodes_;
};

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr auto operator*(Sign a, Sign b) -> Sign
{
    return a == b ? Sign::positive : Sign::negative;
}

constexpr auto flip(Sign s) -> Sign
{
    return s == Sign::positive ? Sign::negative : Sign::positive;
}

constexpr auto sign_char(Sign s) -> char
{
    return s == Sign::positive ? '+' : '-';
}

enum class Parity { even, odd };

struct Edge {
    int u = 0, v = 0;
    Sign sign = Sign::positive;

    auto operator<=>(const Edge &) const = default;
};

// A simple signed graph on vertices 0..order-1.  Edges are stored with u < v,
// sorted lexicographically.  Immutable once built.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(int order, std::vector<Edge> edges = {});

    auto order() const -> int { return order_; }
    auto size() const -> int { return static_cast<int>(edges_.size()); }
    auto edges() const -> const std::vector<Edge> & { return edges_; }
    auto neighbours(int v) const -> const std::vector<int> & { return adjacency_[v]; }
    auto degree(int v) const -> int { return static_cast<int>(adjacency_[v].size()); }

    auto adjacent(int u, int v) const -> bool;
    auto sign(int u, int v) const -> std::optional<Sign>;
    auto negative_count() const -> int;
    auto balance() const -> Parity;

    auto without_vertex(int v) const -> SignedGraph;
    auto without_edge(int u, int v) const -> SignedGraph;
    auto with_edge_flipped(int u, int v) const -> SignedGraph;
    auto with_all_signs(Sign s) const -> SignedGraph;
    // Induced subgraph on the given vertices, re-indexed in ascending order.
    auto induced(std::vector<int> vertices) const -> SignedGraph;

    auto operator==(const SignedGraph & other) const -> bool
    {
        return order_ == other.order_ && edges_ == other.edges_;
    }

private:
    auto check_vertex(int v) const -> void;

    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::int8_t> matrix_;
};

struct MultiEdge {
    int u = 0, v = 0;
    Sign sign = Sign::positive;

    auto operator<=>(const MultiEdge &) const = default;
};

// A signed multigraph whose vertices carry magnitude labels.  Loops have
// u == v.  Used for reduced colourings and the target graphs K*_k.
class SignedMultigraph {
public:
    SignedMultigraph() = default;
    SignedMultigraph(std::vector<int> labels, std::vector<MultiEdge> edges);

    auto order() const -> int { return static_cast<int>(labels_.size()); }
    auto size() const -> int { return static_cast<int>(edges_.size()); }
    auto labels() const -> const std::vector<int> & { return labels_; }
    auto edges() const -> const std::vector<MultiEdge> & { return edges_; }

    // Drops repeated edges with the same endpoints and sign.
    auto simplified() const -> SignedMultigraph;

    // Equality of the labelled multigraphs: same label set, same multiset of
    // (label pair, sign).
    auto operator==(const SignedMultigraph & other) const -> bool;

private:
    auto label_edges() const -> std::vector<MultiEdge>;

    std::vector<int> labels_;
    std::vector<MultiEdge> edges_;
};

// A colour from M_k: 0 or +-i.
struct Colour {
    int value = 0;

    constexpr auto magnitude() const -> int { return value < 0 ? -value : value; }
    constexpr auto is_negative() const -> bool { return value < 0; }
    auto operator<=>(const Colour &) const = default;
};

auto to_string(Colour c) -> std::string;

// The type of a coloured edge: unordered magnitude pair plus effective sign.
struct EdgeType {
    int i = 0, j = 0;
    Sign sign = Sign::positive;

    auto operator<=>(const EdgeType &) const = default;
};

auto max_magnitude(int k) -> int;
auto has_zero_colour(int k) -> bool;
// The colours of M_k in ascending order.
auto colour_set(int k) -> std::vector<Colour>;
// The allowed magnitudes of M_k in ascending order.
auto magnitude_set(int k) -> std::vector<int>;

// Number of edges of K*_k.
auto kstar_size(int k) -> int;
auto kstar_balance(int k) -> Parity;
auto build_kstar(int k) -> SignedMultigraph;
// Largest k with kstar_size(k) <= edges.
auto largest_k_within(int edges) -> int;

auto complete_graph(int n, Sign s) -> SignedGraph;
// Path 0-1-...-(n-1) where signs[i] is the sign of edge (i, i+1).
auto path_graph(std::span<const Sign> signs) -> SignedGraph;
// Cycle 0-1-...-(n-1)-0 where signs[i] is the sign of edge (i, (i+1) mod n).
auto cycle_graph(std::span<const Sign> signs) -> SignedGraph;

// Undirected simple graph, used for the unsigned achromatic number and the
// hardness reduction.
class UnsignedGraph {
public:
    UnsignedGraph() = default;
    UnsignedGraph(int order, std::vector<std::pair<int, int>> edges);

    auto order() const -> int { return order_; }
    auto size() const -> int { return static_cast<int>(edges_.size()); }
    auto edges() const -> const std::vector<std::pair<int, int>> & { return edges_; }
    auto adjacent(int u, int v) const -> bool { return matrix_[u * order_ + v]; }

private:
    int order_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<char> matrix_;
};

auto underlying(const SignedGraph & g) -> UnsignedGraph;

}
