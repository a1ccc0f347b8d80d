#pragma once

#include <sgc/core.hpp>
#include <sgc/switching.hpp>

#include <vector>

namespace sgc {

// A total assignment of colours from M_k to the vertices of a graph.
class Colouring {
public:
    Colouring() = default;
    Colouring(int k, std::vector<Colour> colours);
    Colouring(int k, const std::vector<int> & colours);

    auto k() const -> int { return k_; }
    auto size() const -> int { return static_cast<int>(colours_.size()); }
    auto operator[](int v) const -> Colour { return colours_[v]; }
    auto colours() const -> const std::vector<Colour> & { return colours_; }

    auto operator==(const Colouring &) const -> bool = default;

private:
    int k_ = 1;
    std::vector<Colour> colours_;
};

enum class Flag : std::int8_t { minus = -1, plus = 1 };

constexpr auto flag_sign(Flag f) -> Sign
{
    return f == Flag::plus ? Sign::positive : Sign::negative;
}

struct SignedColour {
    int magnitude = 0;
    Flag flag = Flag::plus;

    auto operator<=>(const SignedColour &) const = default;
};

auto to_string(SignedColour c) -> std::string;

// A colouring that also records, per vertex, whether it is switched (minus)
// before being coloured with +magnitude.
class InferredColouring {
public:
    InferredColouring() = default;
    InferredColouring(int k, std::vector<SignedColour> colours);

    auto k() const -> int { return k_; }
    auto size() const -> int { return static_cast<int>(colours_.size()); }
    auto operator[](int v) const -> SignedColour { return colours_[v]; }
    auto colours() const -> const std::vector<SignedColour> & { return colours_; }

    auto operator==(const InferredColouring &) const -> bool = default;

private:
    int k_ = 1;
    std::vector<SignedColour> colours_;
};

// Reads a plain colouring as an inferred one: a vertex coloured -i is
// flagged minus and coloured i.
auto infer(const Colouring & phi) -> InferredColouring;

auto is_proper(const SignedGraph & g, const Colouring & phi) -> bool;
auto classify_edge(const SignedGraph & g, const Colouring & phi, int u, int v) -> EdgeType;

// The reduced multigraph of a proper colouring: switch negative-coloured
// vertices, identify equal magnitudes, drop parallel edges of equal sign.
auto reduce(const SignedGraph & g, const Colouring & phi) -> SignedMultigraph;
auto is_complete(const SignedGraph & g, const Colouring & phi) -> bool;

// The switched graph and plain colouring that an inferred colouring denotes.
struct Realization {
    SignedGraph graph;
    Colouring colouring;
};

auto realize(const SignedGraph & g, const InferredColouring & gamma) -> Realization;
auto is_inferred_proper(const SignedGraph & g, const InferredColouring & gamma) -> bool;
auto is_inferred_complete(const SignedGraph & g, const InferredColouring & gamma) -> bool;

// The colouring and graph after switching a set: colours on switched
// vertices are negated, so properness and completeness are preserved.
auto switch_colouring(const Colouring & phi, const SwitchSet & s) -> Colouring;

auto negate_colour_class(const Colouring & phi, int i) -> Colouring;
auto swap_inferred_flags(const InferredColouring & gamma, int i) -> InferredColouring;

struct ColouredGraph {
    SignedGraph graph;
    Colouring colouring;
    std::vector<int> kept;  // original indices of the surviving vertices
};

// Deletes the vertices of magnitude i and relabels the largest remaining
// magnitude into the gap, giving a colouring over M_{k-2} (or M_{k-1} when
// i is 0).
auto drop_colour_class(const SignedGraph & g, const Colouring & phi, int i) -> ColouredGraph;

}
