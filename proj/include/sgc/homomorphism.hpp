#pragma once

#include <sgc/core.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace sgc {

using SignedNeighbourhood = std::vector<std::pair<int, Sign>>;

// Neighbours of v with the signs of the joining edges, ascending.
auto signed_neighbourhood(const SignedGraph & g, int v) -> SignedNeighbourhood;

enum class Identification { same, flipped };

// How u and v may be identified: same when every common neighbour sees
// them with equal signs, flipped when the signs all differ.  Empty if they
// are adjacent or the signs are mixed.
auto identification(const SignedGraph & g, int u, int v) -> std::optional<Identification>;
auto identifiable(const SignedGraph & g, int u, int v) -> bool;

// Merges v into u, switching v first in the flipped case.  Vertices above v
// move down by one.
auto identify(const SignedGraph & g, int u, int v) -> SignedGraph;

// Vertex map from g onto h preserving edges and signs, given that h was
// produced from g by switching the vertices in switched.
auto is_homomorphism(const SignedGraph & g, const SignedGraph & h, const std::vector<int> & map,
        const std::vector<int> & switched) -> bool;

auto congruence_classes(const SignedGraph & g) -> std::vector<std::vector<int>>;
auto reduced_signed_graph(const SignedGraph & g) -> SignedGraph;
auto is_irreducible(const SignedGraph & g) -> bool;

}
