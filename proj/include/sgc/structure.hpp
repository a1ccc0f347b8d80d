#pragma once

#include <sgc/core.hpp>

#include <vector>

namespace sgc {

// Exhaustive structural queries on small underlying graphs.

auto clique_number(const UnsignedGraph & g) -> int;

// Whether g has an induced subgraph isomorphic to pattern.
auto contains_induced(const UnsignedGraph & g, const UnsignedGraph & pattern) -> bool;

// Disjoint union of paths with the given vertex counts.
auto linear_forest(const std::vector<int> & path_orders) -> UnsignedGraph;

// Connected components, each ascending, ordered by least vertex.
auto components(const UnsignedGraph & g) -> std::vector<std::vector<int>>;

// Order of a longest induced path.
auto longest_induced_path(const UnsignedGraph & g) -> int;

}
