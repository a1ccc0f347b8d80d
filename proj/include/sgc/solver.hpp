#pragma once

#include <sgc/colouring.hpp>
#include <sgc/core.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace sgc {

struct SearchOptions {
    std::optional<std::uint64_t> node_budget;
    unsigned workers = 1;
    // Turns off the symmetry breaking; used to cross-check it.
    bool symmetry_breaking = true;
};

struct SearchStats {
    std::uint64_t nodes = 0;
};

// Size of a maximum matching of the underlying graph.
auto maximum_matching_size(const SignedGraph & g) -> int;
auto maximum_matching_size(const UnsignedGraph & g) -> int;

struct UpperBound {
    int value = 1;
    int order_bound = 0;
    int matching_bound = 0;
    int size_bound = 0;
};

// min(order, 2 * matching + 1, largest k with kstar_size(k) <= size).
auto psi_upper_bound(const SignedGraph & g) -> UpperBound;

// Searches for a complete k-colouring, returned in inferred form.  Throws
// ResourceExhausted if the node budget runs out.
auto exists_complete_k(const SignedGraph & g, int k, const SearchOptions & options = {},
        SearchStats * stats = nullptr) -> std::optional<InferredColouring>;

struct PsiResult {
    int value = 1;
    InferredColouring witness;
    UpperBound upper_bound;
    // Values of k strictly above value, up to the upper bound, that the
    // search refuted.
    std::vector<int> refuted;
    std::uint64_t nodes = 0;
};

auto psi(const SignedGraph & g, const SearchOptions & options = {}) -> PsiResult;

struct ChiResult {
    int value = 1;
    Colouring witness;
    std::vector<int> refuted;
    std::uint64_t nodes = 0;
};

// Searches for a proper colouring using colours from M_k.
auto exists_proper_k(const SignedGraph & g, int k, const SearchOptions & options = {},
        SearchStats * stats = nullptr) -> std::optional<Colouring>;
auto chi(const SignedGraph & g, const SearchOptions & options = {}) -> ChiResult;

struct UnsignedColouringResult {
    int value = 1;
    std::vector<int> colours;  // 1..value
    std::uint64_t nodes = 0;
};

auto is_complete_unsigned(const UnsignedGraph & g, const std::vector<int> & colours, int k) -> bool;
// Classical achromatic number.
auto psi_unsigned(const UnsignedGraph & g, const SearchOptions & options = {}) -> UnsignedColouringResult;

// For each edge type of K*_k, the least graph edge realizing it; returns the
// union of their endpoints, ascending.
auto witness_subgraph(const SignedGraph & g, const Colouring & phi) -> std::vector<int>;

}
