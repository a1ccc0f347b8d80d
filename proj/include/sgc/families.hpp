#pragma once

#include <sgc/bounds.hpp>
#include <sgc/colouring.hpp>
#include <sgc/core.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sgc {

struct Marked {
    enum class Kind { none, vertex, edge, pair };
    Kind kind = Kind::none;
    int a = -1, b = -1;
};

struct Claim {
    std::string subject;  // "G" for the instance, "G'" after the marked operation
    Relation relation = Relation::equals;
    int value = 0;
};

// A generated instance with the values its construction claims, the
// colourings it ships, and a bound chain certifying the claims.
//
// Vertex names are listed in index order, so construction labels map to indices.
struct FamilyInstance {
    std::string family;
    std::vector<int> parameters;
    SignedGraph graph;
    std::vector<std::string> names;
    Marked marked;
    std::optional<int> claimed_psi;
    std::optional<int> claimed_after;
    std::optional<SignedGraph> after;
    std::optional<InferredColouring> witness;
    std::optional<InferredColouring> witness_after;
    std::optional<Colouring> proper_witness;
    std::vector<Claim> claims;
    BoundChain chain;
    bool illustrated = true;
};

struct Certification {
    ChainCheck chain;
    std::vector<bool> claims;  // parallel to FamilyInstance::claims

    auto all_ok() const -> bool;
};

auto certify(const FamilyInstance & instance, const SearchOptions & options = {}) -> Certification;

// psi drops by 2 when u1 is removed.
auto gen_remove_vertex(int k) -> FamilyInstance;
// psi drops by 2 when the sign of u1v1 changes.
auto gen_resign_edge(int k) -> FamilyInstance;
// The same pair of graphs read in the other direction: psi rises by 2.
auto gen_resign_edge_upper(int k) -> FamilyInstance;
// psi drops by 2 when the marked edge is removed.
auto gen_remove_edge_lower(int k) -> FamilyInstance;
// psi rises from k-2 to k when the marked edge is removed.
auto gen_remove_edge_upper(int k) -> FamilyInstance;
// Identifying the marked pair is claimed to drop psi from at least k to at
// most k-4.
auto gen_elementary_drop(int k) -> FamilyInstance;
// Positive K_2k with a negative perfect matching, k odd.
auto gen_interpolation(int k) -> FamilyInstance;
auto gen_perfect_counterexample() -> FamilyInstance;
// Negative K_m with a positive matching of size p.
auto gen_irreducible_large(int p, int m) -> FamilyInstance;

auto gen_np_reduction(const UnsignedGraph & g, int k) -> SignedGraph;
// The complete colouring of gen_np_reduction(g, k) built from a complete
// colouring of g (colours 1..k' with k <= k' <= k + N).
auto np_forward_colouring(const UnsignedGraph & g, int k, const std::vector<int> & colours) -> Colouring;

}
