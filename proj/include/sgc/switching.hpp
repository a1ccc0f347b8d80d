#pragma once

#include <sgc/core.hpp>

#include <vector>

namespace sgc {

// A set of vertices to switch.
class SwitchSet {
public:
    SwitchSet() = default;
    SwitchSet(int order, const std::vector<int> & members);

    static auto from_mask(std::vector<bool> mask) -> SwitchSet;

    auto order() const -> int { return static_cast<int>(mask_.size()); }
    auto contains(int v) const -> bool { return mask_[v]; }
    auto members() const -> std::vector<int>;
    // Symmetric difference.
    auto compose(const SwitchSet & other) const -> SwitchSet;

    auto operator==(const SwitchSet &) const -> bool = default;

private:
    std::vector<bool> mask_;
};

auto switch_vertices(const SignedGraph & g, const SwitchSet & s) -> SignedGraph;

struct CanonicalForm {
    SignedGraph graph;
    SwitchSet switched;
};

// Switches so that a BFS spanning forest (roots are least vertices, neighbours
// visited in index order) is all-positive.  switch_vertices(g, switched)
// equals graph.
auto canonical_form(const SignedGraph & g) -> CanonicalForm;

auto same_underlying(const SignedGraph & a, const SignedGraph & b) -> bool;

// Switching equivalence.  Throws InvalidParameter if the underlying graphs
// differ.
auto are_equivalent(const SignedGraph & a, const SignedGraph & b) -> bool;

}
