#pragma once

#include <sgc/colouring.hpp>
#include <sgc/core.hpp>
#include <sgc/solver.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgc {

// Machine-checkable derivations of bounds on the achromatic number.  A chain
// is a list of steps; each step proves one fact about a named graph, using
// only its own data and facts proved by earlier steps.

enum class Relation { at_least, at_most, equals };

auto to_string(Relation r) -> std::string;

struct Fact {
    std::string subject;
    Relation relation = Relation::at_least;
    int value = 0;
};

enum class Rule {
    complete_witness,         // a complete colouring: psi >= k
    order_bound,              // psi <= order
    matching_bound,           // psi <= 2 * matching + 1
    size_bound,               // psi <= largest k with kstar_size(k) <= size
    negative_clique,          // equivalent to (K_n, -), n >= 5: psi <= 2
    negative_clique_minus_matching,  // equivalent to (K_n - M, -), n >= 5: psi <= 3
    sign_changes,             // t sign changes move psi by at most 2t
    vertex_removal,           // psi(G - v) in [psi(G) - 2, psi(G)]
    edge_removal,             // psi(G - e) in [psi(G) - 2, psi(G) + 2]
    exhaustive_search,        // the solver refutes every larger k
};

auto to_string(Rule r) -> std::string;

struct BoundStep {
    Rule rule = Rule::order_bound;
    Fact conclusion;
    SignedGraph graph;
    std::optional<InferredColouring> colouring;
    // For rules relating two graphs: the premise graph's subject name and the
    // edits (flipped edges, removed edge, or removed vertex as (v, v)).
    std::string premise;
    std::vector<std::pair<int, int>> edits;
};

struct StepCheck {
    bool ok = false;
    std::string detail;
};

struct ChainCheck {
    std::vector<StepCheck> steps;
    std::vector<Fact> established;

    auto all_ok() const -> bool;
    // Whether the established facts imply the given one.
    auto implies(const Fact & f) const -> bool;
    auto lower(const std::string & subject) const -> std::optional<int>;
    auto upper(const std::string & subject) const -> std::optional<int>;
};

class BoundChain {
public:
    auto add(BoundStep step) -> BoundChain &;
    auto steps() const -> const std::vector<BoundStep> & { return steps_; }
    auto graph_of(const std::string & subject) const -> const SignedGraph *;

    // Checks every step.  Exhaustive searches use the given options.
    auto verify(const SearchOptions & options = {}) const -> ChainCheck;

private:
    std::vector<BoundStep> steps_;
};

// Step builders.
auto witness_step(const std::string & subject, const SignedGraph & g, const InferredColouring & c) -> BoundStep;
auto order_step(const std::string & subject, const SignedGraph & g) -> BoundStep;
auto matching_step(const std::string & subject, const SignedGraph & g) -> BoundStep;
auto size_step(const std::string & subject, const SignedGraph & g) -> BoundStep;
auto negative_clique_step(const std::string & subject, const SignedGraph & g) -> BoundStep;
auto negative_clique_minus_matching_step(const std::string & subject, const SignedGraph & g) -> BoundStep;
auto sign_change_step(const std::string & subject, const SignedGraph & g, const std::string & premise,
        std::vector<std::pair<int, int>> flipped, Relation relation, int value) -> BoundStep;
auto vertex_removal_step(const std::string & subject, const SignedGraph & g, const std::string & premise,
        int removed, Relation relation, int value) -> BoundStep;
auto edge_removal_step(const std::string & subject, const SignedGraph & g, const std::string & premise,
        std::pair<int, int> removed, Relation relation, int value) -> BoundStep;
auto exhaustive_step(const std::string & subject, const SignedGraph & g, int value) -> BoundStep;

}
