#include <sgc/bounds.hpp>
#include <sgc/switching.hpp>

#include <algorithm>

namespace sgc {

auto to_string(Relation r) -> std::string
{
    switch (r) {
        case Relation::at_least: return ">=";
        case Relation::at_most: return "<=";
        case Relation::equals: return "=";
    }
    return "?";
}

auto to_string(Rule r) -> std::string
{
    switch (r) {
        case Rule::complete_witness: return "complete-witness";
        case Rule::order_bound: return "order-bound";
        case Rule::matching_bound: return "matching-bound";
        case Rule::size_bound: return "size-bound";
        case Rule::negative_clique: return "negative-clique";
        case Rule::negative_clique_minus_matching: return "negative-clique-minus-matching";
        case Rule::sign_changes: return "sign-changes";
        case Rule::vertex_removal: return "vertex-removal";
        case Rule::edge_removal: return "edge-removal";
        case Rule::exhaustive_search: return "exhaustive-search";
    }
    return "?";
}

auto ChainCheck::all_ok() const -> bool
{
    return std::all_of(steps.begin(), steps.end(), [] (const StepCheck & s) { return s.ok; });
}

auto ChainCheck::lower(const std::string & subject) const -> std::optional<int>
{
    std::optional<int> best;
    for (auto & f : established)
        if (f.subject == subject && f.relation == Relation::at_least)
            best = std::max(best.value_or(f.value), f.value);
    return best;
}

auto ChainCheck::upper(const std::string & subject) const -> std::optional<int>
{
    std::optional<int> best;
    for (auto & f : established)
        if (f.subject == subject && f.relation == Relation::at_most)
            best = std::min(best.value_or(f.value), f.value);
    return best;
}

auto ChainCheck::implies(const Fact & f) const -> bool
{
    auto lo = lower(f.subject), hi = upper(f.subject);
    switch (f.relation) {
        case Relation::at_least: return lo && *lo >= f.value;
        case Relation::at_most: return hi && *hi <= f.value;
        case Relation::equals: return lo && hi && *lo == f.value && *hi == f.value;
    }
    return false;
}

auto BoundChain::add(BoundStep step) -> BoundChain &
{
    steps_.push_back(std::move(step));
    return *this;
}

auto BoundChain::graph_of(const std::string & subject) const -> const SignedGraph *
{
    for (auto & s : steps_)
        if (s.conclusion.subject == subject)
            return &s.graph;
    return nullptr;
}

namespace {
    auto fail(std::string why) -> StepCheck
    {
        return StepCheck{false, std::move(why)};
    }

    auto equivalent(const SignedGraph & a, const SignedGraph & b) -> bool
    {
        return same_underlying(a, b) && are_equivalent(a, b);
    }

    // Whether g, up to switching, is the all-negative signing of itself and
    // its complement in K_n is a matching of the given kind.
    auto negative_complete_minus(const SignedGraph & g, bool want_matching) -> bool
    {
        if (! equivalent(g, g.with_all_signs(Sign::negative)))
            return false;
        std::vector<int> missing_degree(g.order(), 0);
        int missing = 0;
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v)
                if (! g.adjacent(u, v)) {
                    ++missing;
                    ++missing_degree[u];
                    ++missing_degree[v];
                }
        if (! want_matching)
            return missing == 0;
        return missing > 0 && std::all_of(missing_degree.begin(), missing_degree.end(), [] (int d) { return d <= 1; });
    }

    auto relational(const BoundStep & step, const ChainCheck & so_far, const SignedGraph & premise) -> StepCheck
    {
        auto & c = step.conclusion;
        auto lo = so_far.lower(step.premise), hi = so_far.upper(step.premise);
        // Amounts by which the conclusion may fall below the premise's lower
        // bound, or exceed its upper bound.
        int down = 0, up = 0;

        switch (step.rule) {
            case Rule::sign_changes: {
                auto restored = step.graph;
                for (auto [u, v] : step.edits) {
                    if (! restored.adjacent(u, v))
                        return fail("changed pair is not an edge");
                    restored = restored.with_edge_flipped(u, v);
                }
                if (! equivalent(restored, premise))
                    return fail("graph is not the premise with the listed sign changes");
                down = up = 2 * static_cast<int>(step.edits.size());
                break;
            }
            case Rule::vertex_removal: {
                if (step.edits.size() != 1)
                    return fail("vertex removal needs one vertex");
                int v = step.edits.front().first;
                if (v < premise.order() && premise.order() == step.graph.order() + 1 && equivalent(premise.without_vertex(v), step.graph))
                    down = 2, up = 0;
                else if (v < step.graph.order() && step.graph.order() == premise.order() + 1 && equivalent(step.graph.without_vertex(v), premise))
                    down = 0, up = 2;
                else
                    return fail("graphs do not differ by the listed vertex");
                break;
            }
            case Rule::edge_removal: {
                if (step.edits.size() != 1)
                    return fail("edge removal needs one edge");
                auto [u, v] = step.edits.front();
                bool smaller = premise.order() == step.graph.order() && premise.adjacent(u, v)
                    && same_underlying(premise.without_edge(u, v), step.graph) && equivalent(premise.without_edge(u, v), step.graph);
                bool larger = premise.order() == step.graph.order() && step.graph.adjacent(u, v)
                    && same_underlying(step.graph.without_edge(u, v), premise) && equivalent(step.graph.without_edge(u, v), premise);
                if (! smaller && ! larger)
                    return fail("graphs do not differ by the listed edge");
                down = up = 2;
                break;
            }
            default:
                return fail("not a relational rule");
        }

        if (c.relation == Relation::at_least) {
            if (! lo)
                return fail("no lower bound known for " + step.premise);
            if (c.value > *lo - down)
                return fail("lower bound does not follow");
            return StepCheck{true, "from " + step.premise + " >= " + std::to_string(*lo)};
        }
        if (c.relation == Relation::at_most) {
            if (! hi)
                return fail("no upper bound known for " + step.premise);
            if (c.value < *hi + up)
                return fail("upper bound does not follow");
            return StepCheck{true, "from " + step.premise + " <= " + std::to_string(*hi)};
        }
        return fail("relational steps give one-sided bounds");
    }
}

auto BoundChain::verify(const SearchOptions & options) const -> ChainCheck
{
    ChainCheck result;
    for (auto & step : steps_) {
        auto & c = step.conclusion;
        auto & g = step.graph;
        StepCheck check;
        bool upper_fact = c.relation == Relation::at_most;
        switch (step.rule) {
            case Rule::complete_witness:
                if (c.relation != Relation::at_least || ! step.colouring)
                    check = fail("a witness proves a lower bound");
                else if (step.colouring->k() != c.value)
                    check = fail("witness has the wrong number of colours");
                else if (! is_inferred_complete(g, *step.colouring))
                    check = fail("witness is not complete");
                else
                    check = StepCheck{true, "complete " + std::to_string(c.value) + "-colouring checked"};
                break;
            case Rule::order_bound:
                check = upper_fact && c.value >= g.order() ? StepCheck{true, "order " + std::to_string(g.order())}
                    : fail("order bound does not give this value");
                break;
            case Rule::matching_bound: {
                int bound = 2 * maximum_matching_size(g) + 1;
                check = upper_fact && c.value >= bound ? StepCheck{true, "maximum matching " + std::to_string(maximum_matching_size(g))}
                    : fail("matching bound does not give this value");
                break;
            }
            case Rule::size_bound: {
                int bound = largest_k_within(g.size());
                check = upper_fact && c.value >= bound ? StepCheck{true, "size " + std::to_string(g.size())}
                    : fail("size bound does not give this value");
                break;
            }
            case Rule::negative_clique:
                check = upper_fact && c.value >= 2 && g.order() >= 5 && negative_complete_minus(g, false)
                    ? StepCheck{true, "switching-equivalent to (K_" + std::to_string(g.order()) + ", -)"}
                    : fail("not an all-negative complete graph on at least 5 vertices");
                break;
            case Rule::negative_clique_minus_matching:
                check = upper_fact && c.value >= 3 && g.order() >= 5 && negative_complete_minus(g, true)
                    ? StepCheck{true, "switching-equivalent to (K_" + std::to_string(g.order()) + " - M, -)"}
                    : fail("not an all-negative complete graph minus a matching on at least 5 vertices");
                break;
            case Rule::sign_changes:
            case Rule::vertex_removal:
            case Rule::edge_removal: {
                auto premise = graph_of(step.premise);
                check = premise ? relational(step, result, *premise) : fail("unknown premise " + step.premise);
                break;
            }
            case Rule::exhaustive_search: {
                if (! upper_fact) {
                    check = fail("exhaustive search proves an upper bound");
                    break;
                }
                int top = psi_upper_bound(g).value;
                SearchStats stats;
                try {
                    bool refuted = true;
                    for (int k = top ; k > c.value && refuted ; --k)
                        refuted = ! exists_complete_k(g, k, options, &stats);
                    check = refuted ? StepCheck{true, "no complete k-colouring for " + std::to_string(c.value + 1) + ".."
                                    + std::to_string(top) + " (" + std::to_string(stats.nodes) + " nodes)"}
                                    : fail("a larger complete colouring exists");
                }
                catch (const ResourceExhausted & e) {
                    check = fail(std::string{"search budget exhausted: "} + e.what());
                }
                break;
            }
        }
        if (check.ok)
            result.established.push_back(c);
        result.steps.push_back(std::move(check));
    }
    return result;
}

namespace {
    auto step(Rule rule, const std::string & subject, Relation relation, int value, const SignedGraph & g) -> BoundStep
    {
        BoundStep s;
        s.rule = rule;
        s.conclusion = Fact{subject, relation, value};
        s.graph = g;
        return s;
    }
}

auto witness_step(const std::string & subject, const SignedGraph & g, const InferredColouring & c) -> BoundStep
{
    auto s = step(Rule::complete_witness, subject, Relation::at_least, c.k(), g);
    s.colouring = c;
    return s;
}

auto order_step(const std::string & subject, const SignedGraph & g) -> BoundStep
{
    return step(Rule::order_bound, subject, Relation::at_most, g.order(), g);
}

auto matching_step(const std::string & subject, const SignedGraph & g) -> BoundStep
{
    return step(Rule::matching_bound, subject, Relation::at_most, 2 * maximum_matching_size(g) + 1, g);
}

auto size_step(const std::string & subject, const SignedGraph & g) -> BoundStep
{
    return step(Rule::size_bound, subject, Relation::at_most, largest_k_within(g.size()), g);
}

auto negative_clique_step(const std::string & subject, const SignedGraph & g) -> BoundStep
{
    return step(Rule::negative_clique, subject, Relation::at_most, 2, g);
}

auto negative_clique_minus_matching_step(const std::string & subject, const SignedGraph & g) -> BoundStep
{
    return step(Rule::negative_clique_minus_matching, subject, Relation::at_most, 3, g);
}

auto sign_change_step(const std::string & subject, const SignedGraph & g, const std::string & premise,
        std::vector<std::pair<int, int>> flipped, Relation relation, int value) -> BoundStep
{
    auto s = step(Rule::sign_changes, subject, relation, value, g);
    s.premise = premise;
    s.edits = std::move(flipped);
    return s;
}

auto vertex_removal_step(const std::string & subject, const SignedGraph & g, const std::string & premise,
        int removed, Relation relation, int value) -> BoundStep
{
    auto s = step(Rule::vertex_removal, subject, relation, value, g);
    s.premise = premise;
    s.edits = {{removed, removed}};
    return s;
}

auto edge_removal_step(const std::string & subject, const SignedGraph & g, const std::string & premise,
        std::pair<int, int> removed, Relation relation, int value) -> BoundStep
{
    auto s = step(Rule::edge_removal, subject, relation, value, g);
    s.premise = premise;
    s.edits = {removed};
    return s;
}

auto exhaustive_step(const std::string & subject, const SignedGraph & g, int value) -> BoundStep
{
    return step(Rule::exhaustive_search, subject, Relation::at_most, value, g);
}

}
