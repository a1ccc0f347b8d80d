#include <sgc/colouring.hpp>

#include <algorithm>
#include <set>

namespace sgc {

namespace {
    auto check_k_colour(int k, int value) -> void
    {
        int h = max_magnitude(k);
        int m = value < 0 ? -value : value;
        if (m > h || (m == 0 && ! has_zero_colour(k)))
            throw InvalidParameter("colour " + std::to_string(value) + " is not in M_" + std::to_string(k));
    }

    auto check_total(const SignedGraph & g, int size) -> void
    {
        if (size != g.order())
            throw InvalidParameter("colouring covers " + std::to_string(size) + " vertices, graph has " + std::to_string(g.order()));
    }

    auto sgn(Colour c) -> Sign
    {
        return c.is_negative() ? Sign::negative : Sign::positive;
    }
}

Colouring::Colouring(int k, std::vector<Colour> colours) :
    k_(k),
    colours_(std::move(colours))
{
    for (auto c : colours_)
        check_k_colour(k, c.value);
}

Colouring::Colouring(int k, const std::vector<int> & colours) :
    k_(k)
{
    for (int c : colours) {
        check_k_colour(k, c);
        colours_.push_back(Colour{c});
    }
}

auto to_string(SignedColour c) -> std::string
{
    return std::to_string(c.magnitude) + (c.flag == Flag::plus ? "+" : "-");
}

InferredColouring::InferredColouring(int k, std::vector<SignedColour> colours) :
    k_(k),
    colours_(std::move(colours))
{
    for (auto c : colours_) {
        if (c.magnitude < 0)
            throw InvalidParameter("negative magnitude in inferred colouring");
        check_k_colour(k, c.magnitude);
    }
}

auto infer(const Colouring & phi) -> InferredColouring
{
    std::vector<SignedColour> result;
    for (auto c : phi.colours())
        result.push_back(SignedColour{c.magnitude(), c.is_negative() ? Flag::minus : Flag::plus});
    return InferredColouring{phi.k(), std::move(result)};
}

auto is_proper(const SignedGraph & g, const Colouring & phi) -> bool
{
    check_total(g, phi.size());
    for (auto & e : g.edges()) {
        int other = e.sign == Sign::positive ? phi[e.v].value : -phi[e.v].value;
        if (phi[e.u].value == other)
            return false;
    }
    return true;
}

auto classify_edge(const SignedGraph & g, const Colouring & phi, int u, int v) -> EdgeType
{
    check_total(g, phi.size());
    auto s = g.sign(u, v);
    if (! s)
        throw InvalidParameter("not an edge: " + std::to_string(u) + " " + std::to_string(v));
    int a = phi[u].magnitude(), b = phi[v].magnitude();
    return EdgeType{std::min(a, b), std::max(a, b), *s * sgn(phi[u]) * sgn(phi[v])};
}

auto reduce(const SignedGraph & g, const Colouring & phi) -> SignedMultigraph
{
    if (! is_proper(g, phi))
        throw InvalidParameter("cannot reduce an improper colouring");

    std::set<int> used;
    for (auto c : phi.colours())
        used.insert(c.magnitude());
    std::vector<int> labels(used.begin(), used.end());
    auto index_of = [&] (int m) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), m) - labels.begin());
    };

    std::vector<MultiEdge> edges;
    for (auto & e : g.edges()) {
        auto t = classify_edge(g, phi, e.u, e.v);
        edges.push_back(MultiEdge{index_of(t.i), index_of(t.j), t.sign});
    }
    return SignedMultigraph{std::move(labels), std::move(edges)}.simplified();
}

auto is_complete(const SignedGraph & g, const Colouring & phi) -> bool
{
    if (! is_proper(g, phi))
        return false;
    std::set<int> used;
    for (auto c : phi.colours())
        used.insert(c.magnitude());
    auto allowed = magnitude_set(phi.k());
    if (used.size() != allowed.size())
        return false;
    return reduce(g, phi) == build_kstar(phi.k());
}

auto realize(const SignedGraph & g, const InferredColouring & gamma) -> Realization
{
    check_total(g, gamma.size());
    std::vector<int> switched;
    std::vector<Colour> colours;
    for (int v = 0 ; v < g.order() ; ++v) {
        if (gamma[v].flag == Flag::minus)
            switched.push_back(v);
        colours.push_back(Colour{gamma[v].magnitude});
    }
    return Realization{switch_vertices(g, SwitchSet{g.order(), switched}), Colouring{gamma.k(), std::move(colours)}};
}

namespace {
    // Effective sign of an edge under an inferred colouring: the sign it has
    // after the minus-flagged vertices are switched.
    auto effective_sign(Sign s, const InferredColouring & gamma, int u, int v) -> Sign
    {
        return s * flag_sign(gamma[u].flag) * flag_sign(gamma[v].flag);
    }

    auto inferred_edge_improper(const Edge & e, const InferredColouring & gamma) -> bool
    {
        int a = gamma[e.u].magnitude, b = gamma[e.v].magnitude;
        if (a != b)
            return false;
        return a == 0 || effective_sign(e.sign, gamma, e.u, e.v) == Sign::positive;
    }
}

auto is_inferred_proper(const SignedGraph & g, const InferredColouring & gamma) -> bool
{
    check_total(g, gamma.size());
    return std::none_of(g.edges().begin(), g.edges().end(),
        [&] (const Edge & e) { return inferred_edge_improper(e, gamma); });
}

auto is_inferred_complete(const SignedGraph & g, const InferredColouring & gamma) -> bool
{
    if (! is_inferred_proper(g, gamma))
        return false;

    int k = gamma.k();
    std::set<int> used;
    for (auto c : gamma.colours())
        used.insert(c.magnitude);
    if (used.size() != magnitude_set(k).size())
        return false;

    std::set<EdgeType> realized;
    for (auto & e : g.edges()) {
        int a = gamma[e.u].magnitude, b = gamma[e.v].magnitude;
        realized.insert(EdgeType{std::min(a, b), std::max(a, b), effective_sign(e.sign, gamma, e.u, e.v)});
    }
    return static_cast<int>(realized.size()) == kstar_size(k);
}

auto switch_colouring(const Colouring & phi, const SwitchSet & s) -> Colouring
{
    if (s.order() != phi.size())
        throw InvalidParameter("switch set does not match colouring");
    auto colours = phi.colours();
    for (int v = 0 ; v < phi.size() ; ++v)
        if (s.contains(v))
            colours[v].value = -colours[v].value;
    return Colouring{phi.k(), std::move(colours)};
}

auto negate_colour_class(const Colouring & phi, int i) -> Colouring
{
    if (i <= 0 || i > max_magnitude(phi.k()))
        throw InvalidParameter("cannot negate colour class " + std::to_string(i));
    auto colours = phi.colours();
    for (auto & c : colours)
        if (c.magnitude() == i)
            c.value = -c.value;
    return Colouring{phi.k(), std::move(colours)};
}

auto swap_inferred_flags(const InferredColouring & gamma, int i) -> InferredColouring
{
    if (i < 0 || i > max_magnitude(gamma.k()) || (i == 0 && ! has_zero_colour(gamma.k())))
        throw InvalidParameter("no colour class " + std::to_string(i));
    auto colours = gamma.colours();
    for (auto & c : colours)
        if (c.magnitude == i)
            c.flag = c.flag == Flag::plus ? Flag::minus : Flag::plus;
    return InferredColouring{gamma.k(), std::move(colours)};
}

auto drop_colour_class(const SignedGraph & g, const Colouring & phi, int i) -> ColouredGraph
{
    check_total(g, phi.size());
    if (! is_complete(g, phi))
        throw InvalidParameter("colour classes are only dropped from a complete colouring");
    int k = phi.k(), h = max_magnitude(k);
    if (i < 0 || i > h || (i == 0 && ! has_zero_colour(k)))
        throw InvalidParameter("no colour class " + std::to_string(i));
    int new_k = i == 0 ? k - 1 : k - 2;
    if (new_k < 1)
        throw InvalidParameter("dropping class " + std::to_string(i) + " leaves no colours");

    std::vector<int> kept;
    std::vector<Colour> colours;
    for (int v = 0 ; v < g.order() ; ++v) {
        auto c = phi[v];
        if (c.magnitude() == i)
            continue;
        kept.push_back(v);
        if (i != 0 && c.magnitude() == h)
            c.value = c.is_negative() ? -i : i;
        colours.push_back(c);
    }
    return ColouredGraph{g.induced(kept), Colouring{new_k, std::move(colours)}, kept};
}

}
