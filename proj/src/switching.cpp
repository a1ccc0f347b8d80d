#include <sgc/switching.hpp>

#include <deque>

namespace sgc {

SwitchSet::SwitchSet(int order, const std::vector<int> & members) :
    mask_(order, false)
{
    for (int v : members) {
        if (v < 0 || v >= order)
            throw InvalidParameter("switch set vertex out of range: " + std::to_string(v));
        mask_[v] = true;
    }
}

auto SwitchSet::from_mask(std::vector<bool> mask) -> SwitchSet
{
    SwitchSet result;
    result.mask_ = std::move(mask);
    return result;
}

auto SwitchSet::members() const -> std::vector<int>
{
    std::vector<int> result;
    for (int v = 0 ; v < order() ; ++v)
        if (mask_[v])
            result.push_back(v);
    return result;
}

auto SwitchSet::compose(const SwitchSet & other) const -> SwitchSet
{
    if (order() != other.order())
        throw InvalidParameter("switch sets of different orders");
    std::vector<bool> mask(mask_.size());
    for (std::size_t v = 0 ; v < mask.size() ; ++v)
        mask[v] = mask_[v] != other.mask_[v];
    return from_mask(std::move(mask));
}

auto switch_vertices(const SignedGraph & g, const SwitchSet & s) -> SignedGraph
{
    if (s.order() != g.order())
        throw InvalidParameter("switch set does not match graph order");
    auto edges = g.edges();
    for (auto & e : edges)
        if (s.contains(e.u) != s.contains(e.v))
            e.sign = flip(e.sign);
    return SignedGraph{g.order(), std::move(edges)};
}

auto canonical_form(const SignedGraph & g) -> CanonicalForm
{
    int n = g.order();
    std::vector<bool> visited(n, false), switched(n, false);
    for (int root = 0 ; root < n ; ++root) {
        if (visited[root])
            continue;
        visited[root] = true;
        std::deque<int> queue{root};
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbours(v)) {
                if (visited[w])
                    continue;
                visited[w] = true;
                bool negative = *g.sign(v, w) == Sign::negative;
                switched[w] = switched[v] != negative;
                queue.push_back(w);
            }
        }
    }
    auto s = SwitchSet::from_mask(std::move(switched));
    return CanonicalForm{switch_vertices(g, s), s};
}

auto same_underlying(const SignedGraph & a, const SignedGraph & b) -> bool
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    for (int i = 0 ; i < a.size() ; ++i)
        if (a.edges()[i].u != b.edges()[i].u || a.edges()[i].v != b.edges()[i].v)
            return false;
    return true;
}

auto are_equivalent(const SignedGraph & a, const SignedGraph & b) -> bool
{
    if (! same_underlying(a, b))
        throw InvalidParameter("graphs have different underlying graphs");
    return canonical_form(a).graph == canonical_form(b).graph;
}

}
