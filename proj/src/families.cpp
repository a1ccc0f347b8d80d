#include <sgc/families.hpp>
#include <sgc/homomorphism.hpp>
#include <sgc/solver.hpp>

#include <algorithm>
#include <set>

namespace sgc {

namespace {
    constexpr auto neg = Sign::negative;
    constexpr auto pos = Sign::positive;

    auto plus(int m) -> SignedColour { return SignedColour{m, Flag::plus}; }
    auto minus(int m) -> SignedColour { return SignedColour{m, Flag::minus}; }

    class Builder {
    public:
        auto add(const std::string & name) -> int
        {
            names_.push_back(name);
            return static_cast<int>(names_.size()) - 1;
        }

        auto edge(int u, int v, Sign s) -> void
        {
            edges_.push_back(Edge{u, v, s});
        }

        auto order() const -> int { return static_cast<int>(names_.size()); }
        auto names() const -> const std::vector<std::string> & { return names_; }
        auto graph() const -> SignedGraph { return SignedGraph{order(), edges_}; }

    private:
        std::vector<std::string> names_;
        std::vector<Edge> edges_;
    };

    auto numbered(const std::string & prefix, int i) -> std::string
    {
        return prefix + std::to_string(i);
    }

    auto check(bool ok, const std::string & what) -> void
    {
        if (! ok)
            throw InvalidParameter(what);
    }

    auto make_instance(const std::string & family, std::vector<int> parameters, const Builder & b) -> FamilyInstance
    {
        FamilyInstance result;
        result.family = family;
        result.parameters = std::move(parameters);
        result.graph = b.graph();
        result.names = b.names();
        return result;
    }

    auto marked_edge(int u, int v) -> Marked { return Marked{Marked::Kind::edge, u, v}; }
}

auto Certification::all_ok() const -> bool
{
    return chain.all_ok() && std::all_of(claims.begin(), claims.end(), [] (bool b) { return b; });
}

auto certify(const FamilyInstance & instance, const SearchOptions & options) -> Certification
{
    Certification result;
    result.chain = instance.chain.verify(options);
    for (auto & c : instance.claims)
        result.claims.push_back(result.chain.implies(Fact{c.subject, c.relation, c.value}));
    return result;
}

auto gen_remove_vertex(int k) -> FamilyInstance
{
    check(k >= 3, "vertex removal family needs k >= 3");
    int p = k / 2;
    Builder b;
    std::vector<int> u(p + 1), v(p + 1);
    for (int i = 1 ; i <= p ; ++i)
        u[i] = b.add(numbered("u", i));
    for (int i = 1 ; i <= p ; ++i)
        v[i] = b.add(numbered("v", i));
    for (int i = 1 ; i <= p ; ++i)
        for (int j = 1 ; j <= p ; ++j)
            b.edge(u[i], v[j], i <= j ? neg : pos);
    int wp = -1, wn = -1;
    if (k % 2 == 1) {
        wp = b.add("wp");
        wn = b.add("wn");
        for (int i = 1 ; i <= p ; ++i) {
            b.edge(wp, u[i], pos);
            b.edge(wn, u[i], neg);
        }
    }

    auto r = make_instance("remove-vertex", {k}, b);
    std::vector<SignedColour> colours(b.order(), plus(0));
    for (int i = 1 ; i <= p ; ++i)
        colours[u[i]] = colours[v[i]] = plus(i);
    r.witness = InferredColouring{k, colours};
    r.marked = Marked{Marked::Kind::vertex, u[1], -1};
    r.after = r.graph.without_vertex(u[1]);
    r.claimed_psi = k;
    r.claimed_after = k - 2;
    r.claims = {{"G", Relation::equals, k}, {"G'", Relation::equals, k - 2}};

    r.chain.add(witness_step("G", r.graph, *r.witness));
    if (k % 2 == 0) {
        r.chain.add(order_step("G", r.graph));
        r.chain.add(size_step("G'", *r.after));
    }
    else {
        r.chain.add(size_step("G", r.graph));
        r.chain.add(matching_step("G'", *r.after));
    }
    r.chain.add(vertex_removal_step("G'", *r.after, "G", u[1], Relation::at_least, k - 2));
    return r;
}

namespace {
    struct ResignPair {
        Builder builder;
        SignedGraph base;             // all-negative graph the chain starts from
        std::vector<std::pair<int, int>> positive;  // matching edges turned positive
        std::pair<int, int> marked;
        std::vector<SignedColour> colours;
        bool base_is_clique = true;
    };

    auto resign_pair(int k) -> ResignPair
    {
        ResignPair r;
        auto & b = r.builder;
        int p = k / 2;
        if (k % 2 == 0) {
            std::vector<int> u(p + 1), v(p + 1);
            for (int i = 1 ; i <= p ; ++i)
                u[i] = b.add(numbered("u", i));
            for (int i = 1 ; i <= p ; ++i)
                v[i] = b.add(numbered("v", i));
            for (int i = 1 ; i < p ; ++i)
                r.positive.emplace_back(u[i], v[i]);
            r.marked = {u[1], v[1]};
            r.colours.assign(b.order(), plus(p));
            for (int i = 1 ; i < p ; ++i) {
                r.colours[u[i]] = plus(i);
                r.colours[v[i]] = minus(i);
            }
            std::vector<Edge> base;
            for (int x = 0 ; x < b.order() ; ++x)
                for (int y = x + 1 ; y < b.order() ; ++y)
                    base.push_back(Edge{x, y, neg});
            r.base = SignedGraph{b.order(), base};
        }
        else {
            std::vector<int> u(p + 1), v(p + 1);
            for (int i = 0 ; i <= p ; ++i)
                u[i] = b.add(numbered("u", i));
            for (int i = 0 ; i <= p ; ++i)
                v[i] = b.add(numbered("v", i));
            for (int i = 1 ; i < p ; ++i)
                r.positive.emplace_back(u[i], v[i]);
            r.marked = {u[1], v[1]};
            r.colours.assign(b.order(), plus(p));
            r.colours[u[0]] = minus(0);
            r.colours[v[0]] = plus(0);
            for (int i = 1 ; i < p ; ++i) {
                r.colours[u[i]] = plus(i);
                r.colours[v[i]] = minus(i);
            }
            std::vector<Edge> base;
            for (int x = 0 ; x < b.order() ; ++x)
                for (int y = x + 1 ; y < b.order() ; ++y)
                    if (! (x == u[0] && y == v[0]))
                        base.push_back(Edge{x, y, neg});
            r.base = SignedGraph{b.order(), base};
            r.base_is_clique = false;
        }
        for (auto & e : r.base.edges()) {
            bool positive = std::find(r.positive.begin(), r.positive.end(), std::pair{e.u, e.v}) != r.positive.end();
            b.edge(e.u, e.v, positive ? pos : neg);
        }
        return r;
    }

    auto base_step(const ResignPair & r) -> BoundStep
    {
        if (! r.base_is_clique)
            return negative_clique_minus_matching_step("base", r.base);
        if (r.base.order() >= 5)
            return negative_clique_step("base", r.base);
        return exhaustive_step("base", r.base, 2);
    }

    auto base_value(const ResignPair & r) -> int
    {
        return r.base_is_clique ? 2 : 3;
    }
}

auto gen_resign_edge(int k) -> FamilyInstance
{
    check(k >= 4, "sign change family needs k >= 4");
    auto pair = resign_pair(k);
    auto r = make_instance("resign-edge", {k}, pair.builder);
    auto [a, b] = pair.marked;
    r.marked = marked_edge(a, b);
    r.after = r.graph.with_edge_flipped(a, b);
    r.witness = InferredColouring{k, pair.colours};
    r.claimed_psi = k;
    r.claimed_after = k - 2;
    r.claims = {{"G", Relation::equals, k}, {"G'", Relation::equals, k - 2}};

    auto rest = pair.positive;
    rest.erase(rest.begin());
    int t = static_cast<int>(pair.positive.size());
    r.chain.add(base_step(pair));
    r.chain.add(witness_step("G", r.graph, *r.witness));
    r.chain.add(sign_change_step("G", r.graph, "base", pair.positive, Relation::at_most, base_value(pair) + 2 * t));
    r.chain.add(sign_change_step("G'", *r.after, "base", rest, Relation::at_most, base_value(pair) + 2 * (t - 1)));
    r.chain.add(sign_change_step("G'", *r.after, "G", {pair.marked}, Relation::at_least, k - 2));
    return r;
}

auto gen_resign_edge_upper(int k) -> FamilyInstance
{
    check(k >= 4, "sign change family needs k >= 4");
    auto pair = resign_pair(k);
    auto forward = gen_resign_edge(k);
    auto r = forward;
    r.family = "resign-edge-upper";
    r.graph = *forward.after;
    r.after = forward.graph;
    r.witness = std::nullopt;
    r.witness_after = forward.witness;
    r.claimed_psi = k - 2;
    r.claimed_after = k;
    r.claims = {{"G", Relation::equals, k - 2}, {"G'", Relation::equals, k}};
    r.illustrated = false;

    auto rest = pair.positive;
    rest.erase(rest.begin());
    int t = static_cast<int>(pair.positive.size());
    r.chain = BoundChain{};
    r.chain.add(base_step(pair));
    r.chain.add(witness_step("G'", *r.after, *r.witness_after));
    r.chain.add(sign_change_step("G'", *r.after, "base", pair.positive, Relation::at_most, base_value(pair) + 2 * t));
    r.chain.add(sign_change_step("G", r.graph, "base", rest, Relation::at_most, base_value(pair) + 2 * (t - 1)));
    r.chain.add(sign_change_step("G", r.graph, "G'", {pair.marked}, Relation::at_least, k - 2));
    return r;
}

auto gen_remove_edge_lower(int k) -> FamilyInstance
{
    check(k >= 5, "edge removal lower family needs k >= 5");
    int p = k / 2;
    Builder b;
    FamilyInstance r;
    if (k % 2 == 0) {
        std::vector<int> u(p + 1), v(p + 1);
        for (int i = 1 ; i <= p ; ++i)
            u[i] = b.add(numbered("u", i));
        for (int i = 1 ; i <= p ; ++i)
            v[i] = b.add(numbered("v", i));
        for (int i = 1 ; i <= p ; ++i)
            for (int j = i + 1 ; j <= p ; ++j) {
                b.edge(u[i], u[j], neg);
                b.edge(v[i], v[j], pos);
            }
        for (int i = 1 ; i <= p ; ++i)
            b.edge(u[i], v[i], neg);

        r = make_instance("remove-edge-lower", {k}, b);
        std::vector<SignedColour> colours(b.order());
        for (int i = 1 ; i <= p ; ++i)
            colours[u[i]] = colours[v[i]] = plus(i);
        r.witness = InferredColouring{k, colours};
        r.marked = marked_edge(v[1], v[p]);
        r.after = r.graph.without_edge(v[1], v[p]);
        r.chain.add(witness_step("G", r.graph, *r.witness));
        r.chain.add(order_step("G", r.graph));
        r.chain.add(edge_removal_step("G'", *r.after, "G", {v[1], v[p]}, Relation::at_least, k - 2));
        r.chain.add(size_step("G'", *r.after));
        r.chain.add(exhaustive_step("G'", *r.after, k - 2));
    }
    else {
        std::vector<int> x(p + 2), y(p + 2);
        for (int i = 1 ; i <= p + 1 ; ++i)
            x[i] = b.add(numbered("x", i));
        for (int i = 1 ; i <= p + 1 ; ++i)
            y[i] = b.add(numbered("y", i));
        // Negative K_{2p+2} minus x_{p+1}y_{p+1}, with x_{p+1} switched and
        // x_iy_i positive for 2 <= i <= p.
        std::vector<Edge> base, base_after;
        std::vector<std::pair<int, int>> positive, positive_after;
        for (int a = 0 ; a < b.order() ; ++a)
            for (int c = a + 1 ; c < b.order() ; ++c) {
                if (a == x[p + 1] && c == y[p + 1])
                    continue;
                bool matched = false;
                for (int i = 2 ; i <= p ; ++i)
                    matched = matched || (a == x[i] && c == y[i]);
                Sign s = matched ? pos : neg;
                if ((a == x[p + 1]) != (c == x[p + 1]))
                    s = flip(s);
                b.edge(a, c, s);
                base.push_back(Edge{a, c, neg});
                if (! (a == x[p] && c == y[p]))
                    base_after.push_back(Edge{a, c, neg});
            }
        for (int i = 2 ; i <= p ; ++i) {
            positive.emplace_back(x[i], y[i]);
            if (i < p)
                positive_after.emplace_back(x[i], y[i]);
        }

        r = make_instance("remove-edge-lower", {k}, b);
        std::vector<SignedColour> colours(b.order());
        colours[x[p + 1]] = plus(0);
        colours[y[p + 1]] = plus(0);
        for (int i = 2 ; i <= p ; ++i) {
            colours[x[i]] = plus(i - 1);
            colours[y[i]] = minus(i - 1);
        }
        colours[x[1]] = colours[y[1]] = plus(p);
        r.witness = InferredColouring{k, colours};
        r.marked = marked_edge(x[p], y[p]);
        r.after = r.graph.without_edge(x[p], y[p]);

        SignedGraph base_graph{b.order(), base}, base_after_graph{b.order(), base_after};
        r.chain.add(negative_clique_minus_matching_step("base", base_graph));
        r.chain.add(negative_clique_minus_matching_step("base'", base_after_graph));
        r.chain.add(witness_step("G", r.graph, *r.witness));
        r.chain.add(sign_change_step("G", r.graph, "base", positive, Relation::at_most, 3 + 2 * (p - 1)));
        r.chain.add(edge_removal_step("G'", *r.after, "G", {x[p], y[p]}, Relation::at_least, k - 2));
        r.chain.add(sign_change_step("G'", *r.after, "base'", positive_after, Relation::at_most, 3 + 2 * (p - 2)));
    }
    r.claimed_psi = k;
    r.claimed_after = k - 2;
    r.claims = {{"G", Relation::equals, k}, {"G'", Relation::equals, k - 2}};
    return r;
}

auto gen_remove_edge_upper(int k) -> FamilyInstance
{
    check(k >= 6, "edge removal upper family needs k >= 6");
    int p = k / 2;
    Builder b;
    FamilyInstance r;
    std::vector<SignedColour> colours;
    std::pair<int, int> marked;
    if (k % 2 == 0) {
        // G_3, then three vertices per step up to G_p.
        std::vector<int> kv{-1};
        for (int i = 1 ; i <= 3 ; ++i)
            kv.push_back(b.add(numbered("k", i)));
        std::vector<int> v{-1};
        for (int i = 1 ; i <= 4 ; ++i)
            v.push_back(b.add(numbered("v", i)));
        int w3 = b.add("w3");
        b.edge(kv[1], kv[2], neg);
        b.edge(kv[1], kv[3], neg);
        b.edge(kv[2], kv[3], neg);
        for (int i = 1 ; i <= 4 ; ++i) {
            b.edge(kv[1], v[i], neg);
            b.edge(kv[2], v[i], neg);
        }
        for (int i = 1 ; i <= 3 ; ++i)
            b.edge(w3, kv[i], neg);

        colours.assign(b.order(), plus(0));
        colours[v[1]] = minus(2);
        colours[v[4]] = minus(3);
        colours[v[3]] = plus(1);
        colours[kv[2]] = plus(1);
        colours[v[2]] = plus(2);
        colours[kv[1]] = plus(2);
        colours[kv[3]] = plus(3);
        colours[w3] = plus(3);

        for (int q = 3 ; q < p ; ++q) {
            int wq = b.add("w'" + std::to_string(q));
            int kn = b.add(numbered("k", q + 1));
            int wn = b.add(numbered("w", q + 1));
            for (int i = 1 ; i <= q ; ++i)
                for (int x : {wq, kn, wn})
                    b.edge(x, kv[i], neg);
            b.edge(wn, kn, neg);
            kv.push_back(kn);
            colours.push_back(minus(q + 1));
            colours.push_back(plus(q + 1));
            colours.push_back(plus(q + 1));
        }
        marked = {kv[1], v[1]};
    }
    else {
        std::vector<int> u(p + 1), v(2 * p + 2);
        for (int i = 1 ; i <= p ; ++i)
            u[i] = b.add(numbered("u", i));
        for (int i = 1 ; i <= 2 * p + 1 ; ++i)
            v[i] = b.add(numbered("v", i));
        for (int i = 1 ; i <= p ; ++i)
            for (int j = 1 ; j <= 2 * p + 1 ; ++j)
                if (! (i == j && i >= 2 && i <= p - 1))
                    b.edge(u[i], v[j], neg);

        colours.assign(b.order(), plus(0));
        for (int i = 1 ; i <= p ; ++i)
            colours[u[i]] = plus(i);
        colours[v[1]] = plus(1);
        for (int i = 2 ; i <= p ; ++i) {
            colours[v[i]] = minus(i);
            colours[v[p + i - 1]] = plus(i);
        }
        colours[v[2 * p]] = plus(0);
        colours[v[2 * p + 1]] = minus(0);
        marked = {u[p], v[p]};
    }

    r = make_instance("remove-edge-upper", {k}, b);
    r.marked = marked_edge(marked.first, marked.second);
    r.after = r.graph.without_edge(marked.first, marked.second);
    r.witness_after = InferredColouring{k, colours};
    r.claimed_psi = k - 2;
    r.claimed_after = k;
    r.claims = {{"G", Relation::equals, k - 2}, {"G'", Relation::equals, k}};
    r.chain.add(witness_step("G'", *r.after, *r.witness_after));
    r.chain.add(edge_removal_step("G", r.graph, "G'", marked, Relation::at_least, k - 2));
    r.chain.add(exhaustive_step("G", r.graph, k - 2));
    r.chain.add(edge_removal_step("G'", *r.after, "G", marked, Relation::at_most, k));
    return r;
}

auto gen_elementary_drop(int k) -> FamilyInstance
{
    check(k >= 8, "elementary image family needs k >= 8");
    // The construction is indexed by the size p of the matching; its image
    // is bounded by k - 4 where k - 4 is 2p (even) or 2p + 1 (odd).
    int p = (k - 4) / 2;
    Builder b;
    std::vector<int> x(p + 2), y(p + 2);
    for (int i = 1 ; i <= p + 1 ; ++i)
        x[i] = b.add(numbered("x", i));
    for (int i = 1 ; i <= p + 1 ; ++i)
        y[i] = b.add(numbered("y", i));
    int v = b.add("v");
    int w = b.add("w");
    std::vector<int> dominating;
    if (k % 2 == 1) {
        dominating.push_back(b.add("d1"));
        dominating.push_back(b.add("d2"));
    }
    int clique = 2 * p + 2;
    for (int a = 0 ; a < clique ; ++a)
        for (int c = a + 1 ; c < clique ; ++c) {
            bool positive = false;
            for (int i = 1 ; i <= p - 1 ; ++i)
                positive = positive || (a == x[i] && c == y[i]);
            b.edge(a, c, positive ? pos : neg);
        }
    for (int i = 1 ; i <= p + 1 ; ++i) {
        b.edge(v, x[i], neg);
        b.edge(w, y[i], neg);
    }
    for (int d : dominating)
        for (int a = 0 ; a < b.order() ; ++a)
            if (std::find(dominating.begin(), dominating.end(), a) == dominating.end())
                b.edge(d, a, neg);

    auto r = make_instance("elementary-drop", {k}, b);
    int colours_used = 2 * p + 2 + (k % 2);
    std::vector<SignedColour> colours(b.order(), plus(0));
    for (int i = 1 ; i <= p - 1 ; ++i) {
        colours[x[i]] = plus(i);
        colours[y[i]] = minus(i);
    }
    colours[x[p]] = colours[x[p + 1]] = plus(p);
    colours[y[p]] = colours[y[p + 1]] = plus(p + 1);
    colours[v] = minus(p + 1);
    colours[w] = minus(p);
    r.witness = InferredColouring{colours_used, colours};
    r.marked = Marked{Marked::Kind::pair, v, w};
    r.after = identify(r.graph, v, w);
    r.claimed_psi = k;
    r.claimed_after = k - 4;
    r.claims = {{"G", Relation::at_least, k}, {"G'", Relation::at_most, k - 4}};

    auto base = r.after->with_all_signs(neg);
    std::vector<std::pair<int, int>> positive;
    for (int i = 1 ; i <= p - 1 ; ++i)
        positive.emplace_back(x[i], y[i]);
    r.chain.add(witness_step("G", r.graph, *r.witness));
    if (k % 2 == 0) {
        r.chain.add(negative_clique_step("base", base));
        r.chain.add(sign_change_step("G'", *r.after, "base", positive, Relation::at_most, 2 + 2 * (p - 1)));
    }
    else {
        r.chain.add(negative_clique_minus_matching_step("base", base));
        r.chain.add(sign_change_step("G'", *r.after, "base", positive, Relation::at_most, 3 + 2 * (p - 1)));
    }
    return r;
}

auto gen_interpolation(int k) -> FamilyInstance
{
    check(k >= 3 && k % 2 == 1, "interpolation family needs odd k >= 3");
    Builder b;
    std::vector<int> v(k + 1), w(k + 1);
    for (int i = 1 ; i <= k ; ++i) {
        v[i] = b.add(numbered("v", i));
        w[i] = b.add(numbered("w", i));
    }
    for (int a = 0 ; a < b.order() ; ++a)
        for (int c = a + 1 ; c < b.order() ; ++c)
            b.edge(a, c, c == a + 1 && a % 2 == 0 ? neg : pos);

    auto r = make_instance("interpolation", {k}, b);
    std::vector<int> complete(b.order()), proper(b.order());
    for (int i = 1 ; i < k ; ++i) {
        complete[v[i]] = i;
        complete[w[i]] = -(i + 1);
    }
    complete[v[k]] = k;
    complete[w[k]] = -1;
    for (int i = 1 ; i <= k ; ++i) {
        int c = i % 2 == 0 ? i / 2 : -(i + 1) / 2;
        proper[v[i]] = proper[w[i]] = c;
    }
    r.witness = infer(Colouring{2 * k, complete});
    r.proper_witness = Colouring{2 * ((k + 1) / 2), proper};
    r.claimed_psi = 2 * k;
    r.claims = {{"G", Relation::equals, 2 * k}};
    r.chain.add(witness_step("G", r.graph, *r.witness));
    r.chain.add(order_step("G", r.graph));
    return r;
}

auto gen_perfect_counterexample() -> FamilyInstance
{
    Builder b;
    int u1 = b.add("u1"), u2 = b.add("u2"), v1 = b.add("v1"), v2 = b.add("v2"), w2 = b.add("w2"), w3 = b.add("w3");
    for (auto [a, c] : {std::pair{u1, v1}, {u1, v2}, {u2, v1}, {u2, v2}, {v2, w2}, {v2, w3}})
        b.edge(a, c, neg);
    for (auto [a, c] : {std::pair{u1, u2}, {v1, w2}, {v1, w3}, {w2, w3}})
        b.edge(a, c, pos);

    auto r = make_instance("perfect", {}, b);
    r.proper_witness = Colouring{3, std::vector<int>{1, -1, 0, 0, -1, 1}};
    r.witness = infer(Colouring{4, std::vector<int>{1, -1, -2, 2, 2, 1}});
    r.claimed_psi = 4;
    r.claims = {{"G", Relation::at_least, 4}};
    r.chain.add(witness_step("G", r.graph, *r.witness));
    return r;
}

auto gen_irreducible_large(int p, int m) -> FamilyInstance
{
    check(p >= 1 && m >= 2 * p, "irreducible family needs p >= 1 and m >= 2p");
    Builder b;
    for (int i = 0 ; i < m ; ++i)
        b.add(numbered("x", i + 1));
    for (int a = 0 ; a < m ; ++a)
        for (int c = a + 1 ; c < m ; ++c)
            b.edge(a, c, (a % 2 == 0 && c == a + 1 && a < 2 * p) ? pos : neg);

    auto r = make_instance("irreducible", {p, m}, b);
    // Only orders with two spare vertices carry the colouring with 2p + 2
    // colours; below that the order bound already rules it out.
    if (m >= 2 * p + 2) {
        std::vector<SignedColour> colours(m, plus(p + 1));
        for (int i = 0 ; i < p ; ++i) {
            colours[2 * i] = plus(i + 1);
            colours[2 * i + 1] = minus(i + 1);
        }
        r.witness = InferredColouring{2 * p + 2, colours};
        r.claimed_psi = 2 * p + 2;
        r.claims = {{"G", Relation::equals, 2 * p + 2}};

        auto base = r.graph.with_all_signs(neg);
        std::vector<std::pair<int, int>> positive;
        for (int i = 0 ; i < p ; ++i)
            positive.emplace_back(2 * i, 2 * i + 1);
        r.chain.add(witness_step("G", r.graph, *r.witness));
        if (m >= 5)
            r.chain.add(negative_clique_step("base", base));
        else
            r.chain.add(exhaustive_step("base", base, 2));
        r.chain.add(sign_change_step("G", r.graph, "base", positive, Relation::at_most, 2 + 2 * p));
    }
    return r;
}

namespace {
    struct NpLayout {
        int n, k, big;
        auto g(int i) const -> int { return i; }
        auto c(int i) const -> int { return n + i - 1; }
        auto minus(int i) const -> int { return n + k + i - 1; }
        auto plus(int i) const -> int { return n + k + big + i - 1; }
        auto order() const -> int { return n + k + 2 * big; }
    };

    auto np_layout(const UnsignedGraph & g, int k) -> NpLayout
    {
        check(k >= 1, "reduction needs k >= 1");
        int n = g.order();
        return NpLayout{n, k, (n + k) * (n + k)};
    }
}

auto gen_np_reduction(const UnsignedGraph & g, int k) -> SignedGraph
{
    auto l = np_layout(g, k);
    std::vector<Edge> edges;
    for (auto & [a, c] : g.edges())
        edges.push_back(Edge{l.g(a), l.g(c), pos});
    for (int i = 1 ; i <= k ; ++i) {
        for (int j = i + 1 ; j <= k ; ++j)
            edges.push_back(Edge{l.c(i), l.c(j), neg});
        for (int a = 0 ; a < l.n ; ++a)
            edges.push_back(Edge{l.g(a), l.c(i), neg});
        for (int j = 1 ; j <= l.big ; ++j) {
            edges.push_back(Edge{l.minus(j), l.c(i), neg});
            edges.push_back(Edge{l.plus(j), l.c(i), pos});
        }
    }
    for (int i = 1 ; i <= l.big ; ++i) {
        for (int j = i + 1 ; j <= l.big ; ++j) {
            edges.push_back(Edge{l.minus(i), l.minus(j), neg});
            edges.push_back(Edge{l.plus(i), l.plus(j), pos});
        }
        edges.push_back(Edge{l.minus(i), l.plus(i), neg});
    }
    return SignedGraph{l.order(), std::move(edges)};
}

auto np_forward_colouring(const UnsignedGraph & g, int k, const std::vector<int> & colours) -> Colouring
{
    auto l = np_layout(g, k);
    int used = colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end());
    if (used < k || used > k + l.big || ! is_complete_unsigned(g, colours, used))
        throw InvalidParameter("forward colouring needs a complete k'-colouring of the graph with k <= k' <= k + N");

    std::vector<int> result(l.order());
    for (int a = 0 ; a < l.n ; ++a)
        result[l.g(a)] = colours[a];
    for (int i = 1 ; i <= k ; ++i)
        result[l.c(i)] = i;
    for (int i = 1 ; i <= l.big ; ++i)
        result[l.minus(i)] = result[l.plus(i)] = k + i;
    return Colouring{2 * l.big + 2 * k, result};
}

}
