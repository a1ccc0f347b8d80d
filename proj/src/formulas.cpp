#include <sgc/formulas.hpp>

#include <algorithm>

namespace sgc {

auto psi_path(int n) -> int
{
    if (n < 1)
        throw InvalidParameter("a path needs at least one vertex");
    return largest_k_within(n - 1);
}

auto psi_cycle(int n, Parity balance) -> int
{
    if (n < 3)
        throw InvalidParameter("a cycle needs at least three vertices");
    int k0 = largest_k_within(n);
    int m = kstar_size(k0);
    bool same = kstar_balance(k0) == balance;
    if (n >= m + 2 || (n == m + 1 && ! same) || (n == m && same))
        return k0;
    if ((n == m + 1 && same) || (n == m && k0 % 2 == 1))
        return k0 - 1;
    return k0 - 2;
}

auto psi_complete(int n, CompleteVariant variant) -> int
{
    if (n < 1)
        throw InvalidParameter("a complete graph needs at least one vertex");
    switch (variant.kind) {
        case CompleteVariant::Kind::all_positive:
            return n;
        case CompleteVariant::Kind::all_negative:
            if (n < 5)
                throw UnsupportedParameter("negative complete graphs are covered for n >= 5 only");
            return 2;
        case CompleteVariant::Kind::negative_minus_matching:
            if (variant.matching <= 0 || variant.matching > n / 2)
                throw InvalidParameter("matching size out of range");
            if (n < 5)
                throw UnsupportedParameter("negative complete graphs are covered for n >= 5 only");
            return 3;
    }
    throw InvalidParameter("unknown variant");
}

auto euler_trail_kstar(int k) -> std::vector<TrailStep>
{
    if (k < 2)
        throw InvalidParameter("K*_k has edges only for k >= 2");
    auto kstar = build_kstar(k);
    auto & labels = kstar.labels();
    auto & edges = kstar.edges();

    std::vector<std::vector<int>> incident(kstar.order());
    for (int i = 0 ; i < kstar.size() ; ++i) {
        incident[edges[i].u].push_back(i);
        if (edges[i].v != edges[i].u)
            incident[edges[i].v].push_back(i);
    }

    // Iterative Hierholzer: edges are taken in index order at each vertex.
    std::vector<char> used(edges.size(), 0);
    std::vector<std::size_t> next(kstar.order(), 0);
    std::vector<std::pair<int, int>> stack{{0, -1}};
    std::vector<std::pair<int, int>> circuit;
    while (! stack.empty()) {
        int v = stack.back().first;
        auto & pos = next[v];
        while (pos < incident[v].size() && used[incident[v][pos]])
            ++pos;
        if (pos == incident[v].size()) {
            circuit.push_back(stack.back());
            stack.pop_back();
            continue;
        }
        int e = incident[v][pos];
        used[e] = 1;
        int w = edges[e].u == v ? edges[e].v : edges[e].u;
        stack.emplace_back(w, e);
    }
    std::reverse(circuit.begin(), circuit.end());

    std::vector<TrailStep> trail;
    for (std::size_t i = 1 ; i < circuit.size() ; ++i) {
        int e = circuit[i].second;
        trail.push_back(TrailStep{labels[circuit[i - 1].first], labels[circuit[i].first], edges[e].sign, e});
    }
    return trail;
}

auto signature_balance(std::span<const Sign> signs) -> Parity
{
    auto negatives = std::count(signs.begin(), signs.end(), Sign::negative);
    return negatives % 2 == 0 ? Parity::even : Parity::odd;
}

namespace {
    // Flags making the effective sign of each edge (i, i+1) equal to the
    // sign of the corresponding walk step.
    auto colour_along(int k, const std::vector<int> & magnitudes, std::span<const Sign> signs,
            const std::vector<Sign> & step_signs) -> InferredColouring
    {
        std::vector<SignedColour> colours;
        Sign flag = Sign::positive;
        for (std::size_t i = 0 ; i < magnitudes.size() ; ++i) {
            if (i > 0)
                flag = flag * signs[i - 1] * step_signs[i - 1];
            colours.push_back(SignedColour{magnitudes[i], flag == Sign::positive ? Flag::plus : Flag::minus});
        }
        return InferredColouring{k, std::move(colours)};
    }

    // A closed walk in K*_k of the given length from start back to start
    // whose number of negative steps has the given parity.  Edges are tried
    // in index order.
    auto closing_walk(int k, int start, int length, Parity parity) -> std::optional<std::vector<TrailStep>>
    {
        auto kstar = build_kstar(k);
        auto & labels = kstar.labels();
        int n = kstar.order();
        auto index_of = [&] (int m) {
            return static_cast<int>(std::find(labels.begin(), labels.end(), m) - labels.begin());
        };
        // reach[l][v][p]: from v, a walk of l steps with parity p ends at start.
        std::vector<std::vector<std::array<char, 2>>> reach(length + 1, std::vector<std::array<char, 2>>(n, {0, 0}));
        int target = index_of(start);
        reach[0][target][0] = 1;
        for (int l = 1 ; l <= length ; ++l)
            for (auto & e : kstar.edges())
                for (int p = 0 ; p < 2 ; ++p) {
                    int q = p ^ (e.sign == Sign::negative ? 1 : 0);
                    if (reach[l - 1][e.v][q])
                        reach[l][e.u][p] = 1;
                    if (reach[l - 1][e.u][q])
                        reach[l][e.v][p] = 1;
                }

        int p = parity == Parity::odd ? 1 : 0;
        if (! reach[length][target][p])
            return std::nullopt;

        std::vector<TrailStep> walk;
        int v = target;
        for (int l = length ; l >= 1 ; --l) {
            for (int i = 0 ; i < kstar.size() ; ++i) {
                auto & e = kstar.edges()[i];
                if (e.u != v && e.v != v)
                    continue;
                int w = e.u == v ? e.v : e.u;
                int q = p ^ (e.sign == Sign::negative ? 1 : 0);
                if (reach[l - 1][w][q]) {
                    walk.push_back(TrailStep{labels[v], labels[w], e.sign, i});
                    v = w;
                    p = q;
                    break;
                }
            }
        }
        return walk;
    }
}

auto construct_path_colouring(int n, std::span<const Sign> signs) -> InferredColouring
{
    if (n < 1 || static_cast<int>(signs.size()) != n - 1)
        throw InvalidParameter("a path on n vertices needs n-1 signs");
    int k = psi_path(n);
    if (k == 1)
        return InferredColouring{1, {SignedColour{0, Flag::plus}}};

    auto trail = euler_trail_kstar(k);
    std::vector<int> magnitudes{trail.front().from};
    std::vector<Sign> step_signs;
    for (int i = 0 ; i < n - 1 ; ++i) {
        auto & step = trail[i % trail.size()];
        magnitudes.push_back(step.to);
        step_signs.push_back(step.sign);
    }
    auto result = colour_along(k, magnitudes, signs, step_signs);
    if (! is_inferred_complete(path_graph(signs), result))
        throw std::logic_error("path construction produced an incomplete colouring");
    return result;
}

auto construct_cycle_colouring(int n, std::span<const Sign> signs) -> CycleConstruction
{
    if (n < 3 || static_cast<int>(signs.size()) != n)
        throw InvalidParameter("a cycle on n >= 3 vertices needs n signs");
    auto balance = signature_balance(signs);
    int k = psi_cycle(n, balance);
    auto trail = euler_trail_kstar(k);
    int m = static_cast<int>(trail.size());
    int surplus = n - m;

    // Effective signs around the cycle multiply to the cycle's balance, and
    // the trail contributes the balance of K*_k, so the closing part must
    // make up the difference.
    auto needed = balance == kstar_balance(k) ? Parity::even : Parity::odd;

    CycleCase used;
    if (surplus == 0)
        used = CycleCase::closed_tour;
    else if (surplus == 1) {
        // The last cycle edge must be a negative loop, so the tour has to
        // start and end at a nonzero magnitude.
        used = CycleCase::closing_loop;
        auto start = std::find_if(trail.begin(), trail.end(), [] (const TrailStep & s) { return s.from != 0; });
        std::rotate(trail.begin(), start, trail.end());
    }
    else
        used = CycleCase::extended_walk;

    std::vector<TrailStep> walk = trail;
    if (surplus > 0) {
        auto tail = closing_walk(k, trail.front().from, surplus, needed);
        if (! tail)
            throw std::logic_error("no closing walk for the cycle construction");
        walk.insert(walk.end(), tail->begin(), tail->end());
    }
    else if (needed != Parity::even)
        throw std::logic_error("tour balance does not match the cycle");

    std::vector<int> magnitudes;
    std::vector<Sign> step_signs;
    for (auto & step : walk) {
        magnitudes.push_back(step.from);
        step_signs.push_back(step.sign);
    }
    auto result = colour_along(k, magnitudes, signs, step_signs);
    if (! is_inferred_complete(cycle_graph(signs), result))
        throw std::logic_error("cycle construction produced an incomplete colouring");
    return CycleConstruction{result, used};
}

auto construct_positive_clique_colouring(int n) -> Colouring
{
    if (n < 1)
        throw InvalidParameter("a complete graph needs at least one vertex");
    return Colouring{n, colour_set(n)};
}

}
