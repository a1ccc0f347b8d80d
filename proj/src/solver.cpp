#include <sgc/solver.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace sgc {

namespace {
    // Shared node accounting for one top-level call.
    class Budget {
    public:
        explicit Budget(std::optional<std::uint64_t> limit) : limit_(limit) {}

        auto tick() -> void
        {
            auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
            if (limit_ && n > *limit_)
                throw ResourceExhausted("node budget of " + std::to_string(*limit_) + " exhausted", n);
        }

        auto nodes() const -> std::uint64_t { return nodes_.load(); }

    private:
        std::optional<std::uint64_t> limit_;
        std::atomic<std::uint64_t> nodes_{0};
    };

    // Vertices by descending degree, ties broken by index.
    auto search_order(const SignedGraph & g) -> std::vector<int>
    {
        std::vector<int> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });
        return order;
    }

    struct Choice {
        int magnitude;
        int flag;
    };

    // Backtracking search for a complete k-colouring in inferred form.
    // Positions follow search_order; each position gets a magnitude and a
    // flag, and an edge's effective sign is its sign times both flags.
    class CompleteSearch {
    public:
        CompleteSearch(const SignedGraph & g, int k, bool symmetry) :
            n_(g.order()), k_(k), h_(max_magnitude(k)), zero_(has_zero_colour(k)), symmetry_(symmetry),
            order_(search_order(g))
        {
            std::vector<int> position(n_);
            for (int p = 0 ; p < n_ ; ++p)
                position[order_[p]] = p;
            earlier_.resize(n_);
            later_degree_.assign(n_, 0);
            for (auto & e : g.edges()) {
                int a = position[e.u], b = position[e.v];
                if (a > b)
                    std::swap(a, b);
                earlier_[b].emplace_back(a, static_cast<int>(e.sign));
                ++later_degree_[a];
            }
            mag_.assign(n_, -1);
            flag_.assign(n_, 0);
            cover_.assign((h_ + 1) * (h_ + 1) * 2, 0);
            missing_ = kstar_size(k);
            allowed_ = magnitude_set(k);
            missing_at_.assign(h_ + 1, 0);
            for (int a : allowed_)
                missing_at_[a] = 2 * (static_cast<int>(allowed_.size()) - 1) + (a != 0 ? 1 : 0);
            class_size_.assign(h_ + 1, 0);
            e1_.assign(h_ + 1, 0);
            e2_ = g.size();
        }

        auto order() const -> int { return n_; }

        auto candidates(int p) const -> std::vector<Choice>
        {
            std::vector<Choice> result;
            if (! symmetry_) {
                for (int a : allowed_) {
                    result.push_back(Choice{a, 1});
                    result.push_back(Choice{a, -1});
                }
                return result;
            }
            (void) p;
            if (highest_used_ < h_)
                result.push_back(Choice{highest_used_ + 1, 1});
            if (zero_ && class_size_[0] == 0)
                result.push_back(Choice{0, 1});
            for (int a = 1 ; a <= highest_used_ ; ++a) {
                result.push_back(Choice{a, 1});
                result.push_back(Choice{a, -1});
            }
            if (zero_ && class_size_[0] > 0) {
                result.push_back(Choice{0, 1});
                result.push_back(Choice{0, -1});
            }
            return result;
        }

        auto assign(int p, Choice c) -> bool
        {
            int a = c.magnitude, f = c.flag;
            for (auto [q, s] : earlier_[p])
                if (mag_[q] == a && (a == 0 || s * f * flag_[q] > 0))
                    return false;

            mag_[p] = a;
            flag_[p] = f;
            for (auto [q, s] : earlier_[p]) {
                int b = mag_[q];
                if (cover_[type_index(a, b, s * f * flag_[q])]++ == 0) {
                    --missing_;
                    --missing_at_[a];
                    if (a != b)
                        --missing_at_[b];
                }
                --e1_[b];
            }
            e2_ -= later_degree_[p];
            e1_[a] += later_degree_[p];
            if (class_size_[a]++ == 0 && a > highest_used_)
                highest_used_ = a;
            return true;
        }

        auto unassign(int p) -> void
        {
            int a = mag_[p], f = flag_[p];
            if (--class_size_[a] == 0 && a == highest_used_ && a != 0)
                highest_used_ = a - 1;
            e1_[a] -= later_degree_[p];
            e2_ += later_degree_[p];
            for (auto [q, s] : earlier_[p]) {
                int b = mag_[q];
                ++e1_[b];
                if (--cover_[type_index(a, b, s * f * flag_[q])] == 0) {
                    ++missing_;
                    ++missing_at_[a];
                    if (a != b)
                        ++missing_at_[b];
                }
            }
            mag_[p] = -1;
            flag_[p] = 0;
        }

        // Admissible tests: every missing edge type needs a distinct edge
        // that is not yet fully coloured, and every colour class still
        // lacking its negative loop needs more vertices.
        auto feasible(int p) const -> bool
        {
            int remaining_vertices = n_ - p - 1;
            int need = 0;
            for (int a : allowed_) {
                if (a == 0) {
                    if (class_size_[0] == 0)
                        ++need;
                }
                else if (cover_[type_index(a, a, -1)] == 0)
                    need += class_size_[a] == 0 ? 2 : 1;
            }
            if (need > remaining_vertices)
                return false;

            int supply = e2_;
            for (int a : allowed_)
                supply += std::min(e1_[a], missing_at_[a]);
            return missing_ <= supply;
        }

        auto complete() const -> bool
        {
            if (missing_ != 0)
                return false;
            return std::all_of(allowed_.begin(), allowed_.end(), [&] (int a) { return class_size_[a] > 0; });
        }

        auto dfs(int p, Budget & budget, const std::function<bool ()> & abort) -> bool
        {
            budget.tick();
            if (p == n_)
                return complete();
            if (abort && abort())
                return false;
            for (auto c : candidates(p)) {
                if (! assign(p, c))
                    continue;
                if (feasible(p) && dfs(p + 1, budget, abort))
                    return true;
                unassign(p);
            }
            return false;
        }

        // Enumerates assignments of the first depth positions, in search
        // order, that survive the tests.
        auto prefixes(int p, int depth, std::vector<Choice> & current, std::vector<std::vector<Choice>> & out,
                Budget & budget) -> void
        {
            budget.tick();
            if (p == depth) {
                out.push_back(current);
                return;
            }
            for (auto c : candidates(p)) {
                if (! assign(p, c))
                    continue;
                if (feasible(p)) {
                    current.push_back(c);
                    prefixes(p + 1, depth, current, out, budget);
                    current.pop_back();
                }
                unassign(p);
            }
        }

        auto result() const -> InferredColouring
        {
            std::vector<SignedColour> colours(n_);
            for (int p = 0 ; p < n_ ; ++p)
                colours[order_[p]] = SignedColour{mag_[p], flag_[p] > 0 ? Flag::plus : Flag::minus};
            return InferredColouring{k_, std::move(colours)};
        }

    private:
        auto type_index(int a, int b, int s) const -> int
        {
            if (a > b)
                std::swap(a, b);
            return (a * (h_ + 1) + b) * 2 + (s < 0 ? 1 : 0);
        }

        int n_, k_, h_;
        bool zero_, symmetry_;
        std::vector<int> order_;
        std::vector<std::vector<std::pair<int, int>>> earlier_;
        std::vector<int> later_degree_;
        std::vector<int> mag_, flag_;
        std::vector<int> cover_;
        int missing_;
        std::vector<int> allowed_;
        std::vector<int> missing_at_;
        std::vector<int> class_size_;
        std::vector<int> e1_;
        int e2_;
        int highest_used_ = 0;
    };

    auto run_parallel(CompleteSearch & root, unsigned workers, Budget & budget) -> std::optional<InferredColouring>
    {
        // Split at the shallowest depth giving enough branches to share.
        std::vector<std::vector<Choice>> tasks;
        int depth = 0;
        for (depth = 1 ; depth <= root.order() ; ++depth) {
            tasks.clear();
            std::vector<Choice> current;
            root.prefixes(0, depth, current, tasks, budget);
            if (tasks.size() >= 8 * workers || tasks.empty())
                break;
        }
        if (depth > root.order())
            depth = root.order();

        const std::size_t none = tasks.size();
        std::atomic<std::size_t> next{0}, best{none};
        std::vector<std::optional<InferredColouring>> found(tasks.size());
        std::mutex error_mutex;
        std::optional<ResourceExhausted> error;

        auto worker = [&] {
            CompleteSearch search = root;
            while (true) {
                auto i = next.fetch_add(1);
                if (i >= tasks.size() || best.load() < i)
                    return;
                for (int p = 0 ; p < depth ; ++p)
                    search.assign(p, tasks[i][p]);
                try {
                    auto abort = std::function<bool ()>{[&] { return best.load() < i; }};
                    if (search.dfs(depth, budget, abort)) {
                        found[i] = search.result();
                        auto current = best.load();
                        while (i < current && ! best.compare_exchange_weak(current, i))
                            ;
                        search = root;
                        continue;
                    }
                }
                catch (const ResourceExhausted & e) {
                    std::lock_guard lock(error_mutex);
                    if (! error)
                        error = e;
                    best.store(0);
                    return;
                }
                for (int p = depth - 1 ; p >= 0 ; --p)
                    search.unassign(p);
            }
        };

        std::vector<std::thread> threads;
        for (unsigned w = 0 ; w < workers ; ++w)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();

        if (error)
            throw *error;
        if (best.load() < none)
            return found[best.load()];
        return std::nullopt;
    }
}

auto psi_upper_bound(const SignedGraph & g) -> UpperBound
{
    UpperBound b;
    b.order_bound = g.order();
    b.matching_bound = 2 * maximum_matching_size(g) + 1;
    b.size_bound = largest_k_within(g.size());
    b.value = std::max(1, std::min({b.order_bound, b.matching_bound, b.size_bound}));
    return b;
}

auto exists_complete_k(const SignedGraph & g, int k, const SearchOptions & options, SearchStats * stats)
    -> std::optional<InferredColouring>
{
    if (k < 1)
        throw InvalidParameter("k must be at least 1");
    Budget budget{options.node_budget};
    std::optional<InferredColouring> result;
    try {
        if (g.order() > 0) {
            CompleteSearch search{g, k, options.symmetry_breaking};
            if (options.workers > 1 && g.order() > 1)
                result = run_parallel(search, options.workers, budget);
            else if (search.dfs(0, budget, {}))
                result = search.result();
        }
    }
    catch (...) {
        if (stats)
            stats->nodes += budget.nodes();
        throw;
    }
    if (stats)
        stats->nodes += budget.nodes();
    return result;
}

auto psi(const SignedGraph & g, const SearchOptions & options) -> PsiResult
{
    if (g.order() == 0)
        throw InvalidParameter("the empty graph has no complete colouring");

    PsiResult result;
    result.upper_bound = psi_upper_bound(g);
    SearchStats stats;
    auto remaining = options;
    for (int k = result.upper_bound.value ; k >= 1 ; --k) {
        if (options.node_budget)
            remaining.node_budget = *options.node_budget - std::min(*options.node_budget, stats.nodes);
        auto found = exists_complete_k(g, k, remaining, &stats);
        if (found) {
            result.value = k;
            result.witness = *found;
            result.nodes = stats.nodes;
            return result;
        }
        result.refuted.push_back(k);
    }
    throw std::logic_error("no complete colouring found for a non-empty graph");
}

namespace {
    // Proper colouring search over M_k.  The first vertex of each magnitude
    // takes the positive colour, and magnitudes are introduced in order.
    class ProperSearch {
    public:
        ProperSearch(const SignedGraph & g, int k, bool symmetry) :
            n_(g.order()), k_(k), h_(max_magnitude(k)), zero_(has_zero_colour(k)), symmetry_(symmetry),
            order_(search_order(g))
        {
            std::vector<int> position(n_);
            for (int p = 0 ; p < n_ ; ++p)
                position[order_[p]] = p;
            earlier_.resize(n_);
            for (auto & e : g.edges()) {
                int a = position[e.u], b = position[e.v];
                if (a > b)
                    std::swap(a, b);
                earlier_[b].emplace_back(a, static_cast<int>(e.sign));
            }
            colour_.assign(n_, 0);
            class_size_.assign(h_ + 1, 0);
        }

        auto dfs(int p, Budget & budget) -> bool
        {
            budget.tick();
            if (p == n_)
                return true;
            std::vector<int> options;
            if (zero_)
                options.push_back(0);
            for (int a = 1 ; a <= h_ ; ++a) {
                if (symmetry_ && class_size_[a] == 0) {
                    if (a == highest_used_ + 1)
                        options.push_back(a);
                    continue;
                }
                options.push_back(a);
                options.push_back(-a);
            }
            for (int c : options) {
                bool ok = true;
                for (auto [q, s] : earlier_[p])
                    if (c == s * colour_[q]) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                int a = c < 0 ? -c : c;
                colour_[p] = c;
                int saved = highest_used_;
                ++class_size_[a];
                highest_used_ = std::max(highest_used_, a);
                if (dfs(p + 1, budget))
                    return true;
                --class_size_[a];
                highest_used_ = saved;
            }
            return false;
        }

        auto result() const -> Colouring
        {
            std::vector<int> colours(n_);
            for (int p = 0 ; p < n_ ; ++p)
                colours[order_[p]] = colour_[p];
            return Colouring{k_, colours};
        }

    private:
        int n_, k_, h_;
        bool zero_, symmetry_;
        std::vector<int> order_;
        std::vector<std::vector<std::pair<int, int>>> earlier_;
        std::vector<int> colour_;
        std::vector<int> class_size_;
        int highest_used_ = 0;
    };
}

auto exists_proper_k(const SignedGraph & g, int k, const SearchOptions & options, SearchStats * stats)
    -> std::optional<Colouring>
{
    if (k < 1)
        throw InvalidParameter("k must be at least 1");
    Budget budget{options.node_budget};
    ProperSearch search{g, k, options.symmetry_breaking};
    bool found = false;
    try {
        found = search.dfs(0, budget);
    }
    catch (...) {
        if (stats)
            stats->nodes += budget.nodes();
        throw;
    }
    if (stats)
        stats->nodes += budget.nodes();
    if (found)
        return search.result();
    return std::nullopt;
}

auto chi(const SignedGraph & g, const SearchOptions & options) -> ChiResult
{
    ChiResult result;
    SearchStats stats;
    auto remaining = options;
    for (int k = 1 ; ; ++k) {
        if (options.node_budget)
            remaining.node_budget = *options.node_budget - std::min(*options.node_budget, stats.nodes);
        auto found = exists_proper_k(g, k, remaining, &stats);
        if (found) {
            result.value = k;
            result.witness = *found;
            result.nodes = stats.nodes;
            return result;
        }
        result.refuted.push_back(k);
    }
}

auto is_complete_unsigned(const UnsignedGraph & g, const std::vector<int> & colours, int k) -> bool
{
    if (static_cast<int>(colours.size()) != g.order())
        throw InvalidParameter("colouring does not cover the graph");
    std::set<std::pair<int, int>> pairs;
    std::set<int> used;
    for (int c : colours) {
        if (c < 1 || c > k)
            return false;
        used.insert(c);
    }
    for (auto & [u, v] : g.edges()) {
        if (colours[u] == colours[v])
            return false;
        pairs.emplace(std::min(colours[u], colours[v]), std::max(colours[u], colours[v]));
    }
    return static_cast<int>(used.size()) == k && static_cast<int>(pairs.size()) == k * (k - 1) / 2;
}

namespace {
    class UnsignedCompleteSearch {
    public:
        UnsignedCompleteSearch(const UnsignedGraph & g, int k) :
            n_(g.order()), k_(k)
        {
            std::vector<int> degree(n_, 0);
            for (auto & [u, v] : g.edges()) {
                ++degree[u];
                ++degree[v];
            }
            order_.resize(n_);
            std::iota(order_.begin(), order_.end(), 0);
            std::stable_sort(order_.begin(), order_.end(), [&] (int a, int b) { return degree[a] > degree[b]; });
            std::vector<int> position(n_);
            for (int p = 0 ; p < n_ ; ++p)
                position[order_[p]] = p;
            earlier_.resize(n_);
            for (auto & [u, v] : g.edges()) {
                int a = position[u], b = position[v];
                if (a > b)
                    std::swap(a, b);
                earlier_[b].push_back(a);
            }
            colour_.assign(n_, 0);
            cover_.assign(k * k, 0);
            missing_ = k * (k - 1) / 2;
            remaining_edges_ = g.size();
            class_size_.assign(k + 1, 0);
        }

        auto dfs(int p, Budget & budget) -> bool
        {
            budget.tick();
            if (p == n_)
                return missing_ == 0 && highest_used_ == k_;
            int unused = k_ - highest_used_;
            if (unused > n_ - p)
                return false;
            int limit = std::min(k_, highest_used_ + 1);
            for (int c = 1 ; c <= limit ; ++c) {
                bool ok = std::none_of(earlier_[p].begin(), earlier_[p].end(), [&] (int q) { return colour_[q] == c; });
                if (! ok)
                    continue;
                colour_[p] = c;
                int saved = highest_used_;
                highest_used_ = std::max(highest_used_, c);
                for (int q : earlier_[p])
                    if (cover_[index(c, colour_[q])]++ == 0)
                        --missing_;
                remaining_edges_ -= static_cast<int>(earlier_[p].size());
                if (missing_ <= remaining_edges_ && dfs(p + 1, budget))
                    return true;
                remaining_edges_ += static_cast<int>(earlier_[p].size());
                for (int q : earlier_[p])
                    if (--cover_[index(c, colour_[q])] == 0)
                        ++missing_;
                highest_used_ = saved;
            }
            return false;
        }

        auto result() const -> std::vector<int>
        {
            std::vector<int> colours(n_);
            for (int p = 0 ; p < n_ ; ++p)
                colours[order_[p]] = colour_[p];
            return colours;
        }

    private:
        auto index(int a, int b) const -> int
        {
            return std::min(a, b) - 1 + (std::max(a, b) - 1) * k_;
        }

        int n_, k_;
        std::vector<int> order_;
        std::vector<std::vector<int>> earlier_;
        std::vector<int> colour_;
        std::vector<int> cover_;
        int missing_;
        int remaining_edges_;
        std::vector<int> class_size_;
        int highest_used_ = 0;
    };
}

auto psi_unsigned(const UnsignedGraph & g, const SearchOptions & options) -> UnsignedColouringResult
{
    if (g.order() == 0)
        throw InvalidParameter("the empty graph has no complete colouring");
    int upper = 1;
    while (upper + 1 <= g.order() && (upper + 1) * upper / 2 <= g.size())
        ++upper;

    Budget budget{options.node_budget};
    for (int k = upper ; k >= 1 ; --k) {
        UnsignedCompleteSearch search{g, k};
        if (search.dfs(0, budget))
            return UnsignedColouringResult{k, search.result(), budget.nodes()};
    }
    throw std::logic_error("no complete colouring found for a non-empty graph");
}

auto witness_subgraph(const SignedGraph & g, const Colouring & phi) -> std::vector<int>
{
    if (! is_complete(g, phi))
        throw InvalidParameter("witness subgraph needs a complete colouring");

    std::set<EdgeType> seen;
    std::set<int> vertices;
    for (auto & e : g.edges())
        if (seen.insert(classify_edge(g, phi, e.u, e.v)).second) {
            vertices.insert(e.u);
            vertices.insert(e.v);
        }

    // K*_1 has no edges, so its single colour class is kept by a vertex.
    std::set<int> magnitudes;
    for (int v : vertices)
        magnitudes.insert(phi[v].magnitude());
    for (int v = 0 ; v < g.order() ; ++v)
        if (magnitudes.insert(phi[v].magnitude()).second)
            vertices.insert(v);

    return {vertices.begin(), vertices.end()};
}

}
