#include <sgc/check.hpp>
#include <sgc/colouring.hpp>
#include <sgc/homomorphism.hpp>
#include <sgc/io.hpp>
#include <sgc/switching.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace sgc {

auto CheckResult::violations() const -> long
{
    long total = 0;
    for (auto & s : suites)
        total += s.violations;
    return total;
}

namespace {
    using Rng = std::mt19937_64;

    // Memoized psi and chi.  All searches are sequential so node counts are
    // reproducible.
    class Oracle {
    public:
        explicit Oracle(std::optional<std::uint64_t> budget)
        {
            options_.node_budget = budget;
        }

        auto psi_of(const SignedGraph & g) -> const PsiResult &
        {
            auto key = serialize_graph(g);
            auto it = psi_.find(key);
            if (it == psi_.end()) {
                auto r = psi(g, options_);
                nodes_ += r.nodes;
                it = psi_.emplace(key, std::move(r)).first;
            }
            return it->second;
        }

        auto chi_of(const SignedGraph & g) -> int
        {
            auto key = serialize_graph(g);
            auto it = chi_.find(key);
            if (it == chi_.end()) {
                auto r = chi(g, options_);
                nodes_ += r.nodes;
                it = chi_.emplace(key, r.value).first;
            }
            return it->second;
        }

        auto exists(const SignedGraph & g, int k, bool symmetry) -> bool
        {
            auto o = options_;
            o.symmetry_breaking = symmetry;
            SearchStats stats;
            auto r = exists_complete_k(g, k, o, &stats);
            nodes_ += stats.nodes;
            return r.has_value();
        }

        auto nodes() const -> std::uint64_t { return nodes_; }

    private:
        SearchOptions options_;
        std::map<std::string, PsiResult> psi_;
        std::map<std::string, int> chi_;
        std::uint64_t nodes_ = 0;
    };

    struct Outcome {
        long cases = 0;
        std::optional<std::string> violation;

        auto fail(const std::string & what) -> void
        {
            if (! violation)
                violation = what;
        }
    };

    using Suite = std::function<Outcome (const SignedGraph &, Rng &, Oracle &, const CheckConfig &)>;

    auto random_switch(int n, Rng & rng) -> SwitchSet
    {
        std::vector<bool> mask(n);
        for (int v = 0 ; v < n ; ++v)
            mask[v] = rng() % 2 == 1;
        return SwitchSet::from_mask(std::move(mask));
    }

    auto range(const std::string & what, int value, int low, int high) -> std::optional<std::string>
    {
        if (value < low || value > high)
            return what + " = " + std::to_string(value) + " outside [" + std::to_string(low) + ", " + std::to_string(high) + "]";
        return std::nullopt;
    }

    auto pair_name(int u, int v) -> std::string
    {
        return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }

    auto switching_invariance(const SignedGraph & g, Rng & rng, Oracle & o, const CheckConfig &) -> Outcome
    {
        Outcome out;
        auto s = random_switch(g.order(), rng);
        auto h = switch_vertices(g, s);
        out.cases = 2;
        if (o.psi_of(g).value != o.psi_of(h).value)
            out.fail("psi changes under switching");
        if (o.chi_of(g) != o.chi_of(h))
            out.fail("chi changes under switching");
        return out;
    }

    auto chi_below_psi(const SignedGraph & g, Rng &, Oracle & o, const CheckConfig &) -> Outcome
    {
        Outcome out;
        out.cases = 1;
        if (o.chi_of(g) > o.psi_of(g).value)
            out.fail("chi = " + std::to_string(o.chi_of(g)) + " exceeds psi = " + std::to_string(o.psi_of(g).value));
        return out;
    }

    auto vertex_removal(const SignedGraph & g, Rng &, Oracle & o, const CheckConfig & config) -> Outcome
    {
        Outcome out;
        if (g.order() < 2)
            return out;
        int p = o.psi_of(g).value;
        for (int v = 0 ; v < g.order() ; ++v) {
            ++out.cases;
            if (auto bad = range("psi(G - " + std::to_string(v) + ")", o.psi_of(g.without_vertex(v)).value,
                        p - config.vertex_removal_drop, p))
                out.fail(*bad);
        }
        return out;
    }

    auto sign_change(const SignedGraph & g, Rng &, Oracle & o, const CheckConfig &) -> Outcome
    {
        Outcome out;
        int p = o.psi_of(g).value;
        for (auto & e : g.edges()) {
            ++out.cases;
            if (auto bad = range("psi after changing " + pair_name(e.u, e.v), o.psi_of(g.with_edge_flipped(e.u, e.v)).value, p - 2, p + 2))
                out.fail(*bad);
        }
        return out;
    }

    auto edge_removal(const SignedGraph & g, Rng &, Oracle & o, const CheckConfig &) -> Outcome
    {
        Outcome out;
        int p = o.psi_of(g).value;
        for (auto & e : g.edges()) {
            ++out.cases;
            if (auto bad = range("psi(G - " + pair_name(e.u, e.v) + ")", o.psi_of(g.without_edge(e.u, e.v)).value, p - 2, p + 2))
                out.fail(*bad);
        }
        return out;
    }

    auto elementary_image(const SignedGraph & g, Rng &, Oracle & o, const CheckConfig &) -> Outcome
    {
        Outcome out;
        int p = o.psi_of(g).value, c = o.chi_of(g);
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v) {
                if (! identifiable(g, u, v))
                    continue;
                auto h = identify(g, u, v);
                out.cases += 2;
                if (auto bad = range("chi of image " + pair_name(u, v), o.chi_of(h), c, c + 1))
                    out.fail(*bad);
                if (auto bad = range("psi of image " + pair_name(u, v), o.psi_of(h).value, p - 4, p))
                    out.fail(*bad);
            }
        return out;
    }

    auto class_operations(const SignedGraph & g, Rng &, Oracle & o, const CheckConfig &) -> Outcome
    {
        Outcome out;
        auto & gamma = o.psi_of(g).witness;
        int k = gamma.k(), h = max_magnitude(k);
        auto [switched, phi] = realize(g, gamma);
        for (int i = 1 ; i <= h ; ++i) {
            ++out.cases;
            if (! is_complete(switched, negate_colour_class(phi, i)))
                out.fail("negating class " + std::to_string(i) + " breaks completeness");
        }
        for (int i : magnitude_set(k)) {
            ++out.cases;
            if (! is_inferred_complete(g, swap_inferred_flags(gamma, i)))
                out.fail("swapping flags of class " + std::to_string(i) + " breaks completeness");
            if ((i == 0 ? k - 1 : k - 2) < 1)
                continue;
            ++out.cases;
            auto dropped = drop_colour_class(switched, phi, i);
            if (! is_complete(dropped.graph, dropped.colouring))
                out.fail("dropping class " + std::to_string(i) + " breaks completeness");
        }
        return out;
    }

    auto inferred_vs_realized(const SignedGraph & g, Rng & rng, Oracle & o, const CheckConfig &) -> Outcome
    {
        Outcome out;
        auto agree = [&] (const InferredColouring & gamma) {
            ++out.cases;
            auto r = realize(g, gamma);
            if (is_inferred_complete(g, gamma) != is_complete(r.graph, r.colouring))
                out.fail("inferred and realized completeness disagree");
            if (is_inferred_proper(g, gamma) != is_proper(r.graph, r.colouring))
                out.fail("inferred and realized properness disagree");
        };
        agree(o.psi_of(g).witness);
        for (int t = 0 ; t < 20 ; ++t) {
            int k = 1 + static_cast<int>(rng() % 6);
            auto mags = magnitude_set(k);
            std::vector<SignedColour> colours;
            for (int v = 0 ; v < g.order() ; ++v)
                colours.push_back(SignedColour{mags[rng() % mags.size()], rng() % 2 ? Flag::minus : Flag::plus});
            agree(InferredColouring{k, colours});
        }
        return out;
    }

    auto equivalence_brute_force(const SignedGraph & g, Rng & rng, Oracle &, const CheckConfig &) -> Outcome
    {
        Outcome out;
        int n = g.order();
        for (int t = 0 ; t < 2 ; ++t) {
            SignedGraph other;
            if (t == 0)
                other = switch_vertices(g, random_switch(n, rng));
            else {
                auto edges = g.edges();
                for (auto & e : edges)
                    e.sign = rng() % 2 ? Sign::positive : Sign::negative;
                other = SignedGraph{n, edges};
            }
            bool brute = false;
            for (long mask = 0 ; mask < (1L << n) && ! brute ; ++mask) {
                std::vector<bool> bits(n);
                for (int v = 0 ; v < n ; ++v)
                    bits[v] = (mask >> v) & 1;
                brute = switch_vertices(g, SwitchSet::from_mask(bits)) == other;
            }
            ++out.cases;
            if (are_equivalent(g, other) != brute)
                out.fail("are_equivalent disagrees with enumeration of switch sets");
            auto canon = canonical_form(g);
            ++out.cases;
            if (switch_vertices(g, canon.switched) != canon.graph)
                out.fail("canonical form does not match its switch set");
        }
        return out;
    }

    auto symmetry_breaking(const SignedGraph & g, Rng &, Oracle & o, const CheckConfig &) -> Outcome
    {
        Outcome out;
        if (g.order() > 5)
            return out;
        for (int k = 1 ; k <= g.order() + 1 ; ++k) {
            ++out.cases;
            if (o.exists(g, k, true) != o.exists(g, k, false))
                out.fail("symmetry-broken and unrestricted searches disagree at k = " + std::to_string(k));
        }
        return out;
    }

    struct NamedSuite {
        std::string name;
        Suite run;
    };

    auto all_suites() -> std::vector<NamedSuite>
    {
        return {
            {"switching-invariance", switching_invariance},
            {"chi-at-most-psi", chi_below_psi},
            {"vertex-removal", vertex_removal},
            {"sign-change", sign_change},
            {"edge-removal", edge_removal},
            {"elementary-image", elementary_image},
            {"colour-class-operations", class_operations},
            {"inferred-vs-realized", inferred_vs_realized},
            {"equivalence-brute-force", equivalence_brute_force},
            {"symmetry-breaking", symmetry_breaking},
        };
    }

    auto random_graph(int n, Rng & rng) -> SignedGraph
    {
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (rng() % 2) {
                    Sign s = rng() % 2 ? Sign::positive : Sign::negative;
                    edges.push_back(Edge{u, v, s});
                }
        return SignedGraph{n, std::move(edges)};
    }

    // Greedy single-vertex deletion while the violation persists.
    auto minimize(const SignedGraph & g, const Suite & suite, std::uint64_t suite_seed, Oracle & o,
            const CheckConfig & config) -> SignedGraph
    {
        auto current = g;
        bool changed = true;
        while (changed && current.order() > 1) {
            changed = false;
            for (int v = 0 ; v < current.order() ; ++v) {
                auto smaller = current.without_vertex(v);
                Rng rng{suite_seed};
                if (suite(smaller, rng, o, config).violation) {
                    current = smaller;
                    changed = true;
                    break;
                }
            }
        }
        return current;
    }
}

auto check_suites() -> std::vector<std::string>
{
    std::vector<std::string> names;
    for (auto & s : all_suites())
        names.push_back(s.name);
    return names;
}

auto run_check(const CheckConfig & config) -> CheckResult
{
    if (config.max_n < 1)
        throw InvalidParameter("max-n must be at least 1");
    if (config.trials < 0)
        throw InvalidParameter("trials must be non-negative");

    auto suites = all_suites();
    CheckResult result;
    for (auto & s : suites)
        result.suites.push_back(SuiteResult{s.name, 0, 0});

    Oracle oracle{config.node_budget};
    Rng rng{config.seed};
    try {
        for (int trial = 0 ; trial < config.trials ; ++trial) {
            int n = 1 + static_cast<int>(rng() % config.max_n);
            auto g = random_graph(n, rng);
            auto trial_seed = rng();
            for (std::size_t i = 0 ; i < suites.size() ; ++i) {
                auto suite_seed = trial_seed + 0x9e3779b97f4a7c15ULL * (i + 1);
                Rng suite_rng{suite_seed};
                auto outcome = suites[i].run(g, suite_rng, oracle, config);
                result.suites[i].cases += outcome.cases;
                if (! outcome.violation)
                    continue;
                ++result.suites[i].violations;
                bool first = std::none_of(result.counterexamples.begin(), result.counterexamples.end(),
                    [&] (const Counterexample & c) { return c.suite == suites[i].name; });
                if (first) {
                    auto small = minimize(g, suites[i].run, suite_seed, oracle, config);
                    Rng again{suite_seed};
                    auto detail = suites[i].run(small, again, oracle, config).violation.value_or(*outcome.violation);
                    result.counterexamples.push_back(Counterexample{suites[i].name, trial, detail, g, small});
                }
            }
            result.trials_run = trial + 1;
        }
    }
    catch (const ResourceExhausted & e) {
        result.exhausted = e.what();
    }
    result.nodes = oracle.nodes();
    return result;
}

auto check_report(const std::vector<std::string> & command, const CheckConfig & config, const CheckResult & result) -> Json
{
    Json report;
    report["command"] = command;
    ExitCode code = result.exhausted ? ExitCode::exhausted : result.violations() > 0 ? ExitCode::no : ExitCode::ok;
    report["status"] = result.exhausted ? "budget-exhausted" : result.violations() > 0 ? "violated" : "passed";
    report["exit_code"] = static_cast<int>(code);

    Json results;
    results["seed"] = config.seed;
    results["max_n"] = config.max_n;
    results["trials"] = config.trials;
    results["trials_run"] = result.trials_run;
    results["violations"] = result.violations();
    Json suites = Json::array();
    for (auto & s : result.suites)
        suites.push_back(Json{{"name", s.name}, {"cases", s.cases}, {"violations", s.violations}});
    results["suites"] = suites;
    if (result.exhausted)
        results["exhausted"] = *result.exhausted;
    report["results"] = results;

    if (! result.counterexamples.empty()) {
        Json list = Json::array();
        for (auto & c : result.counterexamples)
            list.push_back(Json{{"suite", c.suite}, {"trial", c.trial}, {"detail", c.detail},
                {"graph", serialize_graph(c.original)}, {"minimized", serialize_graph(c.minimized)}});
        report["counterexamples"] = list;
    }
    report["nodes"] = result.nodes;
    return report;
}

}
