#include <sgc/check.hpp>
#include <sgc/colouring.hpp>
#include <sgc/core.hpp>
#include <sgc/families.hpp>
#include <sgc/formulas.hpp>
#include <sgc/io.hpp>
#include <sgc/report.hpp>
#include <sgc/solver.hpp>
#include <sgc/switching.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace sgc;

namespace {
    class UsageError : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Globals {
        bool json = false;
        std::optional<std::uint64_t> node_budget;
        unsigned workers = 1;
        std::uint64_t seed = 0;

        auto search() const -> SearchOptions
        {
            SearchOptions o;
            o.node_budget = node_budget;
            o.workers = workers;
            return o;
        }
    };

    auto witness_list(const InferredColouring & gamma) -> Json
    {
        Json list = Json::array();
        for (int v = 0 ; v < gamma.size() ; ++v)
            list.push_back(std::to_string(v) + ":" + to_string(gamma[v]));
        return list;
    }

    auto witness_list(const Colouring & phi) -> Json
    {
        Json list = Json::array();
        for (int v = 0 ; v < phi.size() ; ++v)
            list.push_back(std::to_string(v) + ":" + std::to_string(phi[v].value));
        return list;
    }

    auto new_report(const std::vector<std::string> & command) -> Json
    {
        Json r;
        r["command"] = command;
        r["status"] = "ok";
        r["exit_code"] = 0;
        r["results"] = Json::object();
        return r;
    }

    auto set_status(Json & report, const std::string & status, ExitCode code) -> void
    {
        report["status"] = status;
        report["exit_code"] = static_cast<int>(code);
    }

    auto load_graph(const std::string & path) -> SignedGraph
    {
        return parse_graph(read_file(path));
    }

    auto parse_int(const std::string & s, const std::string & what) -> int
    {
        try {
            std::size_t used = 0;
            int value = std::stoi(s, &used);
            if (used == s.size())
                return value;
        }
        catch (const std::exception &) {
        }
        throw UsageError("bad " + what + " '" + s + "'");
    }

    auto parse_signs(const std::string & s) -> std::vector<Sign>
    {
        std::vector<Sign> signs;
        for (char c : s) {
            if (c != '+' && c != '-')
                throw UsageError("bad sign string '" + s + "'");
            signs.push_back(c == '+' ? Sign::positive : Sign::negative);
        }
        return signs;
    }

    auto bound_json(const UpperBound & b) -> Json
    {
        return Json{{"value", b.value}, {"order", b.order_bound}, {"matching", b.matching_bound}, {"size", b.size_bound}};
    }

    auto run_psi(const Globals & globals, const std::string & path, Json & report) -> void
    {
        auto g = load_graph(path);
        auto r = psi(g, globals.search());
        auto & res = report["results"];
        res["order"] = g.order();
        res["size"] = g.size();
        res["psi"] = r.value;
        res["upper_bound"] = bound_json(r.upper_bound);
        res["refuted"] = r.refuted;
        report["witness"] = witness_list(r.witness);
        report["nodes"] = r.nodes;
    }

    auto run_chi(const Globals & globals, const std::string & path, Json & report) -> void
    {
        auto g = load_graph(path);
        auto r = chi(g, globals.search());
        auto & res = report["results"];
        res["order"] = g.order();
        res["size"] = g.size();
        res["chi"] = r.value;
        res["refuted"] = r.refuted;
        report["witness"] = witness_list(r.witness);
        report["nodes"] = r.nodes;
    }

    auto run_verify(const std::string & path, const std::string & colouring_path, bool inferred, Json & report) -> void
    {
        auto g = load_graph(path);
        auto any = parse_colouring(read_file(colouring_path), g.order());
        auto & res = report["results"];
        bool complete = false;
        if (inferred) {
            auto * gamma = std::get_if<InferredColouring>(&any);
            if (! gamma)
                throw UsageError("--inferred needs magnitude and flag colours such as '3-'");
            bool proper = is_inferred_proper(g, *gamma);
            complete = is_inferred_complete(g, *gamma);
            res["k"] = gamma->k();
            res["form"] = "inferred";
            res["proper"] = proper;
            res["complete"] = complete;
        }
        else {
            auto * phi = std::get_if<Colouring>(&any);
            if (! phi)
                throw UsageError("inferred colouring given; pass --inferred");
            bool proper = is_proper(g, *phi);
            complete = is_complete(g, *phi);
            res["k"] = phi->k();
            res["form"] = "plain";
            res["proper"] = proper;
            res["complete"] = complete;
        }
        if (! complete)
            set_status(report, "not-complete", ExitCode::no);
        else
            report["status"] = "complete";
    }

    auto run_reduce(const std::string & path, const std::string & colouring_path, Json & report) -> void
    {
        auto g = load_graph(path);
        auto any = parse_colouring(read_file(colouring_path), g.order());
        auto * phi = std::get_if<Colouring>(&any);
        if (! phi)
            throw UsageError("reduce needs a plain colouring");
        auto & res = report["results"];
        res["k"] = phi->k();
        if (! is_proper(g, *phi)) {
            res["proper"] = false;
            set_status(report, "improper", ExitCode::no);
            return;
        }
        auto r = reduce(g, *phi);
        res["proper"] = true;
        res["labels"] = r.labels();
        Json edges = Json::array();
        for (auto & e : r.edges())
            edges.push_back(std::to_string(e.u) + " " + std::to_string(e.v) + " " + sign_char(e.sign));
        res["edges"] = edges;
        res["equals_kstar"] = r == build_kstar(phi->k());
        res["complete"] = is_complete(g, *phi);
    }

    auto run_equiv(const std::string & a_path, const std::string & b_path, Json & report) -> void
    {
        auto a = load_graph(a_path), b = load_graph(b_path);
        auto & res = report["results"];
        bool same = same_underlying(a, b);
        res["same_underlying"] = same;
        bool eq = same && are_equivalent(a, b);
        res["equivalent"] = eq;
        if (eq) {
            auto s = canonical_form(a).switched.compose(canonical_form(b).switched);
            res["switch_set"] = s.members();
            report["status"] = "equivalent";
        }
        else
            set_status(report, "not-equivalent", ExitCode::no);
    }

    auto claim_json(const Claim & c) -> Json
    {
        return Json{{"subject", c.subject}, {"relation", to_string(c.relation)}, {"value", c.value}};
    }

    auto marked_json(const Marked & m) -> Json
    {
        switch (m.kind) {
        case Marked::Kind::vertex: return Json{{"vertex", m.a}};
        case Marked::Kind::edge: return Json{{"edge", {m.a, m.b}}};
        case Marked::Kind::pair: return Json{{"pair", {m.a, m.b}}};
        case Marked::Kind::none: break;
        }
        return nullptr;
    }

    auto family_instance(const std::string & family, const std::vector<std::string> & params) -> FamilyInstance
    {
        auto need = [&] (std::size_t count) {
            if (params.size() != count)
                throw UsageError(family + " takes " + std::to_string(count) + " parameter(s)");
        };
        static const std::map<std::string, FamilyInstance (*)(int)> single{
            {"remove-vertex", gen_remove_vertex},
            {"resign-edge", gen_resign_edge},
            {"resign-edge-upper", gen_resign_edge_upper},
            {"remove-edge-lower", gen_remove_edge_lower},
            {"remove-edge-upper", gen_remove_edge_upper},
            {"elementary-drop", gen_elementary_drop},
            {"interpolation", gen_interpolation},
        };
        if (auto it = single.find(family) ; it != single.end()) {
            need(1);
            return it->second(parse_int(params[0], "k"));
        }
        if (family == "perfect-counterexample") {
            need(0);
            return gen_perfect_counterexample();
        }
        if (family == "irreducible-large") {
            need(2);
            return gen_irreducible_large(parse_int(params[0], "p"), parse_int(params[1], "m"));
        }
        throw UsageError("unknown family '" + family + "'");
    }

    // Plain graphs for the helpers; families with claims come back as
    // instances.
    auto simple_family(const std::string & family, const std::vector<std::string> & params) -> std::optional<SignedGraph>
    {
        auto need = [&] (std::size_t count) {
            if (params.size() != count)
                throw UsageError(family + " takes " + std::to_string(count) + " parameter(s)");
        };
        if (family == "clique") {
            need(2);
            auto signs = parse_signs(params[1]);
            if (signs.size() != 1)
                throw UsageError("clique sign must be + or -");
            return complete_graph(parse_int(params[0], "n"), signs[0]);
        }
        if (family == "path" || family == "cycle") {
            need(1);
            auto signs = parse_signs(params[0]);
            return family == "path" ? path_graph(signs) : cycle_graph(signs);
        }
        if (family == "np-reduction") {
            need(2);
            return gen_np_reduction(parse_unsigned_graph(read_file(params[0])), parse_int(params[1], "k"));
        }
        return std::nullopt;
    }

    // Returns the graph text for plain output.
    auto run_gen(const Globals & globals, const std::string & family, const std::vector<std::string> & params, bool after, Json & report) -> std::string
    {
        auto & res = report["results"];
        res["family"] = family;
        res["parameters"] = params;
        if (auto g = simple_family(family, params)) {
            if (after)
                throw UsageError("--after applies only to families with a marked operation");
            res["order"] = g->order();
            res["size"] = g->size();
            res["graph"] = serialize_graph(*g);
            return serialize_graph(*g);
        }
        auto inst = family_instance(family, params);
        const SignedGraph * out = &inst.graph;
        if (after) {
            if (! inst.after)
                throw UsageError("family '" + family + "' has no graph after an operation");
            out = &*inst.after;
        }
        res["order"] = out->order();
        res["size"] = out->size();
        res["names"] = inst.names;
        if (auto m = marked_json(inst.marked) ; ! m.is_null())
            res["marked"] = m;
        if (inst.claimed_psi)
            res["claimed_psi"] = *inst.claimed_psi;
        if (inst.claimed_after)
            res["claimed_after"] = *inst.claimed_after;
        SearchOptions options;
        options.node_budget = globals.node_budget;
        auto cert = certify(inst, options);
        Json claims = Json::array();
        for (std::size_t i = 0 ; i < inst.claims.size() ; ++i) {
            auto c = claim_json(inst.claims[i]);
            c["certified"] = static_cast<bool>(cert.claims[i]);
            claims.push_back(c);
        }
        res["claims"] = claims;
        res["illustrated"] = inst.illustrated;
        res["graph"] = serialize_graph(*out);
        if (after && inst.witness_after)
            report["witness"] = witness_list(*inst.witness_after);
        else if (! after && inst.witness)
            report["witness"] = witness_list(*inst.witness);
        Json chain = Json::array();
        for (std::size_t i = 0 ; i < inst.chain.steps().size() ; ++i) {
            auto & step = inst.chain.steps()[i];
            chain.push_back(Json{{"rule", to_string(step.rule)}, {"subject", step.conclusion.subject},
                {"relation", to_string(step.conclusion.relation)}, {"value", step.conclusion.value},
                {"ok", cert.chain.steps[i].ok}, {"detail", cert.chain.steps[i].detail}});
        }
        report["certification"] = chain;
        return serialize_graph(*out);
    }

    auto run_witness(const std::string & path, const std::string & colouring_path, Json & report) -> void
    {
        auto g = load_graph(path);
        auto any = parse_colouring(read_file(colouring_path), g.order());
        SignedGraph target = g;
        Colouring phi;
        if (auto * gamma = std::get_if<InferredColouring>(&any)) {
            auto r = realize(g, *gamma);
            target = r.graph;
            phi = r.colouring;
        }
        else
            phi = std::get<Colouring>(any);
        auto & res = report["results"];
        res["k"] = phi.k();
        if (! is_complete(target, phi)) {
            res["complete"] = false;
            set_status(report, "not-complete", ExitCode::no);
            return;
        }
        auto vertices = witness_subgraph(target, phi);
        auto sub = target.induced(vertices);
        std::vector<Colour> restricted;
        for (int v : vertices)
            restricted.push_back(phi[v]);
        Colouring sub_phi{phi.k(), restricted};
        res["complete"] = true;
        res["vertices"] = vertices;
        res["order"] = static_cast<int>(vertices.size());
        res["limit"] = 2 * kstar_size(phi.k());
        res["subgraph_complete"] = is_complete(sub, sub_phi);
        res["subgraph"] = serialize_graph(sub);
        report["witness"] = witness_list(sub_phi);
    }

    auto run_formula(const std::string & kind, const std::vector<std::string> & params, Json & report) -> void
    {
        auto & res = report["results"];
        res["formula"] = kind;
        auto need = [&] (std::size_t low, std::size_t high) {
            if (params.size() < low || params.size() > high)
                throw UsageError("formula " + kind + ": wrong number of parameters");
        };
        if (kind == "path") {
            need(1, 2);
            int n = parse_int(params[0], "n");
            res["n"] = n;
            res["psi"] = psi_path(n);
            if (params.size() == 2) {
                auto signs = parse_signs(params[1]);
                if (static_cast<int>(signs.size()) != n - 1)
                    throw UsageError("a path of order n needs n-1 signs");
                report["witness"] = witness_list(construct_path_colouring(n, signs));
            }
        }
        else if (kind == "cycle") {
            need(2, 2);
            int n = parse_int(params[0], "n");
            res["n"] = n;
            auto & b = params[1];
            if (b == "even" || b == "odd") {
                auto parity = b == "even" ? Parity::even : Parity::odd;
                res["balance"] = b;
                res["psi"] = psi_cycle(n, parity);
            }
            else {
                auto signs = parse_signs(b);
                if (static_cast<int>(signs.size()) != n)
                    throw UsageError("a cycle of order n needs n signs");
                auto parity = signature_balance(signs);
                res["balance"] = parity == Parity::even ? "even" : "odd";
                res["psi"] = psi_cycle(n, parity);
                auto c = construct_cycle_colouring(n, signs);
                static const char * cases[] = {"closed-tour", "closing-loop", "extended-walk"};
                res["construction"] = cases[static_cast<int>(c.used)];
                report["witness"] = witness_list(c.colouring);
            }
        }
        else if (kind == "clique") {
            need(2, 3);
            int n = parse_int(params[0], "n");
            res["n"] = n;
            auto & v = params[1];
            CompleteVariant variant;
            if (v == "positive" || v == "+")
                variant.kind = CompleteVariant::Kind::all_positive;
            else if (v == "negative" || v == "-")
                variant.kind = CompleteVariant::Kind::all_negative;
            else if (v == "negative-matching") {
                need(3, 3);
                variant.kind = CompleteVariant::Kind::negative_minus_matching;
                variant.matching = parse_int(params[2], "matching size");
                res["matching"] = variant.matching;
            }
            else
                throw UsageError("clique variant must be positive, negative or negative-matching");
            res["variant"] = v;
            res["psi"] = psi_complete(n, variant);
            if (variant.kind == CompleteVariant::Kind::all_positive)
                report["witness"] = witness_list(construct_positive_clique_colouring(n));
        }
        else
            throw UsageError("unknown formula '" + kind + "'");
    }

    auto emit(const Json & report, bool json) -> void
    {
        if (json)
            std::cout << report.dump(2) << '\n';
        else
            std::cout << render_text(report);
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Complete colourings and achromatic numbers of signed graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_flag("--json", globals.json, "Print the report as JSON");
    app.add_option("--node-budget", globals.node_budget, "Search nodes allowed per solver call");
    app.add_option("--workers", globals.workers, "Solver threads")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", globals.seed, "Random seed");

    std::string file, file2, family, kind;
    std::vector<std::string> params;
    bool inferred = false, after = false;
    CheckConfig config;

    auto * psi_cmd = app.add_subcommand("psi", "Achromatic number");
    psi_cmd->add_option("file", file, "Graph file")->required();
    auto * chi_cmd = app.add_subcommand("chi", "Chromatic number");
    chi_cmd->add_option("file", file, "Graph file")->required();
    auto * verify_cmd = app.add_subcommand("verify", "Check that a colouring is complete");
    verify_cmd->add_option("file", file, "Graph file")->required();
    verify_cmd->add_option("colouring", file2, "Colouring file")->required();
    verify_cmd->add_flag("--inferred", inferred, "The colouring uses magnitude and flag colours");
    auto * reduce_cmd = app.add_subcommand("reduce", "Reduced multigraph of a proper colouring");
    reduce_cmd->add_option("file", file, "Graph file")->required();
    reduce_cmd->add_option("colouring", file2, "Colouring file")->required();
    auto * equiv_cmd = app.add_subcommand("equiv", "Switching equivalence of two signatures");
    equiv_cmd->add_option("file1", file, "Graph file")->required();
    equiv_cmd->add_option("file2", file2, "Graph file")->required();
    auto * gen_cmd = app.add_subcommand("gen", "Generate a graph family instance");
    gen_cmd->add_option("family", family, "remove-vertex, resign-edge, resign-edge-upper, remove-edge-lower, "
        "remove-edge-upper, elementary-drop, interpolation, perfect-counterexample, irreducible-large, "
        "np-reduction, clique, path, cycle")->required();
    gen_cmd->add_option("params", params, "Family parameters");
    gen_cmd->add_flag("--after", after, "Output the graph after the marked operation");
    auto * witness_cmd = app.add_subcommand("witness", "Small induced subgraph keeping a colouring complete");
    witness_cmd->add_option("file", file, "Graph file")->required();
    witness_cmd->add_option("colouring", file2, "Colouring file")->required();
    auto * check_cmd = app.add_subcommand("check", "Randomized theorem checks");
    check_cmd->add_option("--max-n", config.max_n, "Largest order")->check(CLI::PositiveNumber);
    check_cmd->add_option("--trials", config.trials, "Number of random graphs")->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--seed", globals.seed, "Random seed");
    auto * formula_cmd = app.add_subcommand("formula", "Closed-form achromatic numbers");
    formula_cmd->add_option("kind", kind, "path, cycle or clique")->required();
    formula_cmd->add_option("params", params, "path <n> [signs] | cycle <n> <even|odd|signs> | "
        "clique <n> <positive|negative|negative-matching> [m]");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        std::cerr << app.help();
        return static_cast<int>(ExitCode::usage);
    }

    std::vector<std::string> command(argv + 1, argv + argc);
    auto report = new_report(command);
    auto start = std::chrono::steady_clock::now();
    std::string plain_graph;
    bool timed = true;
    try {
        if (*psi_cmd)
            run_psi(globals, file, report);
        else if (*chi_cmd)
            run_chi(globals, file, report);
        else if (*verify_cmd)
            run_verify(file, file2, inferred, report);
        else if (*reduce_cmd)
            run_reduce(file, file2, report);
        else if (*equiv_cmd)
            run_equiv(file, file2, report);
        else if (*gen_cmd)
            plain_graph = run_gen(globals, family, params, after, report);
        else if (*witness_cmd)
            run_witness(file, file2, report);
        else if (*check_cmd) {
            config.seed = globals.seed;
            config.node_budget = globals.node_budget;
            report = check_report(command, config, run_check(config));
            timed = false;
        }
        else if (*formula_cmd)
            run_formula(kind, params, report);
    }
    catch (const ResourceExhausted & e) {
        set_status(report, "budget-exhausted", ExitCode::exhausted);
        report["results"]["error"] = e.what();
        report["nodes"] = e.nodes();
    }
    catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return static_cast<int>(ExitCode::usage);
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }

    if (timed)
        report["time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (*gen_cmd && ! globals.json && ! plain_graph.empty())
        std::cout << plain_graph;
    else
        emit(report, globals.json);
    return report["exit_code"].get<int>();
}
