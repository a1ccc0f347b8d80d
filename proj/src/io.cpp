#include <sgc/io.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace sgc {

namespace {
    struct Line {
        int number;
        std::vector<std::string> tokens;
    };

    // Non-blank, non-comment lines split on whitespace.
    auto significant_lines(const std::string & text) -> std::vector<Line>
    {
        std::vector<Line> result;
        std::istringstream in{text};
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            auto start = raw.find_first_not_of(" \t\r");
            if (start == std::string::npos || raw[start] == '#')
                continue;
            std::istringstream words{raw};
            Line line{number, {}};
            std::string w;
            while (words >> w)
                line.tokens.push_back(w);
            result.push_back(std::move(line));
        }
        return result;
    }

    auto to_int(const std::string & s) -> std::optional<int>
    {
        int value = 0;
        auto begin = s.data(), end = s.data() + s.size();
        if (begin != end && *begin == '+')
            ++begin;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end || begin == end)
            return std::nullopt;
        return value;
    }

    auto header(const std::vector<Line> & lines, const std::string & keyword) -> int
    {
        if (lines.empty())
            throw ParseError(1, "missing '" + keyword + " <n>' header");
        auto & h = lines.front();
        if (h.tokens.size() != 2 || h.tokens[0] != keyword)
            throw ParseError(h.number, "expected '" + keyword + " <n>' header");
        auto n = to_int(h.tokens[1]);
        if (! n || *n < 0)
            throw ParseError(h.number, "bad count '" + h.tokens[1] + "'");
        return *n;
    }

    auto vertex(const Line & line, const std::string & token, int order) -> int
    {
        auto v = to_int(token);
        if (! v || *v < 0)
            throw ParseError(line.number, "bad vertex '" + token + "'");
        if (*v >= order)
            throw ParseError(line.number, "vertex " + token + " out of range for order " + std::to_string(order));
        return *v;
    }

    auto edge_endpoints(const Line & line, int order, std::set<std::pair<int, int>> & seen) -> std::pair<int, int>
    {
        int u = vertex(line, line.tokens[0], order), v = vertex(line, line.tokens[1], order);
        if (u == v)
            throw ParseError(line.number, "loop at vertex " + std::to_string(u));
        if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw ParseError(line.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        return {u, v};
    }
}

auto parse_graph(const std::string & text) -> SignedGraph
{
    auto lines = significant_lines(text);
    int order = header(lines, "sg");
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1 ; i < lines.size() ; ++i) {
        auto & line = lines[i];
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "expected '<u> <v> <+|->'");
        auto [u, v] = edge_endpoints(line, order, seen);
        auto & s = line.tokens[2];
        if (s != "+" && s != "-")
            throw ParseError(line.number, "bad sign '" + s + "'");
        edges.push_back(Edge{u, v, s == "+" ? Sign::positive : Sign::negative});
    }
    return SignedGraph{order, std::move(edges)};
}

auto serialize_graph(const SignedGraph & g) -> std::string
{
    std::ostringstream out;
    out << "sg " << g.order() << '\n';
    for (auto & e : g.edges())
        out << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
    return out.str();
}

auto parse_unsigned_graph(const std::string & text) -> UnsignedGraph
{
    auto lines = significant_lines(text);
    int order = header(lines, "g");
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1 ; i < lines.size() ; ++i) {
        auto & line = lines[i];
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected '<u> <v>'");
        edges.push_back(edge_endpoints(line, order, seen));
    }
    return UnsignedGraph{order, std::move(edges)};
}

auto serialize_unsigned_graph(const UnsignedGraph & g) -> std::string
{
    std::ostringstream out;
    out << "g " << g.order() << '\n';
    for (auto & [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto parse_colouring(const std::string & text, int order) -> AnyColouring
{
    auto lines = significant_lines(text);
    int k = header(lines, "col");
    if (k < 1)
        throw ParseError(lines.front().number, "k must be at least 1");

    std::vector<std::optional<int>> plain(order);
    std::vector<std::optional<SignedColour>> inferred(order);
    std::optional<bool> is_inferred;
    for (std::size_t i = 1 ; i < lines.size() ; ++i) {
        auto & line = lines[i];
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected '<vertex> <colour>'");
        int v = vertex(line, line.tokens[0], order);
        if (plain[v] || inferred[v])
            throw ParseError(line.number, "vertex " + std::to_string(v) + " coloured twice");
        auto & c = line.tokens[1];
        bool flagged = ! c.empty() && (c.back() == '+' || c.back() == '-') && c.size() > 1;
        if (is_inferred && *is_inferred != flagged)
            throw ParseError(line.number, "mixed plain and inferred colours");
        is_inferred = flagged;
        if (flagged) {
            auto m = to_int(c.substr(0, c.size() - 1));
            if (! m || *m < 0 || c[0] == '+' || c[0] == '-')
                throw ParseError(line.number, "bad inferred colour '" + c + "'");
            inferred[v] = SignedColour{*m, c.back() == '+' ? Flag::plus : Flag::minus};
        }
        else {
            auto value = to_int(c);
            if (! value)
                throw ParseError(line.number, "bad colour '" + c + "'");
            plain[v] = *value;
        }
    }

    int last = lines.back().number;
    try {
        if (is_inferred.value_or(false)) {
            std::vector<SignedColour> colours;
            for (int v = 0 ; v < order ; ++v) {
                if (! inferred[v])
                    throw ParseError(last, "vertex " + std::to_string(v) + " has no colour");
                colours.push_back(*inferred[v]);
            }
            return InferredColouring{k, std::move(colours)};
        }
        std::vector<int> colours;
        for (int v = 0 ; v < order ; ++v) {
            if (! plain[v])
                throw ParseError(last, "vertex " + std::to_string(v) + " has no colour");
            colours.push_back(*plain[v]);
        }
        return Colouring{k, colours};
    }
    catch (const InvalidParameter & e) {
        throw ParseError(last, e.what());
    }
}

auto serialize_colouring(const Colouring & phi) -> std::string
{
    std::ostringstream out;
    out << "col " << phi.k() << '\n';
    for (int v = 0 ; v < phi.size() ; ++v)
        out << v << ' ' << phi[v].value << '\n';
    return out.str();
}

auto serialize_colouring(const InferredColouring & gamma) -> std::string
{
    std::ostringstream out;
    out << "col " << gamma.k() << '\n';
    for (int v = 0 ; v < gamma.size() ; ++v)
        out << v << ' ' << to_string(gamma[v]) << '\n';
    return out.str();
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in{path};
    if (! in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}
