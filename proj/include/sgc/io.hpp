#pragma once

#include <sgc/colouring.hpp>
#include <sgc/core.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace sgc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string & message) :
        std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line)
    {
    }

    auto line() const -> int { return line_; }

private:
    int line_;
};

// "sg <order>" then "<u> <v> <+|->" per edge; '#' comments and blank lines
// are ignored.
auto parse_graph(const std::string & text) -> SignedGraph;
auto serialize_graph(const SignedGraph & g) -> std::string;

// "g <order>" then "<u> <v>" per edge.
auto parse_unsigned_graph(const std::string & text) -> UnsignedGraph;
auto serialize_unsigned_graph(const UnsignedGraph & g) -> std::string;

using AnyColouring = std::variant<Colouring, InferredColouring>;

// "col <k>" then "<vertex> <colour>" per vertex.  Colours are integers such
// as "-2" or "0" for plain colourings, or magnitude and flag such as "3-" or
// "0+" for inferred ones; one file uses one form.
auto parse_colouring(const std::string & text, int order) -> AnyColouring;
auto serialize_colouring(const Colouring & phi) -> std::string;
auto serialize_colouring(const InferredColouring & gamma) -> std::string;

auto read_file(const std::string & path) -> std::string;

}
