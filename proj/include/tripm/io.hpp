#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tripm/graph.hpp"

namespace tripm {

/// Malformed input. `offset` is a byte offset within the graph6 line, or a
/// byte offset within the edge-list text; `line` is 1-based (0 if unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t offset)
        : std::runtime_error(what), line_(line), offset_(offset) {}
    std::size_t line() const { return line_; }
    std::size_t offset() const { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

/// graph6 cannot encode parallel edges.
class UnsupportedMultigraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Decodes one graph6 line. A trailing "\n" or "\r\n" is tolerated; the
/// optional ">>graph6<<" header is not. Both the single-byte (n <= 62) and
/// four-byte (n <= 258047) order forms are accepted. Padding bits must be 0.
Graph parse_graph6(std::string_view line);

/// Encodes a simple graph as canonical graph6 without a trailing newline.
std::string write_graph6(const Graph& g);

/// "n m" header, then m lines "u v". Blank lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace tripm
