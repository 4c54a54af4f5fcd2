#pragma once

#include "cleangraph/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cleangraph {

enum class GraphFormat { Graph6, EdgeList };

struct GraphDocument {
    Graph graph;
    GraphFormat format = GraphFormat::Graph6;
    // External name of each vertex; bijection onto 0..n-1 when present.
    // The built-in formats number vertices directly and leave this empty.
    std::optional<std::vector<std::string>> labels;
};

enum class ParseErrorKind {
    MalformedHeader,
    OutOfRangeByte,
    TruncatedBits,
    TrailingBytes,
    NonzeroPadding,
    BadToken,
    SelfLoop,
    VertexOutOfRange,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
        : std::runtime_error(message), kind_(kind), position_(position) {}

    ParseErrorKind kind() const { return kind_; }
    // Byte offset for graph6, 1-based line number for edge lists.
    std::size_t position() const { return position_; }

private:
    ParseErrorKind kind_;
    std::size_t position_;
};

// One line of standard graph6: optional ">>graph6<<" prefix, the vertex
// count, then the upper triangle column by column, six bits per byte.
GraphDocument parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Lines of "u v" pairs; '#' starts a comment; an optional first line
// "n <count>" declares the vertex count (needed for isolated vertices).
// Without it the count is one past the largest endpoint.
GraphDocument parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

GraphDocument parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

}  // namespace cleangraph
