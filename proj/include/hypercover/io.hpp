#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypercover/three_graph.hpp"

namespace hypercover {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

struct GraphFile {
    ThreeGraph graph;
    std::vector<std::string> comments;  // comment lines without the leading "c "
    std::optional<int> apex;            // from a "c apex <v>" comment
    std::optional<VertexSet> side_a;    // from a "c side-A <v...>" comment
    std::optional<int> root;            // pattern files: "r <root>"
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_file(const std::string& path);

// Emits the canonical text form: "p h3 n m", edges sorted by colex rank.
std::string format_graph(const ThreeGraph& g,
                         const std::vector<std::string>& comments = {});

}  // namespace hypercover
