#include "hypercover/io.hpp"

#include <fstream>
#include <sstream>

namespace hypercover {

GraphFile parse_graph(std::istream& in) {
    GraphFile out;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0, seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") {
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
            out.comments.push_back(rest);
            std::istringstream cs(rest);
            std::string kind;
            cs >> kind;
            if (kind == "apex") {
                int v;
                if (cs >> v) out.apex = v;
            } else if (kind == "side-A") {
                VertexSet s = 0;
                int v;
                while (cs >> v) s |= VertexSet{1} << v;
                out.side_a = s;
            }
        } else if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "h3")
                throw ParseError(lineno, "expected 'p h3 <n> <m>'");
            if (n < 0 || n > kMaxVertices)
                throw ParseError(lineno, "vertex count out of range [0,16]");
            out.graph = ThreeGraph(n);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge before header");
            int a, b, c;
            if (!(ls >> a >> b >> c)) throw ParseError(lineno, "expected 'e <a> <b> <c>'");
            if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
                throw ParseError(lineno, "vertex out of range");
            if (a == b || b == c || a == c)
                throw ParseError(lineno, "vertices of an edge must be distinct");
            if (out.graph.has_edge(a, b, c))
                throw ParseError(lineno, "duplicate edge");
            out.graph.add_edge(a, b, c);
            ++seen;
        } else if (tag == "r") {
            int r;
            if (!(ls >> r)) throw ParseError(lineno, "expected 'r <root>'");
            out.root = r;
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing 'p h3' header");
    if (seen != m)
        throw ParseError(lineno, "edge count mismatch: header says " +
                                     std::to_string(m) + ", found " +
                                     std::to_string(seen));
    return out;
}

GraphFile parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

std::string format_graph(const ThreeGraph& g,
                         const std::vector<std::string>& comments) {
    std::ostringstream os;
    for (const auto& c : comments) os << "c " << c << "\n";
    os << "p h3 " << g.n() << " " << g.edge_count() << "\n";
    for (const auto& e : g.edges())
        os << "e " << e.a << " " << e.b << " " << e.c << "\n";
    return os.str();
}

}  // namespace hypercover
