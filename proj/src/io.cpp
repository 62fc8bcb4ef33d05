#include "rainbow/io.hpp"

#include <fstream>
#include <sstream>

namespace rainbow {

namespace {

// Strips comments and blank lines, yielding content lines.
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        out.push_back(line.substr(start));
    }
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw input_error("cannot write " + path);
    return f;
}

}  // namespace

Graph read_graph(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw input_error("graph file: empty input");

    int n = 0, m = 0;
    std::size_t at = 0;
    bool dimacs = lines[0][0] == 'p';
    {
        std::istringstream head(lines[0]);
        if (dimacs) {
            std::string p, kind;
            head >> p >> kind >> n >> m;
            if (!head || kind != "edge") throw input_error("graph file: bad DIMACS header");
        } else {
            head >> n >> m;
            if (!head) throw input_error("graph file: bad header line");
        }
        ++at;
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i, ++at) {
        if (at >= lines.size()) throw input_error("graph file: fewer edge lines than declared");
        std::istringstream ls(lines[at]);
        int u, v;
        if (dimacs) {
            std::string e;
            ls >> e >> u >> v;
            if (!ls || e != "e") throw input_error("graph file: bad DIMACS edge line");
            --u, --v;
        } else {
            ls >> u >> v;
            if (!ls) throw input_error("graph file: bad edge line");
        }
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    auto f = open_in(path);
    return read_graph(f);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

void write_graph_file(const std::string& path, const Graph& g) {
    auto f = open_out(path);
    write_graph(f, g);
}

namespace {

std::pair<int, std::vector<int>> read_coloring_lines(std::istream& in, int items, const char* kind) {
    auto lines = content_lines(in);
    if (lines.empty()) throw input_error("coloring file: empty input");
    std::istringstream head(lines[0]);
    std::string c, declared_kind;
    int count;
    head >> c >> count >> declared_kind;
    if (!head || c != "c") throw input_error("coloring file: bad header");
    if (declared_kind != kind)
        throw input_error("coloring file: expected a " + std::string(kind) + " coloring, got " + declared_kind);

    std::vector<int> colors(items, -1);
    for (std::size_t at = 1; at < lines.size(); ++at) {
        std::istringstream ls(lines[at]);
        int id, col;
        ls >> id >> col;
        if (!ls) throw input_error("coloring file: bad line '" + lines[at] + "'");
        if (id < 0 || id >= items) throw input_error("coloring file: id out of range");
        colors[id] = col;
    }
    for (int v : colors)
        if (v < 0) throw input_error("coloring file: not a total map");
    return {count, colors};
}

}  // namespace

EdgeColoring read_edge_coloring(std::istream& in, const Graph& g) {
    auto [count, colors] = read_coloring_lines(in, g.edge_count(), "edge");
    EdgeColoring col{count, std::move(colors)};
    validate(col, g);
    return col;
}

VertexColoring read_vertex_coloring(std::istream& in, const Graph& g) {
    auto [count, colors] = read_coloring_lines(in, g.vertex_count(), "vertex");
    VertexColoring col{count, std::move(colors)};
    validate(col, g);
    return col;
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
    out << "c " << c.count << " edge\n";
    for (std::size_t i = 0; i < c.color.size(); ++i) out << i << " " << c.color[i] << "\n";
}

void write_coloring(std::ostream& out, const VertexColoring& c) {
    out << "c " << c.count << " vertex\n";
    for (std::size_t i = 0; i < c.color.size(); ++i) out << i << " " << c.color[i] << "\n";
}

void write_coloring_file(const std::string& path, const EdgeColoring& c) {
    auto f = open_out(path);
    write_coloring(f, c);
}

void write_coloring_file(const std::string& path, const VertexColoring& c) {
    auto f = open_out(path);
    write_coloring(f, c);
}

PairSet read_pairs(std::istream& in, const Graph& g) {
    std::vector<std::pair<int, int>> raw;
    for (const std::string& line : content_lines(in)) {
        std::istringstream ls(line);
        int u, v;
        ls >> u >> v;
        if (!ls) throw input_error("pair file: bad line '" + line + "'");
        raw.emplace_back(u, v);
    }
    return PairSet::of(std::move(raw), g.vertex_count());
}

PairSet read_pairs_file(const std::string& path, const Graph& g) {
    auto f = open_in(path);
    return read_pairs(f, g);
}

void write_pairs(std::ostream& out, const PairSet& p) {
    for (auto [u, v] : p.pairs) out << u << " " << v << "\n";
}

void write_pairs_file(const std::string& path, const PairSet& p) {
    auto f = open_out(path);
    write_pairs(f, p);
}

void write_roles(std::ostream& out, const std::vector<RoleEntry>& roles) {
    for (std::size_t v = 0; v < roles.size(); ++v) {
        out << v << " " << to_string(roles[v].role);
        for (int o : roles[v].origin) out << " " << o;
        out << "\n";
    }
}

void write_roles_file(const std::string& path, const std::vector<RoleEntry>& roles) {
    auto f = open_out(path);
    write_roles(f, roles);
}

void write_dot(std::ostream& out, const Graph& g, const VertexColoring* vc, const EdgeColoring* ec) {
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (vc) out << " [label=\"" << v << ":" << vc->color[v] << "\"]";
        out << ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (ec) out << " [label=\"" << ec->color[e] << "\"]";
        out << ";\n";
    }
    out << "}\n";
}

std::string fnv1a_checksum(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace rainbow
