#include "rainbow/coloring.hpp"

#include <algorithm>

namespace rainbow {

namespace {

bool injective_colors(const std::vector<int>& color) {
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

void validate_colors(const std::vector<int>& color, int count, std::size_t expected, const char* what) {
    if (color.size() != expected)
        throw input_error(std::string(what) + ": expected " + std::to_string(expected) + " entries, got " +
                          std::to_string(color.size()));
    if (count < 0) throw input_error(std::string(what) + ": negative color count");
    for (int c : color) {
        if (count == 0 ? c != 0 : (c < 1 || c > count))
            throw input_error(std::string(what) + ": color " + std::to_string(c) + " outside [1, " +
                              std::to_string(count) + "]");
    }
}

}  // namespace

bool EdgeColoring::injective() const { return injective_colors(color); }
bool VertexColoring::injective() const { return injective_colors(color); }

void validate(const EdgeColoring& c, const Graph& g) {
    validate_colors(c.color, c.count, static_cast<std::size_t>(g.edge_count()), "edge coloring");
    if (g.edge_count() >= 1 && c.count < 1) throw input_error("edge coloring: count must be >= 1 when edges exist");
}

void validate(const VertexColoring& c, const Graph& g) {
    validate_colors(c.color, c.count, static_cast<std::size_t>(g.vertex_count()), "vertex coloring");
}

void validate(const PairSet& p, const Graph& g) {
    for (auto [u, v] : p.pairs) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
            throw input_error("pair set: invalid pair " + std::to_string(u) + " " + std::to_string(v));
    }
}

PairSet PairSet::of(std::vector<std::pair<int, int>> raw, int vertex_count) {
    for (auto& [u, v] : raw) {
        if (u == v || u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw input_error("pair set: invalid pair " + std::to_string(u) + " " + std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return PairSet{std::move(raw)};
}

EdgeColoring all_distinct_edge_coloring(const Graph& g) {
    EdgeColoring c{g.edge_count(), std::vector<int>(g.edge_count())};
    for (int e = 0; e < g.edge_count(); ++e) c.color[e] = e + 1;
    return c;
}

VertexColoring all_distinct_vertex_coloring(const Graph& g) {
    VertexColoring c{g.vertex_count(), std::vector<int>(g.vertex_count())};
    for (int v = 0; v < g.vertex_count(); ++v) c.color[v] = v + 1;
    return c;
}

}  // namespace rainbow
