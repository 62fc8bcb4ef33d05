#pragma once

#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Total map edge id -> color in [1, count]. count == 0 is the degenerate
// "no colors" certificate (only legal when it verifies without ever reading
// a color, e.g. the single-vertex graph); its entries are all 0.
struct EdgeColoring {
    int count = 0;
    std::vector<int> color;  // indexed by edge id

    bool injective() const;
};

// Total map vertex id -> color in [1, count]; count == 0 as above (accepted
// exactly by graphs whose pairs never need an internal vertex).
struct VertexColoring {
    int count = 0;
    std::vector<int> color;  // indexed by vertex id

    bool injective() const;
};

// Set of unordered pairs of distinct vertices, normalized u < v and sorted.
struct PairSet {
    std::vector<std::pair<int, int>> pairs;

    static PairSet of(std::vector<std::pair<int, int>> raw, int vertex_count);
    bool empty() const { return pairs.empty(); }
};

void validate(const EdgeColoring& c, const Graph& g);
void validate(const VertexColoring& c, const Graph& g);
void validate(const PairSet& p, const Graph& g);

EdgeColoring all_distinct_edge_coloring(const Graph& g);
VertexColoring all_distinct_vertex_coloring(const Graph& g);

}  // namespace rainbow
