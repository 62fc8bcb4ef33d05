#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class Engine {
    Auto,      // subset DP when the mask fits, else budgeted path enumeration
    SubsetDp,  // raise capacity_error when the color count exceeds the mask
    PathEnum,  // bounded simple/shortest path enumeration
};

struct VerifyOptions {
    Engine engine = Engine::Auto;
    int max_mask_colors = 20;
    std::uint64_t path_budget = 50'000'000;  // DFS expansions across all sources
    bool parallel = true;                    // per-source DP runs under OpenMP
};

struct VerifyResult {
    bool ok = false;
    // Lexicographically first failing pair (u < v) when !ok.
    std::optional<std::pair<int, int>> failing_pair;

    explicit operator bool() const { return ok; }
};

// True iff every vertex pair is joined by a path with pairwise distinct edge
// colors. Requires connected g.
VerifyResult is_rainbow_edge(const Graph& g, const EdgeColoring& col, const VerifyOptions& opts = {});

// True iff every pair has a rainbow shortest path.
VerifyResult is_strong_rainbow_edge(const Graph& g, const EdgeColoring& col, const VerifyOptions& opts = {});

// True iff every pair is joined by a path whose internal vertices carry
// pairwise distinct colors (endpoint colors ignored).
VerifyResult is_rainbow_vertex(const Graph& g, const VertexColoring& col, const VerifyOptions& opts = {});

// True iff every pair has a shortest path with pairwise distinct internal
// vertex colors.
VerifyResult is_strong_rainbow_vertex(const Graph& g, const VertexColoring& col, const VerifyOptions& opts = {});

// The strong rainbow vertex check restricted to the pairs in p.
VerifyResult is_subset_srvc(const Graph& g, const VertexColoring& col, const PairSet& p,
                            const VerifyOptions& opts = {});

}  // namespace rainbow
