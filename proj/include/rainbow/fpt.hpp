#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

// beta(p) = 2p - 2 + p * (p^2 + 2p * 2^p); the bridge-count threshold above
// which rc equals the bridge count. Overflow-checked.
std::int64_t beta_threshold(int p);

// z' = p^2 + 2p * 2^p; pendants required at the hub vertex.
std::int64_t pendant_hub_requirement(int p);

// Rainbow vertex coloring with at most 2|x| colors: unique colors on the
// non-leaf vertices of a minimum-diameter spanning tree, color 1 elsewhere.
// Verified before returning.
VertexColoring rvc_coloring_2p(const Graph& g, const VertexSet& x);

// Strong rainbow vertex coloring with at most |x|^2 colors: unique colors on
// x plus one chosen common neighbor per cover pair, color 1 elsewhere.
VertexColoring srvc_coloring_p2(const Graph& g, const VertexSet& x);

// The exact z-coloring available when z = |bridges| >= beta(|x|): separators
// get colors 1..z (hub pendant edges first), non-separator cover edges and
// type subgraphs reuse colors from the hub block. Verified; uses exactly z.
EdgeColoring rc_exact_above_threshold(const Graph& g, const VertexSet& x);

// Rainbow edge coloring within z + p^2 + 2^p * 2p colors for the z < beta(p)
// regime: unique colors on cover and pendant edges, a designated vertex per
// type with unique colors, one fresh color per (type, cover vertex) star.
EdgeColoring rc_bounded_coloring(const Graph& g, const VertexSet& x);

enum class WinWinBranch { StructuralYes, ThresholdExact, BoundedFallback };

std::string to_string(WinWinBranch b);

struct WinWinOutcome {
    WinWinBranch branch = WinWinBranch::BoundedFallback;
    bool yes = false;
    std::optional<EdgeColoring> edge_witness;
    std::optional<VertexColoring> vertex_witness;
    std::uint64_t solver_nodes = 0;
};

// Vertex-cover win-win dispatch for RC, RVC, SRVC: answer structurally when
// the cover bounds decide, otherwise fall back to the exact solver.
WinWinOutcome decide_vc(const Graph& g, Variant variant, int k, const SolveLimits& limits = {});

// Is rc(g) <= |E| - k? Immediate yes with a spanning-tree witness when
// m >= n + k, else exact.
WinWinOutcome saving_rc(const Graph& g, int k, const SolveLimits& limits = {});

// Is rvc(g) <= |V| - k? Immediate yes when a spanning tree with >= k+1 leaves
// is found (leaves share color 1, internals unique), else exact.
WinWinOutcome saving_rvc(const Graph& g, int k, const SolveLimits& limits = {});

}  // namespace rainbow
