#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

// Serial reference implementations kept for testing: straight enumeration of
// simple paths, shortest paths, edge subsets and colorings. Deliberately
// independent of the DP/search code paths they are used to check; linked only
// by the tests and the benchmark.
namespace rainbow::reference {

VerifyResult rainbow_edge(const Graph& g, const EdgeColoring& col);
VerifyResult strong_rainbow_edge(const Graph& g, const EdgeColoring& col);
VerifyResult rainbow_vertex(const Graph& g, const VertexColoring& col);
VerifyResult strong_rainbow_vertex(const Graph& g, const VertexColoring& col);
VerifyResult subset_srvc(const Graph& g, const VertexColoring& col, const PairSet& p);

EdgeSet bridges_by_removal(const Graph& g);
VertexSet min_cover_by_enumeration(const Graph& g);  // 2^n scan, n <= ~20
int min_spanning_tree_diameter(const Graph& g);
bool spanning_tree_with_leaves_exists(const Graph& g, int min_leaves);
int max_spanning_tree_leaves(const Graph& g);

// Unrestricted enumeration over all k^items colorings, checked with the
// naive verifiers above.
bool decide_rc(const Graph& g, int k);
bool decide_src(const Graph& g, int k);
bool decide_rvc(const Graph& g, int k);
bool decide_srvc(const Graph& g, int k);
bool decide_ssrvc(const Graph& g, int k, const PairSet& p);
bool chromatic_decide(const Graph& g, int k);

}  // namespace rainbow::reference
