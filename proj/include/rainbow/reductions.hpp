#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

// A subset strong rainbow vertex coloring instance: a corona of a complete
// graph with K_1 (originals 0..b-1 form the clique, pendant of i is b+i),
// a set of pendant pairs, and a color budget.
struct SsrvcInstance {
    Graph graph;
    PairSet pairs;
    int k = 0;
};

// Throws input_error unless g has the corona layout above with base >= min_base.
void validate_corona_of_complete(const Graph& g, int min_base = 1);

enum class VertexRole { Original, Pendant, XPendant, XPath1, XPath2, SourceS, SinkT };

std::string to_string(VertexRole r);

struct RoleEntry {
    VertexRole role = VertexRole::Original;
    std::vector<int> origin;  // source-instance vertex ids this vertex derives from
};

// k-vertex-coloring -> k-SSRVC: clique on the original vertices, one pendant
// each, and a pendant pair per source edge. A proper coloring moves forward by
// copying each vertex's color to its pendant; the backward direction reads the
// original (non-pendant) vertices.
struct ColoringToSsrvc {
    Graph source;
    int k = 0;
    SsrvcInstance instance;
    std::vector<RoleEntry> roles;  // per instance-graph vertex

    VertexColoring forward(const VertexColoring& proper) const;
    VertexColoring backward(const VertexColoring& target) const;
};

ColoringToSsrvc reduce_coloring_to_ssrvc(const Graph& g, int k);

// k-SSRVC -> diameter-3 k-SRVC. Output layout: the instance's vertices keep
// their ids, then one x_v per pendant v (in increasing v), then x1/x2 blocks
// in lexicographic pendant-pair order, then s, then t.
struct SsrvcToSrvc {
    SsrvcInstance source;
    Graph graph;
    int k = 0;
    std::vector<RoleEntry> roles;  // per output vertex

    VertexColoring forward(const VertexColoring& subset_witness) const;
    VertexColoring backward(const VertexColoring& target) const;
};

SsrvcToSrvc reduce_ssrvc_to_srvc(const SsrvcInstance& inst);

struct EquivalenceReport {
    bool source_yes = false;
    bool target_yes = false;
    bool witnesses_cross_checked = false;
    std::uint64_t nodes_expanded = 0;
};

// Runs the exact oracles on both sides, requires equal answers, and on yes
// cross-validates the translated witnesses. Inconsistency is a hard failure
// (invariant_violation) carrying both witnesses.
EquivalenceReport check_equivalence(const ColoringToSsrvc& art, const SolveLimits& limits = {});
EquivalenceReport check_equivalence(const SsrvcToSrvc& art, const SolveLimits& limits = {});

}  // namespace rainbow
