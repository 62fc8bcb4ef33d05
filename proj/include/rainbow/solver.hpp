#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

enum class Variant { RC, SRC, RVC, SRVC, SSRVC };

std::string to_string(Variant v);
std::optional<Variant> variant_from_string(const std::string& s);

struct SolveLimits {
    std::uint64_t node_budget = 100'000'000;
};

enum class SolveMode { Decide, Optimize };

struct SolveReport {
    Variant variant = Variant::RC;
    SolveMode mode = SolveMode::Decide;
    int k = -1;       // queried bound (decide mode)
    bool yes = false; // decide answer; always true in optimize mode
    int optimum = -1; // optimize mode
    std::optional<EdgeColoring> edge_witness;
    std::optional<VertexColoring> vertex_witness;
    std::uint64_t nodes_expanded = 0;

    int witness_colors() const {
        if (edge_witness) return edge_witness->count;
        if (vertex_witness) return vertex_witness->count;
        return -1;
    }
};

// Exact decision "number(g) <= k" with a verifier-checked witness on yes.
// Enumerates colorings in canonical order (a new color must take the smallest
// unused index), pruning prefixes whose optimistic completion already fails
// the verifier. Throws budget_exceeded rather than guessing.
// pairs is required for SSRVC and must be null otherwise.
SolveReport decide(const Graph& g, Variant variant, int k, const SolveLimits& limits = {},
                   const PairSet* pairs = nullptr);

// Smallest k with decide(...) yes, by ascending search from the variant's
// lower bound. lower_bound_hint can raise the starting point when the caller
// knows a valid bound (e.g. rc(g) when optimizing SRC).
SolveReport optimize(const Graph& g, Variant variant, const SolveLimits& limits = {},
                     const PairSet* pairs = nullptr, int lower_bound_hint = 0);

struct ChromaticReport {
    bool yes = false;
    std::optional<VertexColoring> witness;
    std::uint64_t nodes_expanded = 0;
};

// Exact proper-coloring decision, same canonical backtracking.
ChromaticReport chromatic_decide(const Graph& g, int k, const SolveLimits& limits = {});

}  // namespace rainbow
