#include "rainbow/reductions.hpp"

#include <algorithm>
#include <sstream>

namespace rainbow {

std::string to_string(VertexRole r) {
    switch (r) {
        case VertexRole::Original: return "original";
        case VertexRole::Pendant: return "pendant";
        case VertexRole::XPendant: return "x";
        case VertexRole::XPath1: return "x1";
        case VertexRole::XPath2: return "x2";
        case VertexRole::SourceS: return "s";
        case VertexRole::SinkT: return "t";
    }
    return "?";
}

void validate_corona_of_complete(const Graph& g, int min_base) {
    int n = g.vertex_count();
    if (n % 2 != 0 || n / 2 < min_base)
        throw input_error("expected a corona of a complete graph with K_1");
    int b = n / 2;
    long expected_edges = static_cast<long>(b) * (b - 1) / 2 + b;
    if (g.edge_count() != expected_edges)
        throw input_error("expected a corona of a complete graph with K_1 (edge count mismatch)");
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j)
            if (!g.has_edge(i, j)) throw input_error("corona check: originals do not form a clique");
    for (int i = 0; i < b; ++i) {
        if (g.degree(b + i) != 1 || !g.has_edge(i, b + i))
            throw input_error("corona check: vertex " + std::to_string(b + i) + " is not the pendant of " +
                              std::to_string(i));
    }
}

ColoringToSsrvc reduce_coloring_to_ssrvc(const Graph& g, int k) {
    if (k < 3) throw input_error("reduce_coloring_to_ssrvc: requires k >= 3");
    int n = g.vertex_count();
    if (n < 1) throw input_error("reduce_coloring_to_ssrvc: empty source graph");

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);

    std::vector<std::pair<int, int>> raw_pairs;
    for (const Edge& e : g.edges()) raw_pairs.emplace_back(n + e.u, n + e.v);

    ColoringToSsrvc art;
    art.source = g;
    art.k = k;
    art.instance = SsrvcInstance{Graph(2 * n, std::move(edges)), PairSet::of(std::move(raw_pairs), 2 * n), k};
    art.roles.resize(2 * n);
    for (int v = 0; v < n; ++v) {
        art.roles[v] = {VertexRole::Original, {v}};
        art.roles[n + v] = {VertexRole::Pendant, {v}};
    }
    return art;
}

VertexColoring ColoringToSsrvc::forward(const VertexColoring& proper) const {
    validate(proper, source);
    int n = source.vertex_count();
    VertexColoring out{std::max(proper.count, 1), std::vector<int>(2 * n, 1)};
    for (int v = 0; v < n; ++v) {
        int c = std::max(proper.color[v], 1);
        out.color[v] = c;
        out.color[n + v] = c;
    }
    return out;
}

VertexColoring ColoringToSsrvc::backward(const VertexColoring& target) const {
    validate(target, instance.graph);
    int n = source.vertex_count();
    VertexColoring out{std::max(target.count, 1), std::vector<int>(n, 1)};
    for (int v = 0; v < n; ++v) out.color[v] = std::max(target.color[v], 1);
    return out;
}

SsrvcToSrvc reduce_ssrvc_to_srvc(const SsrvcInstance& inst) {
    if (inst.k < 3) throw input_error("reduce_ssrvc_to_srvc: requires k >= 3");
    validate_corona_of_complete(inst.graph, 2);
    validate(inst.pairs, inst.graph);

    int b = inst.graph.vertex_count() / 2;
    int nv = 2 * b;  // |V| of the instance
    for (auto [u, v] : inst.pairs.pairs)
        if (u < b || v < b) throw input_error("reduce_ssrvc_to_srvc: pairs must consist of pendants");

    // Pendant pairs not in P, lexicographic.
    std::vector<std::pair<int, int>> non_pairs;
    for (int u = b; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            if (!std::binary_search(inst.pairs.pairs.begin(), inst.pairs.pairs.end(), std::make_pair(u, v)))
                non_pairs.emplace_back(u, v);

    int np = static_cast<int>(non_pairs.size());
    int x_base = nv;            // x_v for pendant b+i sits at nv + i
    int path_base = nv + b;     // x1/x2 blocks, two per non-pair
    int s_id = path_base + 2 * np;
    int t_id = s_id + 1;
    int total = t_id + 1;

    auto hub = [b](int pendant) { return pendant - b; };  // k_v in the corona layout
    auto x_of = [&](int pendant) { return x_base + (pendant - b); };

    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : inst.graph.edges()) edges.emplace_back(e.u, e.v);
    for (int v = b; v < nv; ++v) {  // E1
        edges.emplace_back(v, x_of(v));
        edges.emplace_back(s_id, x_of(v));
        edges.emplace_back(t_id, x_of(v));
    }
    for (int j = 0; j < np; ++j) {  // E2 and E3
        auto [u, v] = non_pairs[j];
        int x1 = path_base + 2 * j;
        int x2 = x1 + 1;
        edges.emplace_back(u, x1);
        edges.emplace_back(x1, x2);
        edges.emplace_back(x2, v);
        edges.emplace_back(s_id, x1);
        edges.emplace_back(t_id, x2);
        edges.emplace_back(hub(u), x1);
        edges.emplace_back(hub(v), x2);
    }
    for (int y = 0; y < b; ++y) {  // E4: originals are exactly V \ V1
        edges.emplace_back(s_id, y);
        edges.emplace_back(t_id, y);
    }

    SsrvcToSrvc art;
    art.source = inst;
    art.k = inst.k;
    art.graph = Graph(total, std::move(edges));

    art.roles.resize(total);
    for (int v = 0; v < b; ++v) art.roles[v] = {VertexRole::Original, {v}};
    for (int v = b; v < nv; ++v) art.roles[v] = {VertexRole::Pendant, {v}};
    for (int v = b; v < nv; ++v) art.roles[x_of(v)] = {VertexRole::XPendant, {v}};
    for (int j = 0; j < np; ++j) {
        auto [u, v] = non_pairs[j];
        art.roles[path_base + 2 * j] = {VertexRole::XPath1, {u, v}};
        art.roles[path_base + 2 * j + 1] = {VertexRole::XPath2, {u, v}};
    }
    art.roles[s_id] = {VertexRole::SourceS, {}};
    art.roles[t_id] = {VertexRole::SinkT, {}};

    // |V'| = |V| + |V1| + 2*(C(|V1|,2) - |P|) + 2, recomputed from the role table.
    int n_orig = 0, n_pend = 0, n_x = 0, n_x1 = 0, n_x2 = 0, n_st = 0;
    for (const RoleEntry& r : art.roles) {
        switch (r.role) {
            case VertexRole::Original: ++n_orig; break;
            case VertexRole::Pendant: ++n_pend; break;
            case VertexRole::XPendant: ++n_x; break;
            case VertexRole::XPath1: ++n_x1; break;
            case VertexRole::XPath2: ++n_x2; break;
            default: ++n_st; break;
        }
    }
    int p_size = static_cast<int>(inst.pairs.pairs.size());
    int formula = (n_orig + n_pend) + n_pend + 2 * (n_pend * (n_pend - 1) / 2 - p_size) + 2;
    bool shape_ok = n_x == n_pend && n_x1 == n_x2 && n_x1 == n_pend * (n_pend - 1) / 2 - p_size && n_st == 2;
    if (!shape_ok || formula != art.graph.vertex_count())
        throw invariant_violation("reduce_ssrvc_to_srvc: vertex count formula mismatch");

    if (diameter(art.graph) != 3)
        throw invariant_violation("reduce_ssrvc_to_srvc: output diameter is not 3");
    return art;
}

VertexColoring SsrvcToSrvc::forward(const VertexColoring& subset_witness) const {
    validate(subset_witness, source.graph);
    int nv = source.graph.vertex_count();
    VertexColoring out{std::max(subset_witness.count, 2), std::vector<int>(graph.vertex_count(), 1)};
    for (int v = 0; v < nv; ++v) out.color[v] = std::max(subset_witness.color[v], 1);
    for (int v = nv; v < graph.vertex_count(); ++v) {
        switch (roles[v].role) {
            case VertexRole::XPendant:
            case VertexRole::XPath1: out.color[v] = 1; break;
            case VertexRole::XPath2:
            case VertexRole::SourceS:
            case VertexRole::SinkT: out.color[v] = 2; break;
            default: throw invariant_violation("forward: unexpected role in gadget block");
        }
    }
    return out;
}

VertexColoring SsrvcToSrvc::backward(const VertexColoring& target) const {
    validate(target, graph);
    int nv = source.graph.vertex_count();
    VertexColoring out{std::max(target.count, 1), std::vector<int>(nv, 1)};
    for (int v = 0; v < nv; ++v) out.color[v] = std::max(target.color[v], 1);
    return out;
}

namespace {

std::string dump_coloring(const std::vector<int>& colors) {
    std::ostringstream os;
    for (std::size_t i = 0; i < colors.size(); ++i) os << (i ? " " : "") << colors[i];
    return os.str();
}

[[noreturn]] void equivalence_failure(const char* which, const std::string& detail) {
    throw invariant_violation(std::string("check_equivalence(") + which + "): " + detail);
}

}  // namespace

EquivalenceReport check_equivalence(const ColoringToSsrvc& art, const SolveLimits& limits) {
    EquivalenceReport rep;
    ChromaticReport src = chromatic_decide(art.source, art.k, limits);
    SolveReport dst = decide(art.instance.graph, Variant::SSRVC, art.k, limits, &art.instance.pairs);
    rep.source_yes = src.yes;
    rep.target_yes = dst.yes;
    rep.nodes_expanded = src.nodes_expanded + dst.nodes_expanded;
    if (src.yes != dst.yes)
        equivalence_failure("lemma1", "answers differ: chromatic=" + std::to_string(src.yes) +
                                          " ssrvc=" + std::to_string(dst.yes));
    if (src.yes) {
        VertexColoring fwd = art.forward(*src.witness);
        if (!is_subset_srvc(art.instance.graph, fwd, art.instance.pairs).ok)
            equivalence_failure("lemma1", "forward witness rejected; source=" + dump_coloring(src.witness->color) +
                                              " forward=" + dump_coloring(fwd.color));
        VertexColoring back = art.backward(*dst.vertex_witness);
        for (const Edge& e : art.source.edges())
            if (back.color[e.u] == back.color[e.v])
                equivalence_failure("lemma1", "backward witness not proper; target=" +
                                                  dump_coloring(dst.vertex_witness->color) +
                                                  " backward=" + dump_coloring(back.color));
        rep.witnesses_cross_checked = true;
    }
    return rep;
}

EquivalenceReport check_equivalence(const SsrvcToSrvc& art, const SolveLimits& limits) {
    EquivalenceReport rep;
    SolveReport src = decide(art.source.graph, Variant::SSRVC, art.k, limits, &art.source.pairs);
    SolveReport dst = decide(art.graph, Variant::SRVC, art.k, limits);
    rep.source_yes = src.yes;
    rep.target_yes = dst.yes;
    rep.nodes_expanded = src.nodes_expanded + dst.nodes_expanded;
    if (src.yes != dst.yes)
        equivalence_failure("theorem1", "answers differ: ssrvc=" + std::to_string(src.yes) +
                                            " srvc=" + std::to_string(dst.yes));
    if (src.yes) {
        VertexColoring fwd = art.forward(*src.vertex_witness);
        if (!is_strong_rainbow_vertex(art.graph, fwd).ok)
            equivalence_failure("theorem1", "forward witness rejected; source=" +
                                                dump_coloring(src.vertex_witness->color) +
                                                " forward=" + dump_coloring(fwd.color));
        VertexColoring back = art.backward(*dst.vertex_witness);
        if (!is_subset_srvc(art.source.graph, back, art.source.pairs).ok)
            equivalence_failure("theorem1", "backward witness rejected; target=" +
                                                dump_coloring(dst.vertex_witness->color) +
                                                " backward=" + dump_coloring(back.color));
        rep.witnesses_cross_checked = true;
    }
    return rep;
}

}  // namespace rainbow
