#include "rainbow/fpt.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

std::string to_string(WinWinBranch b) {
    switch (b) {
        case WinWinBranch::StructuralYes: return "structural-yes";
        case WinWinBranch::ThresholdExact: return "threshold-exact";
        case WinWinBranch::BoundedFallback: return "bounded-fallback";
    }
    return "?";
}

std::int64_t pendant_hub_requirement(int p) {
    if (p < 0 || p > 40) throw input_error("pendant_hub_requirement: p out of range");
    std::int64_t pw = std::int64_t{1} << p;
    return static_cast<std::int64_t>(p) * p + 2 * static_cast<std::int64_t>(p) * pw;
}

std::int64_t beta_threshold(int p) {
    if (p < 0 || p > 40) throw input_error("beta_threshold: p out of range (overflow)");
    return 2 * static_cast<std::int64_t>(p) - 2 + static_cast<std::int64_t>(p) * pendant_hub_requirement(p);
}

namespace {

void require_cover(const Graph& g, const VertexSet& x, const char* op) {
    if (!g.is_connected()) throw input_error(std::string(op) + ": graph is not connected");
    if (!is_vertex_cover(g, x)) throw input_error(std::string(op) + ": x is not a vertex cover");
}

VertexColoring unique_on_set(const Graph& g, const std::vector<int>& special) {
    // Unique colors 1..|special| on the listed vertices, color 1 elsewhere;
    // empty set degenerates to the zero-color certificate.
    int n = g.vertex_count();
    if (special.empty()) return VertexColoring{0, std::vector<int>(n, 0)};
    VertexColoring col{static_cast<int>(special.size()), std::vector<int>(n, 1)};
    int next = 1;
    for (int v : special) col.color[v] = next++;
    return col;
}

}  // namespace

VertexColoring rvc_coloring_2p(const Graph& g, const VertexSet& x) {
    require_cover(g, x, "rvc_coloring_2p");
    int p = x.count();

    Graph tree = spanning_tree_min_diameter(g);
    if (diameter(tree) > 2 * p)
        throw invariant_violation("rvc_coloring_2p: spanning tree diameter exceeds 2p");

    std::vector<int> non_leaves;
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (tree.degree(v) >= 2) non_leaves.push_back(v);

    int outside = 0;
    for (int v : non_leaves)
        if (!x.contains(v)) ++outside;
    if (outside > p || static_cast<int>(non_leaves.size()) > 2 * p)
        throw invariant_violation("rvc_coloring_2p: non-leaf set exceeds the 2p bound");

    VertexColoring col = unique_on_set(g, non_leaves);
    if (!is_rainbow_vertex(g, col).ok)
        throw invariant_violation("rvc_coloring_2p: coloring failed verification");
    return col;
}

VertexColoring srvc_coloring_p2(const Graph& g, const VertexSet& x) {
    require_cover(g, x, "srvc_coloring_p2");
    int p = x.count();
    std::vector<int> cover = x.to_vector();

    std::vector<char> in_z(g.vertex_count(), 0);
    for (int v : cover) in_z[v] = 1;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        for (std::size_t j = i + 1; j < cover.size(); ++j) {
            for (const HalfEdge& h : g.incident(cover[i])) {
                if (!x.contains(h.to) && g.has_edge(h.to, cover[j])) {
                    in_z[h.to] = 1;  // smallest common neighbor: incident() is id-sorted
                    break;
                }
            }
        }
    }
    std::vector<int> z;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_z[v]) z.push_back(v);
    if (static_cast<int>(z.size()) > p * p)
        throw invariant_violation("srvc_coloring_p2: |Q ∪ X| exceeds p^2");

    VertexColoring col = unique_on_set(g, z);
    if (!is_strong_rainbow_vertex(g, col).ok)
        throw invariant_violation("srvc_coloring_p2: coloring failed verification");
    return col;
}

EdgeColoring rc_exact_above_threshold(const Graph& g, const VertexSet& x) {
    require_cover(g, x, "rc_exact_above_threshold");
    int p = x.count();
    EdgeSet seps = bridges(g);
    int z = seps.count();
    if (z < beta_threshold(p))
        throw input_error("rc_exact_above_threshold: z < beta(p); use rc_bounded_coloring instead");

    std::int64_t zp = pendant_hub_requirement(p);

    // Hub: the cover vertex with the most pendant neighbors, ties by lowest id.
    int hub = -1, hub_pendants = -1;
    for (int v : x.to_vector()) {
        int cnt = 0;
        for (const HalfEdge& h : g.incident(v))
            if (g.is_pendant(h.to)) ++cnt;
        if (cnt > hub_pendants) hub = v, hub_pendants = cnt;
    }
    if (hub < 0 || hub_pendants < zp)
        throw invariant_violation(
            "rc_exact_above_threshold: no cover vertex with z' pendants; the construction needs one "
            "(the source text's leaf-count constant differs from beta's pendant term)");

    std::vector<int> color(g.edge_count(), 0);

    // Separators: hub pendant edges first (by pendant id), then the rest by id.
    std::vector<int> sep_order;
    for (const HalfEdge& h : g.incident(hub))
        if (g.is_pendant(h.to) && seps.contains(h.edge)) sep_order.push_back(h.edge);
    int hub_edges = static_cast<int>(sep_order.size());
    seps.for_each([&](int e) {
        if (std::find(sep_order.begin(), sep_order.begin() + hub_edges, e) == sep_order.begin() + hub_edges)
            sep_order.push_back(e);
    });
    for (int i = 0; i < z; ++i) color[sep_order[i]] = i + 1;

    // Non-separator edges inside the cover: alpha(f_i) = z' - i.
    int f_index = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (x.contains(ed.u) && x.contains(ed.v) && !seps.contains(e)) {
            ++f_index;
            std::int64_t c = zp - f_index;
            if (c <= 2 * static_cast<std::int64_t>(p) * (std::int64_t{1} << p))
                throw invariant_violation("rc_exact_above_threshold: f-edge color fell into the type block");
            color[e] = static_cast<int>(c);
        }
    }

    // Types with more than one cover neighbor get the 2p-color block scheme;
    // separator edges inside a type keep their separator colors.
    std::vector<TypeClass> types = neighborhood_types(g, x);
    int block = 0;
    for (const TypeClass& t : types) {
        if (t.neighborhood.count() <= 1) continue;
        ++block;
        std::int64_t base = 2 * static_cast<std::int64_t>(p) * block;
        if (base + 2 * p > 2 * static_cast<std::int64_t>(p) * (std::int64_t{1} << p))
            throw invariant_violation("rc_exact_above_threshold: type block collides with the f-edge colors");
        std::vector<int> members = t.members.to_vector();
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
            int offset = mi == 0 ? 0 : p;  // first member uses c_1..c_p, the rest share c_{p+1}..c_{2p}
            int slot = 0;
            for (const HalfEdge& h : g.incident(members[mi])) {
                ++slot;
                if (slot > p) throw invariant_violation("rc_exact_above_threshold: type member degree exceeds p");
                if (seps.contains(h.edge)) continue;
                color[h.edge] = static_cast<int>(base + offset + slot);
            }
        }
    }

    for (int e = 0; e < g.edge_count(); ++e)
        if (color[e] == 0) throw invariant_violation("rc_exact_above_threshold: uncolored edge");

    std::vector<char> used(z + 1, 0);
    for (int c : color) {
        if (c < 1 || c > z) throw invariant_violation("rc_exact_above_threshold: color outside [1, z]");
        used[c] = 1;
    }
    if (std::count(used.begin() + 1, used.end(), 1) != z)
        throw invariant_violation("rc_exact_above_threshold: does not use exactly z colors");

    EdgeColoring col{z, std::move(color)};
    if (!is_rainbow_edge(g, col).ok)
        throw invariant_violation("rc_exact_above_threshold: coloring failed verification");
    return col;
}

EdgeColoring rc_bounded_coloring(const Graph& g, const VertexSet& x) {
    require_cover(g, x, "rc_bounded_coloring");
    int p = x.count();
    if (g.edge_count() == 0) return EdgeColoring{0, {}};

    std::vector<int> color(g.edge_count(), 0);
    int next = 0;

    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        bool cover_edge = x.contains(ed.u) && x.contains(ed.v);
        bool pendant_edge = g.is_pendant(ed.u) || g.is_pendant(ed.v);
        if (cover_edge || pendant_edge) color[e] = ++next;
    }

    for (const TypeClass& t : neighborhood_types(g, x)) {
        std::vector<int> members = t.members.to_vector();
        int designated = members.front();
        for (const HalfEdge& h : g.incident(designated))
            if (color[h.edge] == 0) color[h.edge] = ++next;
        t.neighborhood.for_each([&](int a) {
            int star_color = 0;
            for (const HalfEdge& h : g.incident(a)) {
                if (!t.members.contains(h.to) || color[h.edge] != 0) continue;
                if (star_color == 0) star_color = ++next;
                color[h.edge] = star_color;
            }
        });
    }

    for (int e = 0; e < g.edge_count(); ++e)
        if (color[e] == 0) throw invariant_violation("rc_bounded_coloring: uncolored edge");

    std::int64_t z = bridges(g).count();
    std::int64_t bound = z + static_cast<std::int64_t>(p) * p + (std::int64_t{1} << p) * 2 * p;
    if (next > bound) throw invariant_violation("rc_bounded_coloring: color count exceeds z + p^2 + 2^p*2p");

    EdgeColoring col{next, std::move(color)};
    if (!is_rainbow_edge(g, col).ok)
        throw invariant_violation("rc_bounded_coloring: coloring failed verification");
    return col;
}

namespace {

WinWinOutcome fallback_decide(const Graph& g, Variant variant, int k, const SolveLimits& limits) {
    WinWinOutcome out;
    out.branch = WinWinBranch::BoundedFallback;
    if (k < 0) return out;  // nothing to save: trivially no
    SolveReport r = decide(g, variant, k, limits);
    out.yes = r.yes;
    out.edge_witness = std::move(r.edge_witness);
    out.vertex_witness = std::move(r.vertex_witness);
    out.solver_nodes = r.nodes_expanded;
    return out;
}

}  // namespace

WinWinOutcome decide_vc(const Graph& g, Variant variant, int k, const SolveLimits& limits) {
    if (!g.is_connected()) throw input_error("decide_vc: graph is not connected");
    if (variant != Variant::RC && variant != Variant::RVC && variant != Variant::SRVC)
        throw input_error("decide_vc: variant must be rc, rvc or srvc");
    if (k < 0) throw input_error("decide_vc: k must be >= 0");

    VertexSet cover = min_vertex_cover(g);
    int p = cover.count();
    WinWinOutcome out;

    if (variant == Variant::RVC) {
        if (k >= 2 * p) {
            out.branch = WinWinBranch::StructuralYes;
            out.yes = true;
            out.vertex_witness = rvc_coloring_2p(g, cover);
            return out;
        }
        return fallback_decide(g, variant, k, limits);
    }
    if (variant == Variant::SRVC) {
        if (k >= p * p) {
            out.branch = WinWinBranch::StructuralYes;
            out.yes = true;
            out.vertex_witness = srvc_coloring_p2(g, cover);
            return out;
        }
        return fallback_decide(g, variant, k, limits);
    }

    // RC
    if (g.edge_count() == 0) {
        out.branch = WinWinBranch::ThresholdExact;
        out.yes = true;
        out.edge_witness = EdgeColoring{0, {}};
        return out;
    }
    std::int64_t z = bridges(g).count();
    if (z >= beta_threshold(p)) {
        out.branch = WinWinBranch::ThresholdExact;
        out.yes = z <= k;
        if (out.yes) out.edge_witness = rc_exact_above_threshold(g, cover);
        return out;
    }
    std::int64_t lemma8_bound = z + static_cast<std::int64_t>(p) * p + (std::int64_t{1} << p) * 2 * p;
    if (k >= lemma8_bound) {
        out.branch = WinWinBranch::StructuralYes;
        out.yes = true;
        out.edge_witness = rc_bounded_coloring(g, cover);
        return out;
    }
    return fallback_decide(g, variant, k, limits);
}

WinWinOutcome saving_rc(const Graph& g, int k, const SolveLimits& limits) {
    if (!g.is_connected()) throw input_error("saving_rc: graph is not connected");
    if (k < 1) throw input_error("saving_rc: k must be >= 1");
    int n = g.vertex_count();
    int m = g.edge_count();

    if (m >= n + k) {
        Graph tree = spanning_tree_min_diameter(g);
        EdgeColoring col{n - 1, std::vector<int>(m, 1)};
        int next = 1;
        for (const Edge& e : tree.edges()) col.color[*g.find_edge(e.u, e.v)] = next++;
        if (col.count > m - k) throw invariant_violation("saving_rc: witness uses more than m-k colors");
        if (!is_rainbow_edge(g, col).ok) throw invariant_violation("saving_rc: witness failed verification");
        return WinWinOutcome{WinWinBranch::StructuralYes, true, std::move(col), std::nullopt, 0};
    }
    return fallback_decide(g, Variant::RC, m - k, limits);
}

WinWinOutcome saving_rvc(const Graph& g, int k, const SolveLimits& limits) {
    if (!g.is_connected()) throw input_error("saving_rvc: graph is not connected");
    if (k < 1) throw input_error("saving_rvc: k must be >= 1");
    int n = g.vertex_count();

    std::optional<Graph> tree = max_leaf_spanning_tree(g, k + 1);
    if (!tree && n <= 9) tree = max_leaf_spanning_tree_exact(g, k + 1);

    if (tree) {
        // Leaves share color 1, internal tree vertices get 2, 3, ...; a tree
        // path's internal vertices are internal tree vertices, so distinct.
        VertexColoring col{1, std::vector<int>(n, 1)};
        int next = 1;
        for (int v = 0; v < n; ++v)
            if (tree->degree(v) >= 2) col.color[v] = ++next;
        col.count = next;
        if (col.count > n - k) throw invariant_violation("saving_rvc: witness uses more than n-k colors");
        if (!is_rainbow_vertex(g, col).ok) throw invariant_violation("saving_rvc: witness failed verification");
        return WinWinOutcome{WinWinBranch::StructuralYes, true, std::nullopt, std::move(col), 0};
    }
    return fallback_decide(g, Variant::RVC, n - k, limits);
}

}  // namespace rainbow
