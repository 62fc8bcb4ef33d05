#include "rainbow/solver.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::RC: return "rc";
        case Variant::SRC: return "src";
        case Variant::RVC: return "rvc";
        case Variant::SRVC: return "srvc";
        case Variant::SSRVC: return "ssrvc";
    }
    return "?";
}

std::optional<Variant> variant_from_string(const std::string& s) {
    if (s == "rc") return Variant::RC;
    if (s == "src") return Variant::SRC;
    if (s == "rvc") return Variant::RVC;
    if (s == "srvc") return Variant::SRVC;
    if (s == "ssrvc") return Variant::SSRVC;
    return std::nullopt;
}

namespace {

constexpr bool vertex_mode(Variant v) { return v != Variant::RC && v != Variant::SRC; }
constexpr bool strong_mode(Variant v) { return v == Variant::SRC || v == Variant::SRVC || v == Variant::SSRVC; }

constexpr int kPruneMaskMax = 20;

// Backtracking search over canonical colorings of the items (edges or
// vertices). A partial coloring is discarded when its optimistic completion
// (every unassigned item gets a fresh color that can never collide) already
// fails the verifier; that check is a subset DP over the real colors only,
// where unassigned items move for free.
struct Search {
    const Graph& g;
    Variant variant;
    int k;
    const PairSet* pairs;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    int item_count;
    std::vector<int> item_order;  // position -> item id
    std::vector<int> color;       // item id -> color, 0 = unassigned
    std::vector<int> used_count;  // color -> number of items carrying it

    std::vector<std::vector<int>> dist;              // all-pairs BFS distances
    std::vector<std::vector<int>> recheck_sources;   // item id -> sources to recheck
    std::vector<int> all_sources;

    // Prune-DP scratch with O(touched) cleanup between runs.
    std::vector<std::uint64_t> visited;
    std::vector<std::uint64_t> dirty_words;
    std::vector<std::uint64_t> stack;
    std::vector<char> reached;
    bool prune_enabled;

    std::optional<std::vector<int>> witness;  // item id -> color
    int witness_colors = 0;

    Search(const Graph& graph, Variant var, int bound, const PairSet* ps, std::uint64_t node_budget)
        : g(graph), variant(var), k(bound), pairs(ps), budget(node_budget) {
        int n = g.vertex_count();
        item_count = vertex_mode(variant) ? n : g.edge_count();
        color.assign(item_count, 0);
        used_count.assign(k + 1, 0);

        item_order.resize(item_count);
        std::iota(item_order.begin(), item_order.end(), 0);
        if (vertex_mode(variant)) {
            // High-degree vertices first: they constrain the most pairs, so
            // pruning bites early. Canonicity is independent of item order.
            std::stable_sort(item_order.begin(), item_order.end(),
                             [&](int a, int b) { return g.degree(a) > g.degree(b); });
        }

        dist.resize(n);
        for (int s = 0; s < n; ++s) dist[s] = g.distances_from(s);

        prune_enabled = k <= kPruneMaskMax;
        if (prune_enabled) {
            std::uint64_t bits = static_cast<std::uint64_t>(n) << k;
            visited.assign((bits + 63) / 64, 0);
        }

        build_recheck_lists();
    }

    void build_recheck_lists() {
        int n = g.vertex_count();
        if (pairs) {
            for (auto [u, v] : pairs->pairs)
                if (all_sources.empty() || all_sources.back() != u) all_sources.push_back(u);
        } else {
            for (int s = 0; s + 1 < n; ++s) all_sources.push_back(s);
        }

        recheck_sources.assign(item_count, {});
        if (variant == Variant::SRVC || variant == Variant::SSRVC) {
            // Recoloring vertex v can only break pairs with v internal to one
            // of their shortest paths.
            for (int v = 0; v < n; ++v) {
                for (int a : all_sources) {
                    if (a == v) {
                        recheck_sources[v].push_back(a);
                        continue;
                    }
                    bool internal = false;
                    if (pairs) {
                        for (auto [u, b] : pairs->pairs) {
                            if (u != a || b == v) continue;
                            if (dist[a][v] + dist[v][b] == dist[a][b]) {
                                internal = true;
                                break;
                            }
                        }
                    } else {
                        for (int b = a + 1; b < n && !internal; ++b)
                            if (b != v && dist[a][v] + dist[v][b] == dist[a][b]) internal = true;
                    }
                    if (internal) recheck_sources[v].push_back(a);
                }
            }
        } else {
            // Plain variants: any simple path can matter, recheck everything.
            for (int i = 0; i < item_count; ++i) recheck_sources[i] = all_sources;
        }
    }

    // Reachability from s over states (vertex, mask of real colors used);
    // unassigned items never consume a mask bit.
    void partial_reach(int s) {
        int n = g.vertex_count();
        reached.assign(n, 0);
        reached[s] = 1;

        dirty_words.clear();
        stack.clear();
        auto push = [&](int v, std::uint32_t mask) {
            std::uint64_t idx = (static_cast<std::uint64_t>(v) << k) | mask;
            std::uint64_t& w = visited[idx >> 6];
            std::uint64_t bit = std::uint64_t{1} << (idx & 63);
            if (w & bit) return;
            if (!w) dirty_words.push_back(idx >> 6);
            w |= bit;
            stack.push_back(idx);
        };
        push(s, 0);

        const bool strong = strong_mode(variant);
        const bool vmode = vertex_mode(variant);
        const std::vector<int>& ds = dist[s];
        const std::uint32_t mask_all = (k >= 32) ? ~0u : (std::uint32_t{1} << k) - 1;

        while (!stack.empty()) {
            std::uint64_t state = stack.back();
            stack.pop_back();
            int v = static_cast<int>(state >> k);
            std::uint32_t mask = static_cast<std::uint32_t>(state & mask_all);

            std::uint32_t out_mask = mask;
            if (vmode && v != s) {
                int c = color[v];
                if (c != 0) {
                    std::uint32_t bit = std::uint32_t{1} << (c - 1);
                    if (mask & bit) continue;
                    out_mask = mask | bit;
                }
            }
            for (const HalfEdge& h : g.incident(v)) {
                if (strong && ds[h.to] != ds[v] + 1) continue;
                std::uint32_t next = out_mask;
                if (!vmode) {
                    int c = color[h.edge];
                    if (c != 0) {
                        std::uint32_t bit = std::uint32_t{1} << (c - 1);
                        if (mask & bit) continue;
                        next = mask | bit;
                    }
                }
                reached[h.to] = 1;
                push(h.to, next);
            }
        }

        for (std::uint64_t w : dirty_words) visited[w] = 0;
    }

    bool source_ok(int s) {
        partial_reach(s);
        if (pairs) {
            for (auto [u, v] : pairs->pairs)
                if (u == s && !reached[v]) return false;
        } else {
            for (int t = s + 1; t < g.vertex_count(); ++t)
                if (!reached[t]) return false;
        }
        return true;
    }

    bool prune_ok(int item) {
        if (!prune_enabled) return true;
        for (int s : recheck_sources[item])
            if (!source_ok(s)) return false;
        return true;
    }

    bool leaf_ok() {
        int max_used = 0;
        for (int i = 0; i < item_count; ++i) max_used = std::max(max_used, color[i]);
        VerifyOptions opts;
        opts.parallel = false;
        if (vertex_mode(variant)) {
            VertexColoring col{max_used, color};
            switch (variant) {
                case Variant::RVC: return is_rainbow_vertex(g, col, opts).ok;
                case Variant::SRVC: return is_strong_rainbow_vertex(g, col, opts).ok;
                default: return is_subset_srvc(g, col, *pairs, opts).ok;
            }
        }
        EdgeColoring col{max_used, color};
        if (variant == Variant::RC) return is_rainbow_edge(g, col, opts).ok;
        return is_strong_rainbow_edge(g, col, opts).ok;
    }

    bool run(int pos, int max_used) {
        if (pos == item_count) {
            if (!leaf_ok()) return false;
            witness = color;
            witness_colors = max_used;
            return true;
        }
        int item = item_order[pos];
        int limit = std::min(max_used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            if (++nodes > budget) throw budget_exceeded("solver: node budget exhausted");
            color[item] = c;
            ++used_count[c];
            // A first use of a color behaves exactly like the wildcard it
            // replaces, so only repeats can create a new dead end.
            bool viable = used_count[c] == 1 || prune_ok(item);
            if (viable && run(pos + 1, std::max(max_used, c))) return true;
            --used_count[c];
            color[item] = 0;
        }
        return false;
    }
};

EdgeColoring spanning_tree_edge_witness(const Graph& g) {
    Graph tree = spanning_tree_min_diameter(g);
    EdgeColoring col{g.vertex_count() - 1, std::vector<int>(g.edge_count(), 1)};
    int next = 1;
    for (const Edge& e : tree.edges()) col.color[*g.find_edge(e.u, e.v)] = next++;
    return col;
}

struct Shortcut {
    bool decided = false;
    bool yes = false;
    std::optional<EdgeColoring> edge_witness;
    std::optional<VertexColoring> vertex_witness;
};

VertexColoring zero_vertex_coloring(const Graph& g) {
    return VertexColoring{0, std::vector<int>(g.vertex_count(), 0)};
}

int pair_distance_bound(const Graph& g, const PairSet& p) {
    int lb = 0;
    for (auto [u, v] : p.pairs) {
        auto d = g.distances_from(u);
        lb = std::max(lb, d[v] - 1);
    }
    return lb;
}

int lower_bound_for(const Graph& g, Variant variant, const PairSet* pairs) {
    if (vertex_mode(variant)) {
        if (variant == Variant::SSRVC) return std::max(0, pair_distance_bound(g, *pairs));
        int d = diameter(g);
        if (d <= 1) return 0;
        if (d == 2) return 1;
        return d - 1;
    }
    if (g.vertex_count() == 1) return 0;
    return std::max({1, bridges(g).count(), diameter(g)});
}

Shortcut try_shortcuts(const Graph& g, Variant variant, int k, const PairSet* pairs) {
    Shortcut s;
    int n = g.vertex_count();

    if (vertex_mode(variant)) {
        bool degenerate;
        if (variant == Variant::SSRVC) {
            degenerate = pairs->empty() ||
                         std::all_of(pairs->pairs.begin(), pairs->pairs.end(),
                                     [&](auto pr) { return g.has_edge(pr.first, pr.second); });
        } else {
            degenerate = diameter(g) <= 1;
        }
        if (degenerate) {
            s.decided = true;
            s.yes = true;
            s.vertex_witness = zero_vertex_coloring(g);
            return s;
        }
        if (k <= 0) {
            s.decided = true;
            return s;
        }
        if (k >= n) {
            s.decided = true;
            s.yes = true;
            s.vertex_witness = all_distinct_vertex_coloring(g);
            return s;
        }
        return s;
    }

    if (n == 1) {
        s.decided = true;
        s.yes = true;
        s.edge_witness = EdgeColoring{0, {}};
        return s;
    }
    if (k <= 0) {
        s.decided = true;
        return s;
    }
    if (variant == Variant::RC && k >= n - 1) {
        s.decided = true;
        s.yes = true;
        s.edge_witness = spanning_tree_edge_witness(g);
        return s;
    }
    if (k >= g.edge_count()) {
        s.decided = true;
        s.yes = true;
        s.edge_witness = all_distinct_edge_coloring(g);
        return s;
    }
    return s;
}

void check_witness(const Graph& g, Variant variant, const PairSet* pairs, const SolveReport& r) {
    VerifyOptions opts;
    opts.parallel = false;
    bool ok = false;
    switch (variant) {
        case Variant::RC: ok = is_rainbow_edge(g, *r.edge_witness, opts).ok; break;
        case Variant::SRC: ok = is_strong_rainbow_edge(g, *r.edge_witness, opts).ok; break;
        case Variant::RVC: ok = is_rainbow_vertex(g, *r.vertex_witness, opts).ok; break;
        case Variant::SRVC: ok = is_strong_rainbow_vertex(g, *r.vertex_witness, opts).ok; break;
        case Variant::SSRVC: ok = is_subset_srvc(g, *r.vertex_witness, *pairs, opts).ok; break;
    }
    if (!ok) throw invariant_violation("solver: produced witness failed verification");
}

void validate_solve_inputs(const Graph& g, Variant variant, const PairSet* pairs) {
    if (!g.is_connected()) throw input_error("solver: graph is not connected");
    if ((variant == Variant::SSRVC) != (pairs != nullptr))
        throw input_error("solver: a pair set is required exactly for ssrvc");
    if (pairs) validate(*pairs, g);
}

}  // namespace

SolveReport decide(const Graph& g, Variant variant, int k, const SolveLimits& limits, const PairSet* pairs) {
    validate_solve_inputs(g, variant, pairs);

    SolveReport report;
    report.variant = variant;
    report.mode = SolveMode::Decide;
    report.k = k;

    Shortcut s = try_shortcuts(g, variant, k, pairs);
    if (!s.decided && k < lower_bound_for(g, variant, pairs)) {
        s.decided = true;
        s.yes = false;
    }
    if (s.decided) {
        report.yes = s.yes;
        report.edge_witness = std::move(s.edge_witness);
        report.vertex_witness = std::move(s.vertex_witness);
    } else {
        Search search(g, variant, k, pairs, limits.node_budget);
        report.yes = search.run(0, 0);
        report.nodes_expanded = search.nodes;
        if (report.yes) {
            if (vertex_mode(variant))
                report.vertex_witness = VertexColoring{search.witness_colors, *search.witness};
            else
                report.edge_witness = EdgeColoring{search.witness_colors, *search.witness};
        }
    }
    if (report.yes) check_witness(g, variant, pairs, report);
    return report;
}

SolveReport optimize(const Graph& g, Variant variant, const SolveLimits& limits, const PairSet* pairs,
                     int lower_bound_hint) {
    validate_solve_inputs(g, variant, pairs);

    int start = std::max(lower_bound_for(g, variant, pairs), lower_bound_hint);
    int ub = vertex_mode(variant) ? g.vertex_count() : std::max(1, g.edge_count());

    std::uint64_t used = 0;
    for (int k = start;; ++k) {
        SolveLimits rest{limits.node_budget - used};
        SolveReport r = decide(g, variant, k, rest, pairs);
        used += r.nodes_expanded;
        if (r.yes) {
            r.mode = SolveMode::Optimize;
            r.optimum = k;
            r.k = -1;
            r.nodes_expanded = used;
            return r;
        }
        if (k > ub) throw invariant_violation("optimize: passed the trivial upper bound without an answer");
    }
}

ChromaticReport chromatic_decide(const Graph& g, int k, const SolveLimits& limits) {
    ChromaticReport report;
    int n = g.vertex_count();
    if (k >= n) {
        report.yes = true;
        report.witness = all_distinct_vertex_coloring(g);
        return report;
    }
    if (k <= 0) {
        report.yes = n == 0;
        return report;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> color(n, 0);
    std::uint64_t nodes = 0;

    std::function<bool(int, int)> rec = [&](int pos, int max_used) {
        if (pos == n) return true;
        int v = order[pos];
        int limit = std::min(max_used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            if (++nodes > limits.node_budget) throw budget_exceeded("chromatic_decide: node budget exhausted");
            bool clash = false;
            for (const HalfEdge& h : g.incident(v)) {
                if (color[h.to] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            color[v] = c;
            if (rec(pos + 1, std::max(max_used, c))) return true;
            color[v] = 0;
        }
        return false;
    };

    report.yes = rec(0, 0);
    report.nodes_expanded = nodes;
    if (report.yes) {
        int max_used = *std::max_element(color.begin(), color.end());
        report.witness = VertexColoring{max_used, color};
        for (const Edge& e : g.edges())
            if (report.witness->color[e.u] == report.witness->color[e.v])
                throw invariant_violation("chromatic_decide: witness is not proper");
    }
    return report;
}

}  // namespace rainbow
