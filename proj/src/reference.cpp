#include "rainbow/reference.hpp"

#include <algorithm>
#include <functional>

namespace rainbow::reference {

namespace {

// Enumerates simple u-v paths as vertex sequences; stops when visit returns false.
void all_simple_paths(const Graph& g, int u, int v, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> path{u};
    std::vector<char> used(g.vertex_count(), 0);
    used[u] = 1;
    bool stop = false;
    std::function<void(int)> dfs = [&](int at) {
        if (stop) return;
        if (at == v) {
            if (!visit(path)) stop = true;
            return;
        }
        for (const HalfEdge& h : g.incident(at)) {
            if (used[h.to]) continue;
            used[h.to] = 1;
            path.push_back(h.to);
            dfs(h.to);
            path.pop_back();
            used[h.to] = 0;
        }
    };
    dfs(u);
}

// Enumerates shortest u-v paths by walking distances-to-v downhill.
void all_shortest_paths(const Graph& g, int u, int v, const std::function<bool(const std::vector<int>&)>& visit) {
    auto dist_v = g.distances_from(v);
    std::vector<int> path{u};
    bool stop = false;
    std::function<void(int)> dfs = [&](int at) {
        if (stop) return;
        if (at == v) {
            if (!visit(path)) stop = true;
            return;
        }
        for (const HalfEdge& h : g.incident(at)) {
            if (dist_v[h.to] != dist_v[at] - 1) continue;
            path.push_back(h.to);
            dfs(h.to);
            path.pop_back();
        }
    };
    dfs(u);
}

bool edge_path_rainbow(const Graph& g, const EdgeColoring& col, const std::vector<int>& path) {
    std::vector<int> seen;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int c = col.color[*g.find_edge(path[i], path[i + 1])];
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
        seen.push_back(c);
    }
    return true;
}

bool vertex_path_rainbow(const VertexColoring& col, const std::vector<int>& path) {
    std::vector<int> seen;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        int c = col.color[path[i]];
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
        seen.push_back(c);
    }
    return true;
}

template <typename Paths, typename Check>
bool pair_connected(const Graph& g, int u, int v, Paths&& paths, Check&& check) {
    bool found = false;
    paths(g, u, v, [&](const std::vector<int>& path) {
        if (check(path)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

template <typename PairOk>
VerifyResult scan_all_pairs(const Graph& g, PairOk&& ok) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!ok(u, v)) return {false, std::make_pair(u, v)};
    return {true, std::nullopt};
}

void require_connected(const Graph& g) {
    if (!g.is_connected()) throw input_error("reference verify: graph is not connected");
}

}  // namespace

VerifyResult rainbow_edge(const Graph& g, const EdgeColoring& col) {
    validate(col, g);
    require_connected(g);
    return scan_all_pairs(g, [&](int u, int v) {
        return pair_connected(g, u, v, all_simple_paths,
                              [&](const std::vector<int>& p) { return edge_path_rainbow(g, col, p); });
    });
}

VerifyResult strong_rainbow_edge(const Graph& g, const EdgeColoring& col) {
    validate(col, g);
    require_connected(g);
    return scan_all_pairs(g, [&](int u, int v) {
        return pair_connected(g, u, v, all_shortest_paths,
                              [&](const std::vector<int>& p) { return edge_path_rainbow(g, col, p); });
    });
}

VerifyResult rainbow_vertex(const Graph& g, const VertexColoring& col) {
    validate(col, g);
    require_connected(g);
    if (col.count == 0) return scan_all_pairs(g, [&](int u, int v) { return g.has_edge(u, v); });
    return scan_all_pairs(g, [&](int u, int v) {
        return pair_connected(g, u, v, all_simple_paths,
                              [&](const std::vector<int>& p) { return vertex_path_rainbow(col, p); });
    });
}

VerifyResult strong_rainbow_vertex(const Graph& g, const VertexColoring& col) {
    validate(col, g);
    require_connected(g);
    if (col.count == 0) return scan_all_pairs(g, [&](int u, int v) { return g.has_edge(u, v); });
    return scan_all_pairs(g, [&](int u, int v) {
        return pair_connected(g, u, v, all_shortest_paths,
                              [&](const std::vector<int>& p) { return vertex_path_rainbow(col, p); });
    });
}

VerifyResult subset_srvc(const Graph& g, const VertexColoring& col, const PairSet& p) {
    validate(col, g);
    validate(p, g);
    require_connected(g);
    for (auto [u, v] : p.pairs) {
        bool ok = col.count == 0
                      ? g.has_edge(u, v)
                      : pair_connected(g, u, v, all_shortest_paths,
                                       [&](const std::vector<int>& q) { return vertex_path_rainbow(col, q); });
        if (!ok) return {false, std::make_pair(u, v)};
    }
    return {true, std::nullopt};
}

EdgeSet bridges_by_removal(const Graph& g) {
    if (!g.is_connected()) throw input_error("bridges_by_removal: graph is not connected");
    EdgeSet out(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<int> keep;
        for (int f = 0; f < g.edge_count(); ++f)
            if (f != e) keep.push_back(f);
        if (!subgraph_from_edges(g, keep).is_connected()) out.insert(e);
    }
    return out;
}

VertexSet min_cover_by_enumeration(const Graph& g) {
    int n = g.vertex_count();
    if (n > 24) throw input_error("min_cover_by_enumeration: graph too large");
    std::uint32_t best_mask = 0;
    int best = n + 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (const Edge& e : g.edges()) {
            if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) {
                covers = false;
                break;
            }
        }
        if (covers) {
            best = size;
            best_mask = mask;
        }
    }
    VertexSet out(n);
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1) out.insert(v);
    return out;
}

namespace {

// Visits every spanning tree by scanning (n-1)-subsets of the edge list.
template <typename F>
void scan_spanning_trees(const Graph& g, F&& f) {
    if (!g.is_connected()) throw input_error("reference: graph is not connected");
    int n = g.vertex_count();
    int m = g.edge_count();
    int need = n - 1;
    if (need == 0) {
        f(Graph(n, {}));
        return;
    }
    std::vector<int> pick(need);
    std::function<bool(int, int)> rec = [&](int from, int slot) {
        if (slot == need) {
            std::vector<int> ids(pick.begin(), pick.end());
            Graph t = subgraph_from_edges(g, ids);
            return t.is_connected() ? f(t) : true;
        }
        for (int e = from; e <= m - (need - slot); ++e) {
            pick[slot] = e;
            if (!rec(e + 1, slot + 1)) return false;
        }
        return true;
    };
    rec(0, 0);
}

}  // namespace

int min_spanning_tree_diameter(const Graph& g) {
    int best = -1;
    scan_spanning_trees(g, [&](const Graph& t) {
        int d = diameter(t);
        if (best < 0 || d < best) best = d;
        return true;
    });
    return best;
}

bool spanning_tree_with_leaves_exists(const Graph& g, int min_leaves) {
    bool found = false;
    scan_spanning_trees(g, [&](const Graph& t) {
        if (count_leaves(t) >= min_leaves) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

int max_spanning_tree_leaves(const Graph& g) {
    int best = 0;
    scan_spanning_trees(g, [&](const Graph& t) {
        best = std::max(best, count_leaves(t));
        return true;
    });
    return best;
}

namespace {

// Enumerates every map items -> [1..k] (base-k counting, no symmetry breaking).
template <typename Accept>
bool any_coloring(int items, int k, Accept&& accept) {
    if (k <= 0) return items == 0 && accept(std::vector<int>{});
    std::vector<int> color(items, 1);
    while (true) {
        if (accept(color)) return true;
        int i = 0;
        while (i < items && color[i] == k) color[i++] = 1;
        if (i == items) return false;
        ++color[i];
    }
}

}  // namespace

bool decide_rc(const Graph& g, int k) {
    if (g.vertex_count() == 1) return true;
    if (k <= 0) return false;
    return any_coloring(g.edge_count(), k, [&](const std::vector<int>& c) {
        return rainbow_edge(g, EdgeColoring{k, c}).ok;
    });
}

bool decide_src(const Graph& g, int k) {
    if (g.vertex_count() == 1) return true;
    if (k <= 0) return false;
    return any_coloring(g.edge_count(), k, [&](const std::vector<int>& c) {
        return strong_rainbow_edge(g, EdgeColoring{k, c}).ok;
    });
}

bool decide_rvc(const Graph& g, int k) {
    if (k <= 0) return rainbow_vertex(g, VertexColoring{0, std::vector<int>(g.vertex_count(), 0)}).ok;
    return any_coloring(g.vertex_count(), k, [&](const std::vector<int>& c) {
        return rainbow_vertex(g, VertexColoring{k, c}).ok;
    });
}

bool decide_srvc(const Graph& g, int k) {
    if (k <= 0) return strong_rainbow_vertex(g, VertexColoring{0, std::vector<int>(g.vertex_count(), 0)}).ok;
    return any_coloring(g.vertex_count(), k, [&](const std::vector<int>& c) {
        return strong_rainbow_vertex(g, VertexColoring{k, c}).ok;
    });
}

bool decide_ssrvc(const Graph& g, int k, const PairSet& p) {
    if (p.empty()) return true;
    if (k <= 0) return subset_srvc(g, VertexColoring{0, std::vector<int>(g.vertex_count(), 0)}, p).ok;
    return any_coloring(g.vertex_count(), k, [&](const std::vector<int>& c) {
        return subset_srvc(g, VertexColoring{k, c}, p).ok;
    });
}

bool chromatic_decide(const Graph& g, int k) {
    if (k < 0) return false;
    return any_coloring(g.vertex_count(), std::min(k, g.vertex_count()), [&](const std::vector<int>& c) {
        for (const Edge& e : g.edges())
            if (c[e.u] == c[e.v]) return false;
        return true;
    });
}

}  // namespace rainbow::reference
