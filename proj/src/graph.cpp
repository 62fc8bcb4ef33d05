#include "rainbow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace rainbow {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw input_error("Graph: negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw input_error("Graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("Graph: edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw input_error("Graph: parallel edge");

    edges_.reserve(edge_list.size());
    adj_.assign(n, {});
    for (int id = 0; id < static_cast<int>(edge_list.size()); ++id) {
        auto [u, v] = edge_list[id];
        edges_.push_back({u, v});
        adj_[u].push_back({v, id});
        adj_[v].push_back({u, id});
    }
    for (auto& inc : adj_)
        std::sort(inc.begin(), inc.end(), [](const HalfEdge& a, const HalfEdge& b) { return a.to < b.to; });
}

std::optional<int> Graph::find_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
    const auto& inc = adj_[u];
    auto it = std::lower_bound(inc.begin(), inc.end(), v,
                               [](const HalfEdge& h, int x) { return h.to < x; });
    if (it != inc.end() && it->to == v) return it->edge;
    return std::nullopt;
}

std::vector<int> Graph::distances_from(int s) const {
    std::vector<int> dist(n_, -1);
    dist.at(s) = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (const auto& h : adj_[v]) {
            if (dist[h.to] < 0) {
                dist[h.to] = dist[v] + 1;
                queue.push_back(h.to);
            }
        }
    }
    return dist;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

void require_connected(const Graph& g, const char* op) {
    if (!g.is_connected()) throw input_error(std::string(op) + ": graph is not connected");
}

}  // namespace

EdgeSet bridges(const Graph& g) {
    require_connected(g, "bridges");
    int n = g.vertex_count();
    EdgeSet out(g.edge_count());
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;

    // Iterative lowlink DFS; an edge (parent, v) is a bridge iff low[v] > disc[parent].
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0});
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& inc = g.incident(f.v);
        if (f.next < inc.size()) {
            HalfEdge h = inc[f.next++];
            if (h.edge == f.parent_edge) continue;
            if (disc[h.to] < 0) {
                disc[h.to] = low[h.to] = timer++;
                stack.push_back({h.to, h.edge, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[h.to]);
            }
        } else {
            int v = f.v;
            int pe = f.parent_edge;
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] > disc[p]) out.insert(pe);
            }
        }
    }
    return out;
}

int diameter(const Graph& g) {
    require_connected(g, "diameter");
    int best = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        auto dist = g.distances_from(s);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

bool is_vertex_cover(const Graph& g, const VertexSet& x) {
    for (const auto& e : g.edges())
        if (!x.contains(e.u) && !x.contains(e.v)) return false;
    return true;
}

namespace {

struct CoverSearch {
    const Graph& g;
    std::vector<char> removed;     // vertex removed from the working graph
    std::vector<int> live_degree;  // degrees within the working graph
    std::vector<char> in_cover;
    int cover_size = 0;
    int best_size;
    std::vector<char> best;

    explicit CoverSearch(const Graph& graph)
        : g(graph),
          removed(graph.vertex_count(), 0),
          live_degree(graph.vertex_count(), 0),
          in_cover(graph.vertex_count(), 0),
          best_size(graph.vertex_count() + 1),
          best(graph.vertex_count(), 0) {
        for (int v = 0; v < graph.vertex_count(); ++v) live_degree[v] = graph.degree(v);
    }

    void take(int v, std::vector<int>& undo) {
        in_cover[v] = 1;
        ++cover_size;
        remove(v, undo);
    }

    void remove(int v, std::vector<int>& undo) {
        removed[v] = 1;
        undo.push_back(v);
        for (const auto& h : g.incident(v))
            if (!removed[h.to]) --live_degree[h.to];
    }

    void rollback(std::vector<int>& undo, std::size_t mark, int cover_mark) {
        while (undo.size() > mark) {
            int v = undo.back();
            undo.pop_back();
            removed[v] = 0;
            if (in_cover[v]) in_cover[v] = 0;
            for (const auto& h : g.incident(v))
                if (!removed[h.to]) ++live_degree[h.to];
        }
        cover_size = cover_mark;
    }

    // Size of a greedy maximal matching on the live graph; any cover needs
    // at least that many vertices.
    int matching_bound() const {
        std::vector<char> matched(g.vertex_count(), 0);
        int m = 0;
        for (const auto& e : g.edges()) {
            if (removed[e.u] || removed[e.v] || matched[e.u] || matched[e.v]) continue;
            matched[e.u] = matched[e.v] = 1;
            ++m;
        }
        return m;
    }

    void search(std::vector<int>& undo) {
        std::size_t mark = undo.size();
        int cover_mark = cover_size;

        // Kernelize: isolated vertices go away, pendant neighbors get taken.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (removed[v]) continue;
                if (live_degree[v] == 0) {
                    remove(v, undo);
                    changed = true;
                } else if (live_degree[v] == 1) {
                    for (const auto& h : g.incident(v)) {
                        if (!removed[h.to]) {
                            take(h.to, undo);
                            break;
                        }
                    }
                    changed = true;
                }
            }
        }

        int pick = -1, pick_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!removed[v] && live_degree[v] > pick_deg) pick = v, pick_deg = live_degree[v];

        if (pick < 0) {
            if (cover_size < best_size) {
                best_size = cover_size;
                best.assign(in_cover.begin(), in_cover.end());
            }
        } else if (cover_size + matching_bound() < best_size) {
            std::vector<int> nbrs;
            for (const auto& h : g.incident(pick))
                if (!removed[h.to]) nbrs.push_back(h.to);

            std::size_t m2 = undo.size();
            int c2 = cover_size;
            take(pick, undo);
            search(undo);
            rollback(undo, m2, c2);

            for (int u : nbrs) take(u, undo);
            remove(pick, undo);
            search(undo);
            rollback(undo, m2, c2);
        }

        rollback(undo, mark, cover_mark);
    }
};

}  // namespace

VertexSet min_vertex_cover(const Graph& g) {
    CoverSearch s(g);
    std::vector<int> undo;
    s.search(undo);
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (s.best[v]) out.insert(v);
    return out;
}

std::vector<TypeClass> neighborhood_types(const Graph& g, const VertexSet& x) {
    if (!is_vertex_cover(g, x)) throw input_error("neighborhood_types: x is not a vertex cover");
    int n = g.vertex_count();
    std::vector<int> order;  // members outside x, ascending
    for (int v = 0; v < n; ++v)
        if (!x.contains(v)) order.push_back(v);

    std::vector<TypeClass> classes;
    std::vector<std::vector<int>> keys;
    for (int v : order) {
        std::vector<int> key;
        for (const auto& h : g.incident(v)) key.push_back(h.to);
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(key);
            TypeClass tc{VertexSet(n), VertexSet(n)};
            for (int u : key) tc.neighborhood.insert(u);
            tc.members.insert(v);
            classes.push_back(std::move(tc));
        } else {
            classes[it - keys.begin()].members.insert(v);
        }
    }
    return classes;
}

Graph corona(const Graph& g, const Graph& h) {
    int n = g.vertex_count();
    int hn = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    for (int i = 0; i < n; ++i) {
        int base = n + i * hn;
        for (const auto& e : h.edges()) edges.emplace_back(base + e.u, base + e.v);
        for (int j = 0; j < hn; ++j) edges.emplace_back(i, base + j);
    }
    return Graph(n + n * hn, std::move(edges));
}

Graph subgraph_from_edges(const Graph& g, const std::vector<int>& edge_ids) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_ids.size());
    for (int id : edge_ids) edges.emplace_back(g.edge(id).u, g.edge(id).v);
    return Graph(g.vertex_count(), std::move(edges));
}

namespace {

int tree_diameter(const Graph& t) {
    auto d0 = t.distances_from(0);
    int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = t.distances_from(far);
    return *std::max_element(d1.begin(), d1.end());
}

// BFS tree rooted at a vertex, or at an edge (both endpoints depth 0, the
// edge itself included).
Graph center_bfs_tree(const Graph& g, int a, std::optional<int> b) {
    int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<int> queue;
    dist[a] = 0;
    queue.push_back(a);
    if (b) {
        dist[*b] = 0;
        queue.push_back(*b);
        tree_edges.emplace_back(a, *b);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (const auto& h : g.incident(v)) {
            if (dist[h.to] < 0) {
                dist[h.to] = dist[v] + 1;
                tree_edges.emplace_back(v, h.to);
                queue.push_back(h.to);
            }
        }
    }
    return Graph(n, std::move(tree_edges));
}

}  // namespace

Graph spanning_tree_min_diameter(const Graph& g) {
    require_connected(g, "spanning_tree_min_diameter");
    if (g.vertex_count() == 1) return g;

    std::optional<Graph> best;
    int best_diam = -1;
    auto consider = [&](Graph t) {
        int d = tree_diameter(t);
        if (!best || d < best_diam) {
            best = std::move(t);
            best_diam = d;
        }
    };
    for (int v = 0; v < g.vertex_count(); ++v) consider(center_bfs_tree(g, v, std::nullopt));
    for (const auto& e : g.edges()) consider(center_bfs_tree(g, e.u, e.v));
    return *best;
}

int count_leaves(const Graph& tree) {
    int c = 0;
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (tree.degree(v) == 1) ++c;
    return c;
}

std::optional<Graph> max_leaf_spanning_tree(const Graph& g, int min_leaves) {
    require_connected(g, "max_leaf_spanning_tree");
    int n = g.vertex_count();
    if (n == 1) return min_leaves <= 0 ? std::optional<Graph>(g) : std::nullopt;
    if (n == 2) return min_leaves <= 2 ? std::optional<Graph>(g) : std::nullopt;

    std::optional<Graph> best;
    int best_leaves = -1;

    for (int seed = 0; seed < n; ++seed) {
        std::vector<char> in_tree(n, 0), internal(n, 0);
        std::vector<std::pair<int, int>> tree_edges;
        in_tree[seed] = 1;
        internal[seed] = 1;
        for (const auto& h : g.incident(seed)) {
            in_tree[h.to] = 1;
            tree_edges.emplace_back(seed, h.to);
        }

        auto outside_degree = [&](int v) {
            int d = 0;
            for (const auto& h : g.incident(v))
                if (!in_tree[h.to]) ++d;
            return d;
        };

        // Expand the leaf that attaches the most new vertices; expanding with
        // outside degree >= 2 never decreases the leaf count.
        while (true) {
            int pick = -1, pick_gain = 1;
            for (int v = 0; v < n; ++v) {
                if (!in_tree[v] || internal[v]) continue;
                int d = outside_degree(v);
                if (d > pick_gain) pick = v, pick_gain = d;
            }
            if (pick < 0) break;
            internal[pick] = 1;
            for (const auto& h : g.incident(pick)) {
                if (!in_tree[h.to]) {
                    in_tree[h.to] = 1;
                    tree_edges.emplace_back(pick, h.to);
                }
            }
        }

        // Attach whatever is left via BFS from the tree.
        std::vector<int> queue;
        for (int v = 0; v < n; ++v)
            if (in_tree[v]) queue.push_back(v);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (const auto& h : g.incident(v)) {
                if (!in_tree[h.to]) {
                    in_tree[h.to] = 1;
                    tree_edges.emplace_back(v, h.to);
                    queue.push_back(h.to);
                }
            }
        }

        Graph t(n, tree_edges);
        int leaves = count_leaves(t);
        if (leaves > best_leaves) {
            best_leaves = leaves;
            best = std::move(t);
        }
    }

    if (best_leaves >= min_leaves) return best;
    return std::nullopt;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Can the components of "chosen" still be connected using edges >= idx?
bool still_connectable(const Graph& g, const Dsu& chosen, int idx) {
    Dsu d = chosen;
    int components = 0;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int r = d.find(v);
        if (!seen[r]) {
            seen[r] = 1;
            ++components;
        }
    }
    for (int e = idx; e < g.edge_count() && components > 1; ++e)
        if (d.unite(g.edge(e).u, g.edge(e).v)) --components;
    return components == 1;
}

bool spanning_tree_rec(const Graph& g, int idx, Dsu& dsu, std::vector<int>& chosen,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    if (static_cast<int>(chosen.size()) == g.vertex_count() - 1) return visit(chosen);
    if (idx == g.edge_count()) return true;

    const Edge& e = g.edge(idx);
    if (dsu.find(e.u) != dsu.find(e.v)) {
        Dsu saved = dsu;
        dsu.unite(e.u, e.v);
        chosen.push_back(idx);
        bool keep_going = spanning_tree_rec(g, idx + 1, dsu, chosen, visit);
        chosen.pop_back();
        dsu = saved;
        if (!keep_going) return false;
    }
    if (still_connectable(g, dsu, idx + 1)) return spanning_tree_rec(g, idx + 1, dsu, chosen, visit);
    return true;
}

}  // namespace

void for_each_spanning_tree(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit) {
    require_connected(g, "for_each_spanning_tree");
    if (g.vertex_count() == 1) {
        std::vector<int> empty_tree;
        visit(empty_tree);
        return;
    }
    Dsu dsu(g.vertex_count());
    std::vector<int> chosen;
    spanning_tree_rec(g, 0, dsu, chosen, visit);
}

std::optional<Graph> max_leaf_spanning_tree_exact(const Graph& g, int min_leaves) {
    require_connected(g, "max_leaf_spanning_tree_exact");
    if (g.vertex_count() == 1) return min_leaves <= 0 ? std::optional<Graph>(g) : std::nullopt;
    std::optional<Graph> found;
    for_each_spanning_tree(g, [&](const std::vector<int>& edge_ids) {
        Graph t = subgraph_from_edges(g, edge_ids);
        if (count_leaves(t) >= min_leaves) {
            found = std::move(t);
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace rainbow
