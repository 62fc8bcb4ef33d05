#include "rainbow/verify.hpp"

#include <algorithm>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rainbow {

namespace {

enum class Kind { PlainEdge, StrongEdge, PlainVertex, StrongVertex };

constexpr bool is_strong(Kind k) { return k == Kind::StrongEdge || k == Kind::StrongVertex; }
constexpr bool is_vertex(Kind k) { return k == Kind::PlainVertex || k == Kind::StrongVertex; }

// ---------------------------------------------------------------------------
// Subset-DP engine: reachability over (vertex, used-color-mask) states. For
// the plain variants a rainbow walk reduces to a rainbow simple path (cutting
// a revisited cycle only removes colors), so plain reachability is exact; the
// strong variants restrict moves to the BFS DAG, where every state path is a
// shortest path.
// ---------------------------------------------------------------------------

struct DpScratch {
    std::vector<std::uint64_t> visited;  // bit per (v << c) | mask
    std::vector<std::uint64_t> stack;    // encoded states
    std::vector<int> dist;

    void reset_visited(std::size_t bits) {
        std::size_t words = (bits + 63) / 64;
        visited.assign(words, 0);
    }
    bool test_and_set(std::uint64_t idx) {
        std::uint64_t& w = visited[idx >> 6];
        std::uint64_t bit = std::uint64_t{1} << (idx & 63);
        if (w & bit) return true;
        w |= bit;
        return false;
    }
};

// Marks every vertex rainbow-reachable from s in `reached`; stops as soon as
// all `wanted` targets are covered. Colors are 1-based over c bits.
void dp_reach(const Graph& g, Kind kind, const std::vector<int>& color, int c, int s,
              const std::vector<char>& wanted, int wanted_left, std::vector<char>& reached, DpScratch& scratch) {
    int n = g.vertex_count();
    reached.assign(n, 0);
    reached[s] = 1;
    if (wanted[s]) --wanted_left;
    if (wanted_left == 0) return;

    const int* dist = nullptr;
    if (is_strong(kind)) {
        scratch.dist = g.distances_from(s);
        dist = scratch.dist.data();
    }

    scratch.reset_visited(static_cast<std::uint64_t>(n) << c);
    scratch.stack.clear();
    auto encode = [c](int v, std::uint32_t mask) {
        return (static_cast<std::uint64_t>(v) << c) | mask;
    };
    scratch.test_and_set(encode(s, 0));
    scratch.stack.push_back(encode(s, 0));

    const std::uint32_t mask_all = c >= 32 ? ~0u : (std::uint32_t{1} << c) - 1;
    while (!scratch.stack.empty()) {
        std::uint64_t state = scratch.stack.back();
        scratch.stack.pop_back();
        int v = static_cast<int>(state >> c);
        std::uint32_t mask = static_cast<std::uint32_t>(state & mask_all);

        std::uint32_t out_mask = mask;
        if (is_vertex(kind) && v != s) {
            std::uint32_t bit = std::uint32_t{1} << (color[v] - 1);
            if (mask & bit) continue;  // v's color already used internally
            out_mask = mask | bit;
        }
        for (const HalfEdge& h : g.incident(v)) {
            if (dist && dist[h.to] != dist[v] + 1) continue;
            std::uint32_t next = out_mask;
            if (!is_vertex(kind)) {
                std::uint32_t bit = std::uint32_t{1} << (color[h.edge] - 1);
                if (mask & bit) continue;
                next = mask | bit;
            }
            if (scratch.test_and_set(encode(h.to, next))) continue;
            if (!reached[h.to]) {
                reached[h.to] = 1;
                if (wanted[h.to] && --wanted_left == 0) return;
            }
            scratch.stack.push_back(encode(h.to, next));
        }
    }
}

// ---------------------------------------------------------------------------
// Path-enumeration engine: DFS over simple paths (plain) or BFS-DAG paths
// (strong), pruning on a repeated color, with a global expansion budget.
// ---------------------------------------------------------------------------

struct EnumState {
    const Graph& g;
    Kind kind;
    const std::vector<int>& color;
    std::vector<char> on_path;
    std::vector<char> color_used;  // 1-based
    std::vector<int> dist;
    std::vector<char>* reached = nullptr;
    const std::vector<char>* wanted = nullptr;
    int wanted_left = 0;
    int source = 0;
    std::uint64_t* budget = nullptr;
};

// Returns false to abort the whole source (all wanted targets reached).
bool enum_dfs(EnumState& st, int v) {
    if (*st.budget == 0)
        throw budget_exceeded("verify: path enumeration budget exhausted");
    --*st.budget;

    bool leaving_marks = false;
    int vc = 0;
    if (is_vertex(st.kind) && v != st.source) {
        vc = st.color[v];
        if (st.color_used[vc]) return true;  // cannot pass through v
        st.color_used[vc] = 1;
        leaving_marks = true;
    }
    bool keep_going = true;
    for (const HalfEdge& h : st.g.incident(v)) {
        if (st.on_path[h.to]) continue;
        if (!st.dist.empty() && st.dist[h.to] != st.dist[v] + 1) continue;
        int ec = 0;
        if (!is_vertex(st.kind)) {
            ec = st.color[h.edge];
            if (st.color_used[ec]) continue;
            st.color_used[ec] = 1;
        }
        if (!(*st.reached)[h.to]) {
            (*st.reached)[h.to] = 1;
            if ((*st.wanted)[h.to] && --st.wanted_left == 0) keep_going = false;
        }
        if (keep_going) {
            st.on_path[h.to] = 1;
            keep_going = enum_dfs(st, h.to);
            st.on_path[h.to] = 0;
        }
        if (!is_vertex(st.kind)) st.color_used[ec] = 0;
        if (!keep_going) break;
    }
    if (leaving_marks) st.color_used[vc] = 0;
    return keep_going;
}

void enum_reach(const Graph& g, Kind kind, const std::vector<int>& color, int c, int s,
                const std::vector<char>& wanted, int wanted_left, std::vector<char>& reached,
                std::uint64_t& budget) {
    int n = g.vertex_count();
    reached.assign(n, 0);
    reached[s] = 1;
    if (wanted[s]) --wanted_left;
    if (wanted_left == 0) return;

    EnumState st{g, kind, color, std::vector<char>(n, 0), std::vector<char>(c + 1, 0), {},
                 &reached, &wanted, wanted_left, s, &budget};
    if (is_strong(kind)) st.dist = g.distances_from(s);
    st.on_path[s] = 1;
    enum_dfs(st, s);
}

// ---------------------------------------------------------------------------

struct Checker {
    const Graph& g;
    Kind kind;
    const std::vector<int>& color;
    int count;
    VerifyOptions opts;
    Engine engine;

    Checker(const Graph& graph, Kind k, const std::vector<int>& col, int c, const VerifyOptions& o)
        : g(graph), kind(k), color(col), count(c), opts(o), engine(o.engine) {
        if (engine == Engine::Auto) {
            bool fits = count <= opts.max_mask_colors &&
                        (static_cast<std::uint64_t>(g.vertex_count()) << count) <= (std::uint64_t{1} << 28);
            engine = fits ? Engine::SubsetDp : Engine::PathEnum;
        } else if (engine == Engine::SubsetDp && count > opts.max_mask_colors) {
            throw capacity_error("verify: " + std::to_string(count) + " colors exceed the subset-DP mask (max " +
                                 std::to_string(opts.max_mask_colors) + ")");
        }
    }

    void reach(int s, const std::vector<char>& wanted, int wanted_left, std::vector<char>& reached,
               DpScratch& scratch, std::uint64_t& budget) const {
        if (engine == Engine::SubsetDp)
            dp_reach(g, kind, color, count, s, wanted, wanted_left, reached, scratch);
        else
            enum_reach(g, kind, color, count, s, wanted, wanted_left, reached, budget);
    }

    // All-pairs check: from each source s, every t > s must be reachable.
    VerifyResult all_pairs() const {
        int n = g.vertex_count();
        std::vector<int> first_fail(n, -1);

        if (engine == Engine::SubsetDp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel && n >= 24)
#endif
            for (int s = 0; s < n - 1; ++s) {
                DpScratch scratch;
                std::uint64_t dummy = 0;
                first_fail[s] = run_source(s, scratch, dummy);
            }
        } else {
            // Serial: the enumeration budget is shared across sources.
            DpScratch scratch;
            std::uint64_t budget = opts.path_budget;
            for (int s = 0; s < n - 1; ++s) first_fail[s] = run_source(s, scratch, budget);
        }

        for (int s = 0; s < n - 1; ++s)
            if (first_fail[s] >= 0) return {false, std::make_pair(s, first_fail[s])};
        return {true, std::nullopt};
    }

    int run_source(int s, DpScratch& scratch, std::uint64_t& budget) const {
        int n = g.vertex_count();
        std::vector<char> wanted(n, 0);
        int wanted_left = 0;
        for (int t = s + 1; t < n; ++t) wanted[t] = 1, ++wanted_left;
        std::vector<char> reached;
        reach(s, wanted, wanted_left, reached, scratch, budget);
        for (int t = s + 1; t < n; ++t)
            if (!reached[t]) return t;
        return -1;
    }

    VerifyResult pair_list(const PairSet& p) const {
        // Group by source; the pairs are normalized u < v and sorted.
        std::vector<int> sources;
        for (auto [u, v] : p.pairs)
            if (sources.empty() || sources.back() != u) sources.push_back(u);

        int n = g.vertex_count();
        std::vector<std::vector<char>> reach_of(sources.size());

        if (engine == Engine::SubsetDp) {
            int k = static_cast<int>(sources.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel && n >= 24)
#endif
            for (int i = 0; i < k; ++i) {
                DpScratch scratch;
                std::uint64_t dummy = 0;
                run_pair_source(sources[i], p, reach_of[i], scratch, dummy);
            }
        } else {
            DpScratch scratch;
            std::uint64_t budget = opts.path_budget;
            for (std::size_t i = 0; i < sources.size(); ++i)
                run_pair_source(sources[i], p, reach_of[i], scratch, budget);
        }

        for (auto [u, v] : p.pairs) {
            std::size_t i = std::lower_bound(sources.begin(), sources.end(), u) - sources.begin();
            if (!reach_of[i][v]) return {false, std::make_pair(u, v)};
        }
        return {true, std::nullopt};
    }

    void run_pair_source(int s, const PairSet& p, std::vector<char>& reached, DpScratch& scratch,
                         std::uint64_t& budget) const {
        std::vector<char> wanted(g.vertex_count(), 0);
        int wanted_left = 0;
        for (auto [u, v] : p.pairs)
            if (u == s && !wanted[v]) wanted[v] = 1, ++wanted_left;
        reach(s, wanted, wanted_left, reached, scratch, budget);
    }
};

VerifyResult check_edge(const Graph& g, const EdgeColoring& col, Kind kind, const VerifyOptions& opts) {
    validate(col, g);
    if (!g.is_connected()) throw input_error("verify: graph is not connected");
    if (g.vertex_count() == 1) return {true, std::nullopt};
    if (col.injective()) return {true, std::nullopt};
    return Checker(g, kind, col.color, col.count, opts).all_pairs();
}

// With zero colors only internal-vertex-free paths qualify: accept exactly
// the pairs at distance <= 1.
VerifyResult zero_color_vertex_check(const Graph& g, const std::vector<std::pair<int, int>>* pairs) {
    if (pairs) {
        for (auto [u, v] : *pairs)
            if (!g.has_edge(u, v)) return {false, std::make_pair(u, v)};
        return {true, std::nullopt};
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) return {false, std::make_pair(u, v)};
    return {true, std::nullopt};
}

VerifyResult check_vertex(const Graph& g, const VertexColoring& col, Kind kind, const VerifyOptions& opts,
                          const PairSet* pairs) {
    validate(col, g);
    if (pairs) validate(*pairs, g);
    if (!g.is_connected()) throw input_error("verify: graph is not connected");
    if (g.vertex_count() == 1) return {true, std::nullopt};
    if (pairs && pairs->empty()) return {true, std::nullopt};
    if (col.count == 0) return zero_color_vertex_check(g, pairs ? &pairs->pairs : nullptr);
    if (col.injective()) return {true, std::nullopt};

    Checker checker(g, kind, col.color, col.count, opts);
    return pairs ? checker.pair_list(*pairs) : checker.all_pairs();
}

}  // namespace

VerifyResult is_rainbow_edge(const Graph& g, const EdgeColoring& col, const VerifyOptions& opts) {
    return check_edge(g, col, Kind::PlainEdge, opts);
}

VerifyResult is_strong_rainbow_edge(const Graph& g, const EdgeColoring& col, const VerifyOptions& opts) {
    return check_edge(g, col, Kind::StrongEdge, opts);
}

VerifyResult is_rainbow_vertex(const Graph& g, const VertexColoring& col, const VerifyOptions& opts) {
    return check_vertex(g, col, Kind::PlainVertex, opts, nullptr);
}

VerifyResult is_strong_rainbow_vertex(const Graph& g, const VertexColoring& col, const VerifyOptions& opts) {
    return check_vertex(g, col, Kind::StrongVertex, opts, nullptr);
}

VerifyResult is_subset_srvc(const Graph& g, const VertexColoring& col, const PairSet& p,
                            const VerifyOptions& opts) {
    return check_vertex(g, col, Kind::StrongVertex, opts, &p);
}

}  // namespace rainbow
