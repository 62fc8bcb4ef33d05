#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/common.hpp"

namespace rainbow {

struct Edge {
    int u = -1;  // u < v
    int v = -1;
    bool operator==(const Edge&) const = default;
};

struct HalfEdge {
    int to = -1;
    int edge = -1;  // edge id
};

// Simple undirected graph over dense vertex ids 0..n-1. Immutable after
// construction; edge ids index the lexicographically sorted edge list.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_.at(id); }
    const std::vector<HalfEdge>& incident(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int u, int v) const { return find_edge(u, v).has_value(); }
    std::optional<int> find_edge(int u, int v) const;

    bool is_connected() const;
    bool is_pendant(int v) const { return degree(v) == 1; }

    // BFS distances from s; -1 for unreachable vertices.
    std::vector<int> distances_from(int s) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<HalfEdge>> adj_;  // sorted by neighbor id
};

// Edges whose removal disconnects g. Throws input_error on disconnected input.
EdgeSet bridges(const Graph& g);

// Length of the longest shortest path. Throws input_error on disconnected input.
int diameter(const Graph& g);

// Exact minimum vertex cover (branch and bound with pendant kernelization).
VertexSet min_vertex_cover(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& x);

struct TypeClass {
    VertexSet neighborhood;  // shared neighborhood, a subset of the cover
    VertexSet members;       // vertices outside the cover with that neighborhood
};

// Partition of V\x into maximal classes with identical neighborhoods.
// Throws input_error when x is not a vertex cover.
std::vector<TypeClass> neighborhood_types(const Graph& g, const VertexSet& x);

// Corona g ∘ h: g's vertices keep ids 0..n-1, copy i of h occupies
// n + i*|V(h)| .. n + (i+1)*|V(h)| - 1 and is fully joined to vertex i.
Graph corona(const Graph& g, const Graph& h);

// A spanning tree of minimum diameter (best BFS tree over all vertex and
// edge centers). Throws input_error on disconnected input.
Graph spanning_tree_min_diameter(const Graph& g);

// Greedy search for a spanning tree with at least min_leaves leaves.
// nullopt means "not found", not "does not exist".
std::optional<Graph> max_leaf_spanning_tree(const Graph& g, int min_leaves);

// Exhaustive version for small graphs; nullopt means no such tree exists.
std::optional<Graph> max_leaf_spanning_tree_exact(const Graph& g, int min_leaves);

// Visits every spanning tree of g (as a vector of edge ids); stops early when
// the callback returns false.
void for_each_spanning_tree(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit);

int count_leaves(const Graph& tree);

Graph subgraph_from_edges(const Graph& g, const std::vector<int>& edge_ids);

}  // namespace rainbow
