#pragma once

#include <iosfwd>
#include <string>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/reductions.hpp"

namespace rainbow {

// Edge-list format: "n m" then m lines "u v" (0-based, u < v); '#' starts a
// comment. A DIMACS-like header "p edge n m" with "e u v" lines (1-based) is
// also accepted.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Coloring format: header "c <count> <edge|vertex>", then one "id color" line
// per item.
EdgeColoring read_edge_coloring(std::istream& in, const Graph& g);
VertexColoring read_vertex_coloring(std::istream& in, const Graph& g);
void write_coloring(std::ostream& out, const EdgeColoring& c);
void write_coloring(std::ostream& out, const VertexColoring& c);
void write_coloring_file(const std::string& path, const EdgeColoring& c);
void write_coloring_file(const std::string& path, const VertexColoring& c);

// Pair-set format: one "u v" line per pair.
PairSet read_pairs(std::istream& in, const Graph& g);
PairSet read_pairs_file(const std::string& path, const Graph& g);
void write_pairs(std::ostream& out, const PairSet& p);
void write_pairs_file(const std::string& path, const PairSet& p);

// Role-table sidecar: one "id role origin-ids" line per vertex.
void write_roles(std::ostream& out, const std::vector<RoleEntry>& roles);
void write_roles_file(const std::string& path, const std::vector<RoleEntry>& roles);

// DOT export (convenience); coloring may be null.
void write_dot(std::ostream& out, const Graph& g, const VertexColoring* vc = nullptr,
               const EdgeColoring* ec = nullptr);

std::string fnv1a_checksum(const std::string& payload);

}  // namespace rainbow
