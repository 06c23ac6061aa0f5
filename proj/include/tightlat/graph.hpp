#ifndef TIGHTLAT_GRAPH_HPP_
#define TIGHTLAT_GRAPH_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tightlat/core.hpp"

namespace tightlat {

// Simple labeled graph. Vertices are 0..n_vertices-1 (internal names);
// every edge carries a distinct external label (a PLS point or a
// join-irreducible id), so the label set is in bijection with the edge set.
struct LabeledGraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // each (u,v) with u < v
  std::vector<int> labels;                 // labels[i] belongs to edges[i]

  int add_vertex();
  // Fails when it would create a loop, a parallel edge or a duplicate label.
  int add_edge(int u, int v, int label);

  int edge_index(int u, int v) const;         // -1 if absent
  int edge_of_label(int label) const;         // -1 if absent
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
  std::vector<int> neighbors(int v) const;
  std::vector<int> sorted_labels() const;

  int num_components() const;
  std::vector<int> component_of_vertex() const;
  bool connected() const { return n_vertices <= 1 || num_components() == 1; }
  int rank() const { return n_vertices - num_components(); }  // graphic matroid rank

  void validate() const;
};

// Chordless circuit: vertex cycle with no chord, reported as edge label set
// plus the vertex tuple in canonical rotation/reflection.
struct ChordlessCircuit {
  std::vector<int> vertices;
  std::vector<int> edge_labels;  // sorted
};

std::vector<ChordlessCircuit> chordless_circuits(const LabeledGraph& g);

// Wheel subgraph: hub, spokes hub-r_i, rim visiting exactly the spoke ends.
// Degenerate wheels (2 spokes) are triangles; their rim is a single edge.
struct Wheel {
  int hub = -1;
  std::vector<int> rim_vertices;   // cyclic order, canonical
  std::vector<int> spoke_labels;   // aligned with rim_vertices
  std::vector<int> rim_labels;     // rim i = {rim_vertices[i], rim_vertices[i+1]}
  bool degenerate() const { return rim_vertices.size() == 2; }
};

std::vector<Wheel> wheels(const LabeledGraph& g);

// Every chordless circuit is a triangle or the rim set of a nondegenerate wheel.
bool is_wheely(const LabeledGraph& g);

// Triangles that are part of a nondegenerate wheel, as sorted label triples.
std::vector<std::array<int, 3>> extendible_triangles(const LabeledGraph& g);

// The whole graph is a wheel (hub adjacent to all, rest a single circuit),
// or a triangle. Used to confirm the shape of cycle-PLS models.
bool graph_is_wheel(const LabeledGraph& g);

std::vector<std::array<int, 3>> triangles_of(const LabeledGraph& g);  // vertex triples

// Identifies the least vertices of all edge-carrying components and drops
// edgeless vertices. The cycle matroid is unchanged and the result is
// connected, with vertex count rank+1. An edgeless input shrinks to a
// single vertex.
LabeledGraph glue_components(const LabeledGraph& g);

// Relabel vertices so that the graph is deterministic under vertex renaming:
// BFS order from the lowest-degree-sequence start. Labels untouched.
LabeledGraph canonicalize_vertices(const LabeledGraph& g);

bool graphs_isomorphic_on_labels(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace tightlat

#endif  // TIGHTLAT_GRAPH_HPP_
