#ifndef TIGHTLAT_MATROID_HPP_
#define TIGHTLAT_MATROID_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "tightlat/graph.hpp"
#include "tightlat/pls.hpp"

namespace tightlat {

// Binary matroid on named ground elements. Dependence is GF(2) linear
// dependence of the columns; dim <= 31.
struct BinaryMatroid {
  std::vector<int> ground;             // sorted, distinct
  int dim = 0;
  std::vector<std::uint32_t> columns;  // columns[i] belongs to ground[i]

  int index_of(int e) const;            // -1 if absent
  std::uint32_t column_of(int e) const;
  bool is_simple() const;  // columns nonzero and pairwise distinct
  int rank() const;
};

BinaryMatroid make_binary_matroid(const std::vector<int>& ground,
                                  const std::vector<std::uint32_t>& columns,
                                  int dim);

// Cycle matroid of a graph: the column of an edge is the GF(2) sum of its
// endpoint indicators, so rank = |V| - components.
BinaryMatroid graphic_matroid(const LabeledGraph& g);

struct RankClosure {
  int rank = 0;
  std::vector<int> closure;                       // elements spanned by x
  std::vector<std::vector<int>> circuits_within;  // minimal dependent subsets of x
};

RankClosure matroid_rank_closure(const BinaryMatroid& m, const std::vector<int>& x,
                                 int ground_bound = 16);
std::vector<std::vector<int>> matroid_circuits(const BinaryMatroid& m,
                                               int ground_bound = 16);

// Rank of an edge subset (given by labels) in the cycle matroid of g, and
// the circuit test: the labels span a single cycle.
int edge_set_rank(const LabeledGraph& g, const std::vector<int>& labels);
bool edge_set_is_circuit(const LabeledGraph& g, const std::vector<int>& labels);

// Bijection point -> ground element, one pair per point.
using PointToElement = std::vector<std::pair<int, int>>;

// Dependence condition: every line maps to a dependent triple (for graphs,
// to a triangle). The matroid must be simple.
bool check_line_pres(const Pls& p, const BinaryMatroid& m, const PointToElement& psi);
bool check_line_pres(const Pls& p, const LabeledGraph& g);  // psi = edge labeling

struct RankModelCheck {
  bool ok = false;
  int mrk = 0;
  int rk = 0;
};

// ok iff mrk(ground) = rk(points,lines). A sparse line-preserved PLS can
// never have mrk > rk, so that combination trips an internal error.
RankModelCheck check_rank_model(const Pls& p, const BinaryMatroid& m, const PointToElement& psi);
RankModelCheck check_rank_model(const Pls& p, const LabeledGraph& g);

// Midpoints of every cycle map to a circuit of g. Requires line
// preservation. The equivalent rank form (every cycle has
// |C*| - |lines of C| = rank of its image edge set) is recomputed as a
// self-check.
bool check_cycle_preserving(const Pls& p, const LabeledGraph& g, int point_bound = 40);

struct CircuitFriendlyResult {
  bool ok = false;
  std::vector<std::vector<int>> offending_circuits;  // label sets, sorted
};

// Every chordless circuit of g pulls back to a line or to the midpoint set
// of a cycle. Line preservation is not required, only bijectivity.
CircuitFriendlyResult check_circuit_friendly(const Pls& p, const LabeledGraph& g,
                                             int point_bound = 40);

// Every extendible triangle of g pulls back to a line. On wheely graphs
// this implies circuit-friendliness.
bool check_triangle_friendly(const Pls& p, const LabeledGraph& g);

struct BinaryModelResult {
  bool found = false;
  BinaryMatroid model;  // ground = the points themselves (identity bijection)
};

// Searches GF(2) labelings of the points: each line must sum to zero,
// simplicity needs distinct nonzero labels. rank_target < 0 asks for the
// maximum-rank labeling, which exists and is unique up to coordinate change
// whenever any labeling does. Deterministic: models are enumerated by row
// space in a fixed canonical order.
BinaryModelResult binary_model_search(const Pls& p, int rank_target = -1,
                                      int point_bound = 20);

// All line-preserving labelings of the given rank, one matroid per row
// space (coordinate changes act within a row space, never across two).
std::vector<BinaryMatroid> all_binary_models(const Pls& p, int rank,
                                             int subspace_bound = 200000);

struct GraphicResult {
  bool graphic = false;
  LabeledGraph graph;  // certificate; edge labels are the ground elements
};

// Exhaustive realization test: a connected matroid component of rank r can
// only come from a graph on r+1 vertices, so spanning trees carrying a basis
// are enumerated and the remaining elements must close fundamental paths.
GraphicResult is_graphic(const BinaryMatroid& m, int ground_bound = 12);

// Glue two matroids over the single shared element z. Circuits of the
// result: those of either part, plus unions of two z-circuits with z
// removed.
BinaryMatroid parallel_connection(const BinaryMatroid& m1, const BinaryMatroid& m2, int z);

struct GraphTriggerResult {
  bool is_trigger = false;
  bool vacuous = false;  // no line-preserving rank-model exists at all
  bool has_counterexample = false;
  BinaryMatroid counterexample;  // a non-graphic line-pres rank-model
};

// Enumerates every line-preserving rank-model up to coordinate change and
// asks is_graphic of each.
GraphTriggerResult graph_trigger_check(const Pls& p, int subspace_bound = 200000,
                                       int ground_bound = 12);

}  // namespace tightlat

#endif  // TIGHTLAT_MATROID_HPP_
