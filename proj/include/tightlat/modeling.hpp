#ifndef TIGHTLAT_MODELING_HPP_
#define TIGHTLAT_MODELING_HPP_

#include <vector>

#include "tightlat/graph.hpp"
#include "tightlat/pls.hpp"

namespace tightlat {

// Result of the triangle-gluing search. flips holds the orientation bits in
// gluing order; the search returns the first success in binary counting
// order, so the result is reproducible.
struct GlueResult {
  bool found = false;
  LabeledGraph graph;
  std::vector<int> flips;
};

// Places one triangle per line and glues same-labeled edges, trying both
// orientations at every gluing. With require_rank only graphs with mrk = rk
// are kept. An exhausted search proves there is no graph in the glued class;
// graphs that identify further vertices are outside the class.
GlueResult naive_glue_search(const Pls& p, bool require_rank,
                             int line_bound = 16);

// Every simple graph the gluing search can produce, in flip order.
std::vector<LabeledGraph> naive_glue_all(const Pls& p, int line_bound = 16);

// Hub-and-spoke graph of a QIMP: per 2-connected block, blueprint vertices
// become spokes of a fresh hub and plotted midpoints become rims; blocks
// sharing a point get that point's two edges identified. Isolated points
// turn into detached bridges. Line-pres rank-models p.
LabeledGraph standard_graph_qimp(const Pls& p);

// The same construction for a UMP (a tree of QIMPes per block). The result
// is additionally cycle-preserving and circuit-friendly; both are re-checked.
LabeledGraph standard_graph_ump(const Pls& p);

// A PLS together with a graph whose edge labels are exactly its points.
struct GraphModel {
  Pls pls;
  LabeledGraph graph;
};

// Extends pls and graph along the path [x, z_1,..,z_s, y]: x and y are
// existing points whose edges must share a vertex, the z_i are fresh names
// supplied by the caller, and line midpoints are invented as in add_path.
// s = 0 adds one edge closing a triangle; s >= 1 adds s new vertices wearing
// a dented wheel. mrk and rk grow by the same amount, so a rank-model stays
// a rank-model.
GraphModel extend_graph_with_path(const GraphModel& model,
                                  const std::vector<int>& path,
                                  int point_bound = 40);

// One benign midpoint-link addition: the hosting cycle as its junction
// tuple, the added path, and whether it runs midpoint-to-junction (type 1)
// or midpoint-to-midpoint (type 2).
struct AugmentationRecord {
  std::vector<int> cycle;
  std::vector<int> link;
  int type = 0;
};

enum class AugmentMode { small_girth, type1 };

// Builds a line-pres rank-modeling graph for an augmented UMP by replaying
// its history over the standard graph of the stripped UMP. In small_girth
// mode a type-2 link needs a hosting cycle of at most 4 lines: the cycle's
// image is then provably a wheel whose two midpoint rims are incident. In
// type1 mode every link must be type 1 and the result is re-checked
// circuit-friendly.
GraphModel model_augmented_ump(const Pls& p,
                               const std::vector<AugmentationRecord>& history,
                               AugmentMode mode, int point_bound = 40);

// Rebuilds full AugmentationRecords from the bare paths that
// recognize_augmented_ump reports (given in removal order): for each stage
// the hosting cycle is the first one, in enumeration order, that makes the
// path a benign midpoint-link. Type 1 records orient the path midpoint
// first, type 2 records smaller midpoint first.
std::vector<AugmentationRecord> augmentation_records(
    const Pls& p, const std::vector<std::vector<int>>& removed_paths,
    int point_bound = 40);

}  // namespace tightlat

#endif  // TIGHTLAT_MODELING_HPP_
