#ifndef TIGHTLAT_PLS_HPP_
#define TIGHTLAT_PLS_HPP_

#include <array>
#include <vector>

#include "tightlat/graph.hpp"

namespace tightlat {

// Partial linear space with 3-element lines: distinct lines meet in at most
// one point. Stored canonically: points sorted, each line sorted, lines
// sorted lexicographically.
struct Pls {
  std::vector<int> points;
  std::vector<std::array<int, 3>> lines;

  bool has_point(int p) const { return contains(points, p); }
  // Index of the unique line containing both p and q, -1 if none. This is
  // the [p,q] of path notation.
  int line_through(int p, int q) const;
  std::vector<int> lines_of_point(int p) const;  // line indices, ascending
  int degree(int p) const;
  // The point of line li other than p and q.
  int third_point(int li, int p, int q) const;
  int max_point() const;
};

// Validates and canonicalizes. Lines must have 3 distinct known points and
// pairwise share at most one point.
Pls build_pls(const std::vector<int>& points,
              const std::vector<std::vector<int>>& lines);

struct PlsComponents {
  std::vector<std::vector<int>> components;  // point sets, each sorted
  int c = 0;
  int rk = 0;  // |points| - |lines|
  std::vector<int> isolated;
};

PlsComponents components_and_rank(const Pls& p);

// Acyclicity via the point/line incidence graph: a PLS has a cycle exactly
// when that bipartite graph has one, so no cycle enumeration is needed.
bool pls_is_acyclic(const Pls& p);

// Cycle (q_1,..,q_n): a closed path of n >= 3 junctions whose closing line
// brings a new point. Canonical form: least junction first, second junction
// smaller than last.
struct Cycle {
  std::vector<int> junctions;
  std::vector<int> line_indices;  // line i joins junctions[i], junctions[i+1]
  std::vector<int> midpoints;     // midpoints[i] lies on line_indices[i]
  std::vector<int> support() const;  // C*, sorted, size 2n
  int length() const { return static_cast<int>(junctions.size()); }
};

// All cycles with at most max_len junctions, each in canonical form,
// sorted. Points bound guards the worst-case exponential enumeration.
std::vector<Cycle> enumerate_cycles(const Pls& p, int max_len,
                                    int point_bound = 40);
std::vector<Cycle> all_cycles(const Pls& p, int point_bound = 40);

// Path between a cycle midpoint and a junction (type 1, midpoint written
// first) or between two midpoints (type 2, smaller midpoint first), meeting
// the cycle support exactly in its two endpoints.
struct MidpointLink {
  int kind = 0;  // 1 or 2
  std::vector<int> path;
  bool benign = false;
};

std::vector<MidpointLink> midpoint_links(const Pls& p, const Cycle& c);

struct PlsProfile {
  bool acyclic = false;
  bool qimp = false;   // every line has a point on no other line
  bool ump = false;    // every interesting line has one midpoint over all cycles
  bool nmpl = false;   // no cycle has a midpoint-link
  bool bmpl = false;   // every midpoint-link is benign
  bool sparse = false;
  bool small_girth = false;  // every cycle has 3 or 4 lines
  bool two_connected_qimp = false;
  std::vector<int> testifying_ordering;  // line indices; empty unless sparse
};

PlsProfile classify_pls(const Pls& p, int point_bound = 40);

// Inverse of plotting: vertices are the points kept, one plotted point per
// line. Interesting lines must plot their unique quasi-isolated point; for
// the rest the largest quasi-isolated point is chosen.
struct Blueprint {
  LabeledGraph graph;             // edge labels are line indices of the input
  std::vector<int> vertex_point;  // graph vertex -> point
  std::vector<int> plotted;       // per edge: the plotted midpoint
};

Blueprint blueprint_graph(const Pls& p);

// Plot one new point on each edge: points 1..n for vertices, then one fresh
// point per edge in edge order. Connected input gives a connected QIMP.
Pls plot_graph(const LabeledGraph& g);

// Tree of QIMPes: pieces listed so that each meets the union of the earlier
// ones in exactly one point (its glue point; -1 for the first piece).
struct TreeDecomposition {
  std::vector<Pls> pieces;
  std::vector<int> glue_points;
};

TreeDecomposition tree_decomposition(const Pls& p, int point_bound = 40);

struct AddPathResult {
  Pls pls;
  std::vector<int> path;  // [x, z_1,..,z_s, y] as added
  bool benign_augmentation = false;  // path is a benign link of a cycle of the input
};

// Adds lines [x,z_1],..,[z_s,y] with fresh inner points and fresh line
// midpoints. inner_count 0 adds the single line [x,y].
AddPathResult add_path(const Pls& p, int x, int y, int inner_count,
                       int point_bound = 40);

// Inverse of add_path: deletes the path's lines together with their inner
// points and midpoints, which must lie on no other lines.
Pls remove_added_path(const Pls& p, const std::vector<int>& path);

struct AugmentedUmpResult {
  bool yes = false;
  // Paths in removal order; replaying them backwards via add_path rebuilds p.
  std::vector<std::vector<int>> removed_paths;
};

// Searches for a sequence of benign midpoint-link removals ending in a UMP.
AugmentedUmpResult recognize_augmented_ump(const Pls& p, bool type1_only,
                                           int line_bound = 16);

struct SplitRankResult {
  int r_star = 0;
  Pls acyclic_witness;
};

// Fewest point splittings (a split divides one point's line pencil over two
// copies) reaching an acyclic PLS with the component count unchanged.
// Iterative deepening; exact.
SplitRankResult split_rank(const Pls& p, int point_bound = 24);

// Four lines pairwise meeting in six distinct points which exhaust their
// union, with no further line inside those six points.
struct TriangleConfiguration {
  std::array<int, 4> line_indices;
  std::vector<int> points;  // the six points, sorted
};

std::vector<TriangleConfiguration> find_triangle_configurations(const Pls& p);

}  // namespace tightlat

#endif  // TIGHTLAT_PLS_HPP_
