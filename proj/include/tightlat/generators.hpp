#ifndef TIGHTLAT_GENERATORS_HPP_
#define TIGHTLAT_GENERATORS_HPP_

#include <random>
#include <vector>

#include "tightlat/lattice.hpp"
#include "tightlat/modeling.hpp"
#include "tightlat/pls.hpp"

namespace tightlat {

// All generators are deterministic functions of the engine state, so a test
// that seeds the engine replays the same instances forever.
using Rng = std::mt19937_64;

// Random 3-element lines over 1..n_points, drawn until n_lines are placed or
// the attempt budget runs out; lines pairwise share at most one point. The
// result may be disconnected, cyclic, and may leave isolated points.
Pls random_pls(Rng& rng, int n_points, int n_lines);

// Tree of lines: each new line reuses at most one point of the current
// support, so the point/line incidence graph stays a forest.
Pls random_acyclic_pls(Rng& rng, int n_points);

// Plots a random connected graph on n_vertices with extra_edges edges beyond
// a spanning tree. The plot of a connected graph is a connected QIMP.
Pls random_qimp(Rng& rng, int n_vertices, int extra_edges);

// Tree of QIMPes: random QIMP pieces glued at single points.
Pls random_ump(Rng& rng, int pieces);

struct AugmentedSample {
  Pls base;  // the unaugmented UMP
  Pls pls;   // after all additions
  std::vector<AugmentationRecord> history;  // in addition order
};

// Grows a cyclic UMP by benign type-1 midpoint-links: each step picks a
// cycle, one of its midpoints x, a junction y on the line of x, and calls
// add_path with 0..2 inner points.
AugmentedSample random_type1_augmented(Rng& rng, int links);

// Lattice of downsets of a random poset on poset_size elements, so always
// distributive. Sizes grow fast; poset_size is capped at 10.
Lattice random_distributive_lattice(Rng& rng, int poset_size);

// Random tower of direct products and vertical sums over small modular
// blocks (chains, B2, M3, M4, a stacked M3). Result size <= max_size.
Lattice random_modular_lattice(Rng& rng, int max_size = 60);

// The same tower drawn from thin blocks only, re-checked thin.
Lattice random_thin_lattice(Rng& rng, int max_size = 60);

// Identifies the top of lower with the bottom of upper. Vertical sums
// preserve modularity and thinness; mostly a building block for the two
// generators above, exposed for tests.
Lattice lattice_vertical_sum(const Lattice& lower, const Lattice& upper);

}  // namespace tightlat

#endif  // TIGHTLAT_GENERATORS_HPP_
