#ifndef TIGHTLAT_LATTICE_HPP_
#define TIGHTLAT_LATTICE_HPP_

#include <array>
#include <utility>
#include <vector>

#include "tightlat/pls.hpp"

namespace tightlat {

// Finite lattice given by its cover relation. Elements are 0..n-1; meet and
// join tables are computed and validated at construction.
struct Lattice {
  int n = 0;
  std::vector<std::pair<int, int>> covers;  // (lower, upper), sorted
  std::vector<std::vector<char>> leq;       // leq[a][b]: a <= b
  std::vector<std::vector<int>> meet, join;
  std::vector<int> height_of;  // longest chain from bottom
  int bottom = -1, top = -1;

  int height() const { return height_of[top]; }
  bool is_cover(int a, int b) const;
  std::vector<int> upper_covers(int a) const;
  std::vector<int> lower_covers(int a) const;
  std::vector<int> atoms() const { return upper_covers(bottom); }
  std::vector<int> coatoms() const { return lower_covers(top); }
};

Lattice build_lattice(const std::vector<std::pair<int, int>>& covers);

// Direct product with index (a,b) -> a*B.n + b.
Lattice lattice_product(const Lattice& a, const Lattice& b);

bool lattices_isomorphic(const Lattice& a, const Lattice& b);

struct LatticeProfile {
  bool graded = false;
  int height = 0;
  bool modular = false;
  bool semimodular = false;
  bool distributive = false;
  bool two_distributive = false;
  bool has_covering_m4 = false;
  bool thin = false;  // two_distributive and no covering M4
};

LatticeProfile classify_lattice(const Lattice& l);

struct JoinIrreducibles {
  std::vector<int> j;               // elements with exactly one lower cover
  std::vector<int> lower_star;      // aligned: the unique lower cover
  std::vector<std::vector<int>> j_of;  // per element a: {p in J : p <= a}
};

JoinIrreducibles join_irreducibles(const Lattice& l);

// A congruence as the class id of each element, ids numbered by least member.
using Congruence = std::vector<int>;

Congruence principal_congruence(const Lattice& l, int a, int b);

struct MaximalCongruences {
  std::vector<Congruence> congruences;  // the maximal ones
  int s = 0;
  std::vector<Lattice> factors;  // quotients, subdirectly irreducible
};

// Maximal congruences of a modular lattice: each is the join of all but one
// of the distinct principal cover congruences (the atoms of the congruence
// lattice, which is Boolean in the modular case).
MaximalCongruences maximal_congruences(const Lattice& l);

Lattice quotient_lattice(const Lattice& l, const Congruence& theta);

struct JiBound {
  int lhs = 0;  // |J|
  int rhs = 0;  // 2 d(L) - s(L)
  bool sharp = false;
};

JiBound ji_bound(const Lattice& l);

// A line of L: a 3-element subset of J(L), maximal for the property that all
// pairwise joins agree (the common value is the line join). A MoPLS keeps one
// line per join value, here the lexicographically smallest.
struct Mopls {
  std::vector<int> points;                // join irreducibles, ascending
  std::vector<std::pair<int, int>> order; // p <= q pairs within points
  std::vector<std::array<int, 3>> lines;
  std::vector<int> line_join;             // aligned with lines
  Pls pls() const;
};

Mopls extract_mopls(const Lattice& l);

// Every maximal family of mutually inequivalent lines (one line chosen per
// join value in all possible ways).
std::vector<Mopls> enumerate_mopls_families(const Lattice& l,
                                            size_t family_bound = 4096);

struct ReconstructedLattice {
  Lattice lattice;
  std::vector<std::vector<int>> ideals;  // element index -> closed ideal
};

// Lattice of all order ideals X that are line-closed: |l ∩ X| >= 2 forces
// l ⊆ X. Reconstructs L from its MoPLS via a -> J(a).
ReconstructedLattice reconstruct_from_mopls(
    const std::vector<int>& points,
    const std::vector<std::pair<int, int>>& order,
    const std::vector<std::vector<int>>& lines);

// Restriction of the MoPLS to the points outside J(a) for a coatom a. Lines
// may shrink to 2 points; the sole exception to the 3-point line policy.
struct LocalizedPls {
  std::vector<int> points;
  std::vector<std::vector<int>> lines;  // sizes 2 or 3
  bool acyclic = false;  // point/line incidence graph is a forest
};

LocalizedPls localize_at_coatom(const Lattice& l, const Mopls& m, int a);

// Every coatom localization acyclic; equivalent to 2-distributivity.
bool is_locally_acyclic(const Lattice& l, const Mopls& m);

}  // namespace tightlat

#endif  // TIGHTLAT_LATTICE_HPP_
