#ifndef TIGHTLAT_PARTITION_HPP_
#define TIGHTLAT_PARTITION_HPP_

#include <compare>
#include <utility>
#include <vector>

#include "tightlat/lattice.hpp"

namespace tightlat {

// Partition of the ground set {1..n}. Canonical form: blocks ascending
// inside, ordered by least element. The order is refinement: finer below.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  int block_index_of(int x) const;  // -1 if x is not in the ground set
  bool same_block(int x, int y) const;
  int num_blocks() const { return static_cast<int>(blocks.size()); }
  int height() const { return n - num_blocks(); }  // height inside Part(n)

  auto operator<=>(const Partition&) const = default;
};

Partition make_partition(int n, const std::vector<std::vector<int>>& blocks);
Partition bottom_partition(int n);  // all singletons
Partition top_partition(int n);     // one block

// comp(B): the parts are the connected components of the graph ({1..n}, B).
Partition comp_partition(int n, const std::vector<std::pair<int, int>>& edges);

Partition partition_meet(const Partition& a, const Partition& b);
Partition partition_join(const Partition& a, const Partition& b);
bool partition_leq(const Partition& a, const Partition& b);
// b merges exactly two blocks of a.
bool partition_is_cover(const Partition& a, const Partition& b);

// All partitions of {1..n} in restricted-growth order. Bell numbers grow
// fast; the bound caps materialization.
std::vector<Partition> all_partitions(int n, int bound = 8);

// Part(n) materialized as a Lattice, elements indexed by the
// restricted-growth enumeration. The tables come straight from the
// partition operations; the generic cover validator is too slow at Bell(8).
struct PartLattice {
  int n = 0;
  Lattice lattice;
  std::vector<Partition> elements;
  int index_of(const Partition& q) const;  // -1 if absent
};

PartLattice build_part_lattice(int n, int bound = 8);

}  // namespace tightlat

#endif  // TIGHTLAT_PARTITION_HPP_
