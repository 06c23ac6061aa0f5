#include "tightlat/partition.hpp"

#include <map>
#include <string>

namespace tightlat {

int Partition::block_index_of(int x) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), x))
      return static_cast<int>(i);
  return -1;
}

bool Partition::same_block(int x, int y) const {
  int i = block_index_of(x);
  return i >= 0 && i == block_index_of(y);
}

namespace {

Partition canonical(int n, std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return {n, std::move(blocks)};
}

// Class representatives in {1..n} from a union-find over {0..n}.
Partition from_union_find(int n, UnionFind& uf) {
  std::map<int, std::vector<int>> cls;
  for (int x = 1; x <= n; ++x) cls[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& [r, b] : cls) blocks.push_back(std::move(b));
  return canonical(n, std::move(blocks));
}

}  // namespace

Partition make_partition(int n, const std::vector<std::vector<int>>& blocks) {
  require(n >= 1, Err::ParseError, "empty ground set");
  std::vector<char> seen(n + 1, 0);
  int covered = 0;
  for (const auto& b : blocks) {
    require(!b.empty(), Err::ParseError, "empty block");
    for (int x : b) {
      require(x >= 1 && x <= n, Err::ParseError, "element out of range");
      require(!seen[x], Err::ParseError, "element repeated across blocks");
      seen[x] = 1;
      ++covered;
    }
  }
  require(covered == n, Err::ParseError, "blocks do not cover the ground set");
  return canonical(n, blocks);
}

Partition bottom_partition(int n) {
  require(n >= 1, Err::ParseError, "empty ground set");
  std::vector<std::vector<int>> blocks(n);
  for (int x = 1; x <= n; ++x) blocks[x - 1] = {x};
  return {n, std::move(blocks)};
}

Partition top_partition(int n) {
  require(n >= 1, Err::ParseError, "empty ground set");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return {n, {all}};
}

Partition comp_partition(int n, const std::vector<std::pair<int, int>>& edges) {
  require(n >= 1, Err::ParseError, "empty ground set");
  UnionFind uf(n + 1);
  for (auto& [x, y] : edges) {
    require(x >= 1 && x <= n && y >= 1 && y <= n, Err::UnknownPoint,
            "edge endpoint outside the ground set");
    uf.unite(x, y);
  }
  return from_union_find(n, uf);
}

Partition partition_meet(const Partition& a, const Partition& b) {
  require(a.n == b.n, Err::Internal, "partition ground sets differ");
  std::map<std::pair<int, int>, std::vector<int>> cls;
  for (size_t i = 0; i < a.blocks.size(); ++i)
    for (int x : a.blocks[i]) cls[{static_cast<int>(i), b.block_index_of(x)}].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& [key, blk] : cls) blocks.push_back(std::move(blk));
  return canonical(a.n, std::move(blocks));
}

Partition partition_join(const Partition& a, const Partition& b) {
  require(a.n == b.n, Err::Internal, "partition ground sets differ");
  UnionFind uf(a.n + 1);
  for (const auto& blk : a.blocks)
    for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  for (const auto& blk : b.blocks)
    for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
  return from_union_find(a.n, uf);
}

bool partition_leq(const Partition& a, const Partition& b) {
  require(a.n == b.n, Err::Internal, "partition ground sets differ");
  for (const auto& blk : a.blocks) {
    int target = b.block_index_of(blk[0]);
    for (int x : blk)
      if (b.block_index_of(x) != target) return false;
  }
  return true;
}

bool partition_is_cover(const Partition& a, const Partition& b) {
  return a.num_blocks() == b.num_blocks() + 1 && partition_leq(a, b);
}

std::vector<Partition> all_partitions(int n, int bound) {
  require(n >= 1, Err::ParseError, "empty ground set");
  require(n <= bound, Err::BoundExceeded, "ground set too large to enumerate");
  // Restricted growth strings in lexicographic order.
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  auto emit = [&]() {
    int k = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<std::vector<int>> blocks(k);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
    out.push_back({n, std::move(blocks)});
  };
  while (true) {
    emit();
    int i = n - 1;
    for (; i >= 1; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;
    }
    if (i == 0) return out;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
}

int PartLattice::index_of(const Partition& q) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == q) return static_cast<int>(i);
  return -1;
}

PartLattice build_part_lattice(int n, int bound) {
  PartLattice pl;
  pl.n = n;
  pl.elements = all_partitions(n, bound);
  int m = static_cast<int>(pl.elements.size());

  // Key a partition by the block index of each ground element; canonical
  // block order makes this the restricted growth string.
  std::map<std::vector<int>, int> index;
  auto key_of = [n](const Partition& q) {
    std::vector<int> key(n);
    for (size_t i = 0; i < q.blocks.size(); ++i)
      for (int x : q.blocks[i]) key[x - 1] = static_cast<int>(i);
    return key;
  };
  for (int i = 0; i < m; ++i) index[key_of(pl.elements[i])] = i;

  Lattice& l = pl.lattice;
  l.n = m;
  for (int i = 0; i < m; ++i) {
    const Partition& q = pl.elements[i];
    int k = q.num_blocks();
    for (int b1 = 0; b1 < k; ++b1)
      for (int b2 = b1 + 1; b2 < k; ++b2) {
        std::vector<std::vector<int>> merged;
        for (int b = 0; b < k; ++b)
          if (b != b1 && b != b2) merged.push_back(q.blocks[b]);
        std::vector<int> joined = q.blocks[b1];
        joined.insert(joined.end(), q.blocks[b2].begin(), q.blocks[b2].end());
        std::sort(joined.begin(), joined.end());
        merged.push_back(std::move(joined));
        l.covers.emplace_back(i, index.at(key_of(canonical(n, merged))));
      }
  }
  l.covers = sorted_unique(l.covers);

  l.leq.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      l.leq[i][j] = partition_leq(pl.elements[i], pl.elements[j]);
  l.meet.assign(m, std::vector<int>(m, -1));
  l.join.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      int mt = index.at(key_of(partition_meet(pl.elements[i], pl.elements[j])));
      int jn = index.at(key_of(partition_join(pl.elements[i], pl.elements[j])));
      l.meet[i][j] = l.meet[j][i] = mt;
      l.join[i][j] = l.join[j][i] = jn;
    }
  l.height_of.assign(m, 0);
  for (int i = 0; i < m; ++i) l.height_of[i] = pl.elements[i].height();
  for (int i = 0; i < m; ++i) {
    if (pl.elements[i].num_blocks() == n) l.bottom = i;
    if (pl.elements[i].num_blocks() == 1) l.top = i;
  }
  return pl;
}

}  // namespace tightlat
