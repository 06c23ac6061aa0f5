#include "tightlat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "tightlat/core.hpp"

namespace tightlat {

namespace {

int low_bit(std::uint32_t x) { return std::countr_zero(x); }

// GF(2) span keyed by leading bit; insert returns false on dependence.
struct Gf2Span {
  std::uint32_t basis[32] = {};
  int rank = 0;
  std::uint32_t reduce(std::uint32_t x) const {
    for (int b = 31; b >= 0; --b)
      if ((x >> b & 1u) && basis[b]) x ^= basis[b];
    return x;
  }
  bool insert(std::uint32_t x) {
    x = reduce(x);
    if (!x) return false;
    basis[31 - std::countl_zero(x)] = x;
    ++rank;
    return true;
  }
};

// In-place reduced echelon form, pivots on the lowest set bits in
// increasing order; zero rows dropped. Returns the rank.
int rref(std::vector<std::uint32_t>& rows) {
  int rank = 0;
  for (int bit = 0; bit < 32 && rank < static_cast<int>(rows.size()); ++bit) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i] >> bit & 1u) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != rank && (rows[i] >> bit & 1u)) rows[i] ^= rows[rank];
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

// Basis of {v : every relation row is orthogonal-sum-zero on v}, i.e. the
// solutions of rel * v = 0 over GF(2)^width.
std::vector<std::uint32_t> nullspace_basis(std::vector<std::uint32_t> rel, int width) {
  int rank = rref(rel);
  std::vector<int> pivot_col(rank);
  std::vector<bool> is_pivot(width, false);
  for (int i = 0; i < rank; ++i) {
    pivot_col[i] = low_bit(rel[i]);
    is_pivot[pivot_col[i]] = true;
  }
  std::vector<std::uint32_t> basis;
  for (int f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    std::uint32_t v = 1u << f;
    for (int i = 0; i < rank; ++i)
      if (rel[i] >> f & 1u) v |= 1u << pivot_col[i];
    basis.push_back(v);
  }
  return basis;
}

long long saturating_double(long long x, int times, long long cap) {
  for (int i = 0; i < times; ++i) {
    if (x > cap) return cap + 1;
    x *= 2;
  }
  return std::min(x, cap + 1);
}

// Number of r-dimensional subspaces of GF(2)^n, saturated at cap+1.
long long gaussian_binomial_capped(int n, int r, long long cap) {
  if (r < 0 || r > n) return 0;
  std::vector<long long> g(r + 1, 0);
  g[0] = 1;
  for (int step = 0; step < n; ++step)
    for (int j = std::min(r, step + 1); j >= 1; --j) {
      long long v = g[j - 1] + saturating_double(g[j], j, cap);
      g[j] = std::min(v, cap + 1);
    }
  return g[r];
}

// All r-dimensional subspaces of GF(2)^dim as reduced-echelon bases, in a
// fixed order: pivot columns ascending-lex, then free entries as a counter.
// fn returns true to stop early.
template <typename F>
void for_each_subspace(int dim, int r, F&& fn) {
  if (r == 0) {
    fn(std::vector<std::uint32_t>{});
    return;
  }
  std::vector<int> pivots(r);
  for (int i = 0; i < r; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(dim, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::pair<int, int>> free_pos;  // (row, column)
    for (int i = 0; i < r; ++i)
      for (int j = pivots[i] + 1; j < dim; ++j)
        if (!is_pivot[j]) free_pos.emplace_back(i, j);
    std::uint64_t patterns = 1ull << free_pos.size();
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      std::vector<std::uint32_t> rows(r);
      for (int i = 0; i < r; ++i) rows[i] = 1u << pivots[i];
      for (size_t t = 0; t < free_pos.size(); ++t)
        if (mask >> t & 1ull) rows[free_pos[t].first] |= 1u << free_pos[t].second;
      if (fn(rows)) return;
    }
    // next pivot combination
    int i = r - 1;
    while (i >= 0 && pivots[i] == dim - r + i) --i;
    if (i < 0) return;
    ++pivots[i];
    for (int t = i + 1; t < r; ++t) pivots[t] = pivots[t - 1] + 1;
  }
}

std::vector<std::uint32_t> relation_rows(const Pls& p) {
  std::map<int, int> idx;
  for (size_t i = 0; i < p.points.size(); ++i) idx[p.points[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> rel;
  rel.reserve(p.lines.size());
  for (const auto& ln : p.lines)
    rel.push_back((1u << idx[ln[0]]) | (1u << idx[ln[1]]) | (1u << idx[ln[2]]));
  return rel;
}

BinaryMatroid model_from_rows(const Pls& p, std::vector<std::uint32_t> rows) {
  int r = rref(rows);
  int k = static_cast<int>(p.points.size());
  std::vector<std::uint32_t> cols(k, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j)
      if (rows[i] >> j & 1u) cols[j] |= 1u << i;
  return make_binary_matroid(p.points, cols, r);
}

// Every line-preserving labeling of the given rank, one per row space,
// simple ones only. fn returns true to stop.
template <typename F>
void enumerate_models(const Pls& p, int rank, long long subspace_cap, F&& fn) {
  int k = static_cast<int>(p.points.size());
  require(k <= 31, Err::BoundExceeded, "too many points for GF(2) labeling");
  auto basis = nullspace_basis(relation_rows(p), k);
  int big = static_cast<int>(basis.size());
  if (rank < 0 || rank > big) return;
  long long count = gaussian_binomial_capped(big, rank, subspace_cap);
  require(count <= subspace_cap, Err::BoundExceeded,
          "too many labelings of rank " + std::to_string(rank));
  for_each_subspace(big, rank, [&](const std::vector<std::uint32_t>& sub) {
    std::vector<std::uint32_t> rows;
    rows.reserve(sub.size());
    for (std::uint32_t pick : sub) {
      std::uint32_t w = 0;
      for (int t = 0; t < big; ++t)
        if (pick >> t & 1u) w ^= basis[t];
      rows.push_back(w);
    }
    BinaryMatroid m = model_from_rows(p, std::move(rows));
    if (!m.is_simple()) return false;
    return fn(m);
  });
}

void require_label_bijection(const Pls& p, const LabeledGraph& g) {
  require(g.sorted_labels() == p.points, Err::NotABijection,
          "edge labels do not match the point set");
}

PointToElement identity_map(const Pls& p) {
  PointToElement psi;
  psi.reserve(p.points.size());
  for (int pt : p.points) psi.emplace_back(pt, pt);
  return psi;
}

struct SubgraphShape {
  int vertices = 0;
  int component_count = 0;
  bool all_degree_two = false;
};

SubgraphShape subgraph_shape(const LabeledGraph& g, const std::vector<int>& labels) {
  std::map<int, int> vid;
  std::vector<std::pair<int, int>> es;
  for (int lab : labels) {
    int ei = g.edge_of_label(lab);
    require(ei >= 0, Err::UnknownPoint, "label " + std::to_string(lab) + " has no edge");
    auto [u, v] = g.edges[ei];
    if (!vid.count(u)) vid[u] = static_cast<int>(vid.size());
    if (!vid.count(v)) vid[v] = static_cast<int>(vid.size());
    es.emplace_back(vid[u], vid[v]);
  }
  SubgraphShape s;
  s.vertices = static_cast<int>(vid.size());
  if (s.vertices == 0) return s;
  UnionFind uf(s.vertices);
  std::vector<int> deg(s.vertices, 0);
  for (auto [u, v] : es) {
    uf.unite(u, v);
    ++deg[u];
    ++deg[v];
  }
  std::set<int> roots;
  for (int i = 0; i < s.vertices; ++i) roots.insert(uf.find(i));
  s.component_count = static_cast<int>(roots.size());
  s.all_degree_two = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
  return s;
}


// Fundamental-circuit supports of the non-basis columns over the greedy
// basis, as masks over basis positions.
struct ComponentData {
  std::vector<int> basis;      // indices into the matroid
  std::vector<int> rest;       // the other indices
  std::vector<std::uint32_t> fundamental;  // aligned with rest
};

ComponentData component_data(const BinaryMatroid& m, const std::vector<int>& idxs) {
  ComponentData d;
  std::uint64_t aug[32] = {};  // low 32: column, high: combination over basis slots
  auto reduce = [&](std::uint64_t x) {
    for (int b = 31; b >= 0; --b)
      if ((x >> b & 1ull) && aug[b]) x ^= aug[b];
    return x;
  };
  for (int i : idxs) {
    std::uint64_t x = reduce(m.columns[i]);
    if (x & 0xffffffffull) {
      int slot = static_cast<int>(d.basis.size());
      d.basis.push_back(i);
      std::uint64_t v = x | (1ull << (32 + slot));
      int lead = 0;
      for (int b = 31; b >= 0; --b)
        if (x >> b & 1ull) {
          lead = b;
          break;
        }
      aug[lead] = v;
    } else {
      d.rest.push_back(i);
      d.fundamental.push_back(static_cast<std::uint32_t>(x >> 32));
    }
  }
  return d;
}

// Spanning-tree search: place the basis as an edge-labeled tree (vertices
// named in discovery order), then every remaining element must close the
// path formed by its fundamental circuit.
struct TreeSearch {
  const BinaryMatroid& m;
  const ComponentData& d;
  int r;
  std::vector<std::pair<int, int>> tree;  // per basis slot
  int used = 0;
  std::optional<LabeledGraph> result;

  TreeSearch(const BinaryMatroid& mm, const ComponentData& dd)
      : m(mm), d(dd), r(static_cast<int>(dd.basis.size())) {}

  bool forest_ok() const {
    UnionFind uf(used);
    for (const auto& [u, v] : tree)
      if (!uf.unite(u, v)) return false;
    return true;
  }

  bool close_rest() {
    std::set<std::pair<int, int>> taken(tree.begin(), tree.end());
    std::vector<std::pair<int, int>> extra;
    for (size_t t = 0; t < d.rest.size(); ++t) {
      std::vector<int> deg(used, 0);
      UnionFind uf(used);
      int edge_count = 0;
      for (int s = 0; s < r; ++s)
        if (d.fundamental[t] >> s & 1u) {
          auto [u, v] = tree[s];
          ++deg[u];
          ++deg[v];
          uf.unite(u, v);
          ++edge_count;
        }
      std::vector<int> ends;
      int root = -1, touched = 0;
      for (int v = 0; v < used; ++v) {
        if (deg[v] > 2) return false;
        if (deg[v] == 1) ends.push_back(v);
        if (deg[v] > 0) {
          ++touched;
          if (root < 0) root = uf.find(v);
          else if (uf.find(v) != root) return false;  // disconnected: not a path
        }
      }
      if (static_cast<int>(ends.size()) != 2 || touched != edge_count + 1) return false;
      std::pair<int, int> e{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
      if (!taken.insert(e).second) return false;
      extra.push_back(e);
    }
    LabeledGraph g;
    for (int v = 0; v < used; ++v) g.add_vertex();
    for (int s = 0; s < r; ++s) g.add_edge(tree[s].first, tree[s].second, m.ground[d.basis[s]]);
    for (size_t t = 0; t < d.rest.size(); ++t)
      g.add_edge(extra[t].first, extra[t].second, m.ground[d.rest[t]]);
    result = std::move(g);
    return true;
  }

  bool place(int i) {
    if (i == r) return used == r + 1 && close_rest();
    auto attempt = [&](int u, int v, int fresh) {
      tree.emplace_back(u, v);
      used += fresh;
      bool done = forest_ok() && place(i + 1);
      used -= fresh;
      tree.pop_back();
      return done;
    };
    if (used + 2 <= r + 1 && attempt(used, used + 1, 2)) return true;
    for (int u = 0; u < used; ++u) {
      if (used + 1 <= r + 1 && attempt(u, used, 1)) return true;
      for (int v = u + 1; v < used; ++v)
        if (attempt(u, v, 0)) return true;
    }
    return false;
  }
};

}  // namespace

int edge_set_rank(const LabeledGraph& g, const std::vector<int>& labels) {
  auto s = subgraph_shape(g, labels);
  return s.vertices - s.component_count;
}

bool edge_set_is_circuit(const LabeledGraph& g, const std::vector<int>& labels) {
  if (labels.size() < 3) return false;
  auto s = subgraph_shape(g, labels);
  return s.all_degree_two && s.component_count == 1;
}

int BinaryMatroid::index_of(int e) const {
  auto it = std::lower_bound(ground.begin(), ground.end(), e);
  return (it != ground.end() && *it == e) ? static_cast<int>(it - ground.begin()) : -1;
}

std::uint32_t BinaryMatroid::column_of(int e) const {
  int i = index_of(e);
  require(i >= 0, Err::UnknownPoint, "element " + std::to_string(e) + " not in the ground set");
  return columns[i];
}

bool BinaryMatroid::is_simple() const {
  for (std::uint32_t c : columns)
    if (!c) return false;
  auto s = columns;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

int BinaryMatroid::rank() const {
  Gf2Span sp;
  for (std::uint32_t c : columns) sp.insert(c);
  return sp.rank;
}

BinaryMatroid make_binary_matroid(const std::vector<int>& ground,
                                  const std::vector<std::uint32_t>& columns,
                                  int dim) {
  require(ground.size() == columns.size(), Err::Internal, "one column per ground element");
  require(dim >= 0 && dim <= 31, Err::BoundExceeded, "GF(2) dimension above 31");
  std::vector<std::pair<int, std::uint32_t>> pairs;
  pairs.reserve(ground.size());
  for (size_t i = 0; i < ground.size(); ++i) {
    require(dim == 31 || (columns[i] >> dim) == 0, Err::Internal,
            "column exceeds the stated dimension");
    pairs.emplace_back(ground[i], columns[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  BinaryMatroid m;
  m.dim = dim;
  for (auto& [e, c] : pairs) {
    require(m.ground.empty() || m.ground.back() != e, Err::GroundOverlap,
            "repeated ground element " + std::to_string(e));
    m.ground.push_back(e);
    m.columns.push_back(c);
  }
  return m;
}

BinaryMatroid graphic_matroid(const LabeledGraph& g) {
  g.validate();
  require(g.n_vertices <= 31, Err::BoundExceeded, "too many vertices for GF(2) columns");
  std::vector<int> ground;
  std::vector<std::uint32_t> cols;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    ground.push_back(g.labels[i]);
    cols.push_back((1u << g.edges[i].first) | (1u << g.edges[i].second));
  }
  return make_binary_matroid(ground, cols, g.n_vertices);
}

std::vector<std::vector<int>> matroid_circuits(const BinaryMatroid& m, int ground_bound) {
  int k = static_cast<int>(m.ground.size());
  require(k <= ground_bound && k <= 20, Err::BoundExceeded,
          "circuit enumeration over " + std::to_string(k) + " elements");
  // Supports of zero-sum subsets form the cycle space; circuits are its
  // minimal members.
  std::vector<std::uint32_t> zero_sets;
  std::vector<std::uint32_t> acc(1u << k, 0);
  for (std::uint32_t s = 1; s < (1u << k); ++s) {
    acc[s] = acc[s & (s - 1)] ^ m.columns[low_bit(s)];
    if (acc[s] == 0) zero_sets.push_back(s);
  }
  std::sort(zero_sets.begin(), zero_sets.end(),
            [](std::uint32_t a, std::uint32_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t s : zero_sets) {
    bool has_smaller = std::any_of(minimal.begin(), minimal.end(),
                                   [s](std::uint32_t c) { return (c & s) == c; });
    if (!has_smaller) minimal.push_back(s);
  }
  std::vector<std::vector<int>> out;
  out.reserve(minimal.size());
  for (std::uint32_t s : minimal) {
    std::vector<int> c;
    for (int i = 0; i < k; ++i)
      if (s >> i & 1u) c.push_back(m.ground[i]);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

RankClosure matroid_rank_closure(const BinaryMatroid& m, const std::vector<int>& x,
                                 int ground_bound) {
  auto xs = sorted_unique(x);
  Gf2Span sp;
  std::vector<std::uint32_t> xcols;
  for (int e : xs) {
    xcols.push_back(m.column_of(e));
    sp.insert(xcols.back());
  }
  RankClosure rc;
  rc.rank = sp.rank;
  for (size_t i = 0; i < m.ground.size(); ++i)
    if (sp.reduce(m.columns[i]) == 0) rc.closure.push_back(m.ground[i]);
  BinaryMatroid sub = make_binary_matroid(xs, xcols, m.dim);
  rc.circuits_within = matroid_circuits(sub, ground_bound);
  return rc;
}

bool check_line_pres(const Pls& p, const BinaryMatroid& m, const PointToElement& psi) {
  require(psi.size() == p.points.size() && psi.size() == m.ground.size(),
          Err::NotABijection, "map size differs from point or ground count");
  std::map<int, int> to_elem;
  std::set<int> hit;
  for (auto [pt, el] : psi) {
    require(p.has_point(pt), Err::NotABijection, "unknown point " + std::to_string(pt));
    require(m.index_of(el) >= 0, Err::NotABijection, "unknown element " + std::to_string(el));
    require(to_elem.emplace(pt, el).second, Err::NotABijection,
            "point " + std::to_string(pt) + " mapped twice");
    require(hit.insert(el).second, Err::NotABijection,
            "element " + std::to_string(el) + " hit twice");
  }
  require(m.is_simple(), Err::NotSimple, "matroid has a zero or repeated column");
  // Simple: a triple is dependent exactly when it sums to zero.
  for (const auto& ln : p.lines)
    if (m.column_of(to_elem[ln[0]]) ^ m.column_of(to_elem[ln[1]]) ^
        m.column_of(to_elem[ln[2]]))
      return false;
  return true;
}

bool check_line_pres(const Pls& p, const LabeledGraph& g) {
  return check_line_pres(p, graphic_matroid(g), identity_map(p));
}

RankModelCheck check_rank_model(const Pls& p, const BinaryMatroid& m,
                                const PointToElement& psi) {
  bool line_pres = check_line_pres(p, m, psi);
  RankModelCheck rc;
  rc.mrk = m.rank();
  rc.rk = components_and_rank(p).rk;
  rc.ok = rc.mrk == rc.rk;
  // A sparse system never admits a line-preserved labeling of larger rank.
  if (line_pres && rc.mrk > rc.rk && classify_pls(p).sparse)
    fail(Err::Internal, "sparse line-preserved labeling exceeds the system rank");
  return rc;
}

RankModelCheck check_rank_model(const Pls& p, const LabeledGraph& g) {
  return check_rank_model(p, graphic_matroid(g), identity_map(p));
}

bool check_cycle_preserving(const Pls& p, const LabeledGraph& g, int point_bound) {
  require(check_line_pres(p, g), Err::NotLinePreserving, "model is not line-preserving");
  bool all_ok = true;
  for (const auto& c : all_cycles(p, point_bound)) {
    bool circuit_ok = edge_set_is_circuit(g, c.midpoints);
    auto support = c.support();
    int rk_cycle = static_cast<int>(support.size()) - c.length();
    bool rank_ok = rk_cycle == edge_set_rank(g, support);
    require(circuit_ok == rank_ok, Err::Internal,
            "circuit and rank forms of cycle preservation disagree");
    all_ok = all_ok && circuit_ok;
  }
  return all_ok;
}

CircuitFriendlyResult check_circuit_friendly(const Pls& p, const LabeledGraph& g,
                                             int point_bound) {
  require_label_bijection(p, g);
  std::set<std::vector<int>> lines;
  for (const auto& ln : p.lines) lines.insert({ln[0], ln[1], ln[2]});
  std::set<std::vector<int>> midpoint_sets;
  for (const auto& c : all_cycles(p, point_bound)) {
    auto mids = c.midpoints;
    std::sort(mids.begin(), mids.end());
    midpoint_sets.insert(std::move(mids));
  }
  CircuitFriendlyResult res;
  res.ok = true;
  for (const auto& cc : chordless_circuits(g)) {
    bool fine = (cc.edge_labels.size() == 3 && lines.count(cc.edge_labels)) ||
                midpoint_sets.count(cc.edge_labels);
    if (!fine) {
      res.ok = false;
      res.offending_circuits.push_back(cc.edge_labels);
    }
  }
  return res;
}

bool check_triangle_friendly(const Pls& p, const LabeledGraph& g) {
  require_label_bijection(p, g);
  std::set<std::array<int, 3>> lines(p.lines.begin(), p.lines.end());
  for (const auto& t : extendible_triangles(g))
    if (!lines.count(t)) return false;
  return true;
}

BinaryModelResult binary_model_search(const Pls& p, int rank_target, int point_bound) {
  int k = static_cast<int>(p.points.size());
  require(k <= point_bound && k <= 31, Err::BoundExceeded,
          "labeling search over " + std::to_string(k) + " points");
  int max_rank = static_cast<int>(nullspace_basis(relation_rows(p), k).size());
  int target = rank_target < 0 ? max_rank : rank_target;
  BinaryModelResult res;
  enumerate_models(p, target, 2000000, [&](const BinaryMatroid& m) {
    res.found = true;
    res.model = m;
    return true;
  });
  return res;
}

std::vector<BinaryMatroid> all_binary_models(const Pls& p, int rank, int subspace_bound) {
  std::vector<BinaryMatroid> out;
  enumerate_models(p, rank, subspace_bound, [&](const BinaryMatroid& m) {
    out.push_back(m);
    return false;
  });
  return out;
}

GraphicResult is_graphic(const BinaryMatroid& m, int ground_bound) {
  int k = static_cast<int>(m.ground.size());
  require(k <= ground_bound, Err::BoundExceeded,
          "graphic search over " + std::to_string(k) + " elements");
  GraphicResult res;
  if (k == 0) {
    res.graphic = true;
    return res;
  }
  // Loops and parallel pairs have no simple-graph realization.
  if (!m.is_simple()) return res;
  UnionFind uf(k);
  for (const auto& c : matroid_circuits(m, ground_bound)) {
    int first = m.index_of(c[0]);
    for (size_t i = 1; i < c.size(); ++i) uf.unite(first, m.index_of(c[i]));
  }
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < k; ++i) comps[uf.find(i)].push_back(i);
  LabeledGraph out;
  for (auto& [root, idxs] : comps) {
    if (idxs.size() == 1) {  // element on no circuit: a bridge
      int a = out.add_vertex(), b = out.add_vertex();
      out.add_edge(a, b, m.ground[idxs[0]]);
      continue;
    }
    ComponentData d = component_data(m, idxs);
    TreeSearch search(m, d);
    if (!search.place(0)) return res;
    const LabeledGraph& part = *search.result;
    int offset = out.n_vertices;
    for (int v = 0; v < part.n_vertices; ++v) out.add_vertex();
    for (size_t e = 0; e < part.edges.size(); ++e)
      out.add_edge(part.edges[e].first + offset, part.edges[e].second + offset,
                   part.labels[e]);
  }
  res.graphic = true;
  res.graph = std::move(out);
  return res;
}

BinaryMatroid parallel_connection(const BinaryMatroid& m1, const BinaryMatroid& m2, int z) {
  require(m1.index_of(z) >= 0 && m2.index_of(z) >= 0, Err::UnknownPoint,
          "shared element " + std::to_string(z) + " missing from a part");
  for (int e : m1.ground)
    require(e == z || m2.index_of(e) < 0, Err::GroundOverlap,
            "element " + std::to_string(e) + " lies in both parts");
  require(m1.column_of(z) != 0 && m2.column_of(z) != 0, Err::NotSimple,
          "shared element is a loop");
  // Row operations sending the z column to the first unit vector.
  auto normalize = [z](const BinaryMatroid& m) {
    std::vector<std::uint32_t> cols = m.columns;
    std::uint32_t cz = m.column_of(z);
    int t = low_bit(cz);
    if (t != 0)
      for (auto& c : cols) {
        std::uint32_t b0 = c & 1u, bt = c >> t & 1u;
        if (b0 != bt) c ^= 1u | (1u << t);
      }
    cz = cols[m.index_of(z)];
    for (int i = 1; i < m.dim; ++i)
      if (cz >> i & 1u)
        for (auto& c : cols)
          if (c & 1u) c ^= 1u << i;
    return cols;
  };
  auto c1 = normalize(m1);
  auto c2 = normalize(m2);
  int dim = m1.dim + m2.dim - 1;
  require(dim <= 31, Err::BoundExceeded, "glued dimension above 31");
  std::vector<int> ground;
  std::vector<std::uint32_t> cols;
  for (size_t i = 0; i < m1.ground.size(); ++i) {
    ground.push_back(m1.ground[i]);
    cols.push_back(c1[i]);
  }
  for (size_t i = 0; i < m2.ground.size(); ++i) {
    if (m2.ground[i] == z) continue;
    ground.push_back(m2.ground[i]);
    cols.push_back((c2[i] & 1u) | ((c2[i] >> 1) << m1.dim));
  }
  return make_binary_matroid(ground, cols, dim);
}

GraphTriggerResult graph_trigger_check(const Pls& p, int subspace_bound, int ground_bound) {
  GraphTriggerResult res;
  int target = components_and_rank(p).rk;
  bool any = false;
  if (target >= 0) {
    enumerate_models(p, target, subspace_bound, [&](const BinaryMatroid& m) {
      any = true;
      if (!is_graphic(m, ground_bound).graphic) {
        res.has_counterexample = true;
        res.counterexample = m;
        return true;
      }
      return false;
    });
  }
  res.is_trigger = !res.has_counterexample;
  res.vacuous = !any;
  return res;
}

}  // namespace tightlat
