#include "tightlat/lattice.hpp"

#include <map>
#include <numeric>
#include <tuple>

namespace tightlat {

bool Lattice::is_cover(int a, int b) const {
  return std::binary_search(covers.begin(), covers.end(), std::make_pair(a, b));
}

std::vector<int> Lattice::upper_covers(int a) const {
  std::vector<int> out;
  for (auto& [x, y] : covers)
    if (x == a) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Lattice::lower_covers(int a) const {
  std::vector<int> out;
  for (auto& [x, y] : covers)
    if (y == a) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

Lattice build_lattice(const std::vector<std::pair<int, int>>& cover_pairs) {
  require(!cover_pairs.empty(), Err::NotALattice, "no covers given");
  Lattice l;
  for (auto& [a, b] : cover_pairs) {
    require(a >= 0 && b >= 0, Err::NotAPoset, "negative element index");
    require(a != b, Err::NotAPoset, "reflexive cover");
    l.n = std::max(l.n, std::max(a, b) + 1);
  }
  l.covers = sorted_unique(cover_pairs);

  std::vector<std::vector<int>> up(l.n);
  for (auto& [a, b] : l.covers) up[a].push_back(b);
  l.leq.assign(l.n, std::vector<char>(l.n, 0));
  for (int s = 0; s < l.n; ++s) {
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (l.leq[s][u]) continue;
      l.leq[s][u] = 1;
      for (int v : up[u]) stack.push_back(v);
    }
  }
  for (int a = 0; a < l.n; ++a)
    for (int b = a + 1; b < l.n; ++b)
      require(!(l.leq[a][b] && l.leq[b][a]), Err::NotAPoset,
              "cycle in cover relation");
  for (auto& [a, b] : l.covers)
    for (int c = 0; c < l.n; ++c)
      require(c == a || c == b || !(l.leq[a][c] && l.leq[c][b]),
              Err::NotCovers, "listed pair is not a cover");

  for (int x = 0; x < l.n; ++x) {
    bool minimal = true, maximal = true;
    for (int y = 0; y < l.n; ++y) {
      if (y == x) continue;
      if (l.leq[y][x]) minimal = false;
      if (l.leq[x][y]) maximal = false;
    }
    if (minimal) {
      require(l.bottom < 0, Err::NotALattice, "two minimal elements");
      l.bottom = x;
    }
    if (maximal) {
      require(l.top < 0, Err::NotALattice, "two maximal elements");
      l.top = x;
    }
  }
  require(l.bottom >= 0 && l.top >= 0, Err::NotALattice, "no bottom or top");

  // Meet of x,y: the unique lower bound of maximal height dominating all
  // others. Dually for join.
  std::vector<int> below(l.n, 0);
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      if (y != x && l.leq[y][x]) ++below[x];
  l.meet.assign(l.n, std::vector<int>(l.n, -1));
  l.join.assign(l.n, std::vector<int>(l.n, -1));
  for (int x = 0; x < l.n; ++x)
    for (int y = x; y < l.n; ++y) {
      int best_m = -1, best_j = -1;
      for (int z = 0; z < l.n; ++z) {
        if (l.leq[z][x] && l.leq[z][y] &&
            (best_m < 0 || below[z] > below[best_m]))
          best_m = z;
        if (l.leq[x][z] && l.leq[y][z] &&
            (best_j < 0 || below[z] < below[best_j]))
          best_j = z;
      }
      for (int z = 0; z < l.n; ++z) {
        if (l.leq[z][x] && l.leq[z][y])
          require(l.leq[z][best_m], Err::NotALattice, "pair without a meet");
        if (l.leq[x][z] && l.leq[y][z])
          require(l.leq[best_j][z], Err::NotALattice, "pair without a join");
      }
      l.meet[x][y] = l.meet[y][x] = best_m;
      l.join[x][y] = l.join[y][x] = best_j;
    }

  std::vector<int> order(l.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return below[a] < below[b]; });
  l.height_of.assign(l.n, 0);
  for (int x : order)
    for (int y : up[x])
      l.height_of[y] = std::max(l.height_of[y], l.height_of[x] + 1);
  return l;
}

Lattice lattice_product(const Lattice& a, const Lattice& b) {
  std::vector<std::pair<int, int>> covers;
  auto id = [&](int x, int y) { return x * b.n + y; };
  for (int x = 0; x < a.n; ++x)
    for (auto& [u, v] : b.covers) covers.emplace_back(id(x, u), id(x, v));
  for (int y = 0; y < b.n; ++y)
    for (auto& [u, v] : a.covers) covers.emplace_back(id(u, y), id(v, y));
  return build_lattice(covers);
}

bool lattices_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.n != b.n || a.covers.size() != b.covers.size()) return false;
  auto sig = [](const Lattice& l, int x) {
    return std::make_tuple(l.height_of[x],
                           static_cast<int>(l.upper_covers(x).size()),
                           static_cast<int>(l.lower_covers(x).size()));
  };
  std::vector<int> map_ab(a.n, -1);
  std::vector<char> used(b.n, 0);
  auto dfs = [&](auto&& self, int x) -> bool {
    if (x == a.n) return true;
    for (int y = 0; y < b.n; ++y) {
      if (used[y] || sig(a, x) != sig(b, y)) continue;
      bool ok = true;
      for (int p = 0; p < x && ok; ++p) {
        if (a.leq[p][x] != b.leq[map_ab[p]][y]) ok = false;
        if (a.leq[x][p] != b.leq[y][map_ab[p]]) ok = false;
      }
      if (!ok) continue;
      map_ab[x] = y;
      used[y] = 1;
      if (self(self, x + 1)) return true;
      used[y] = 0;
      map_ab[x] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

namespace {

bool is_modular(const Lattice& l) {
  for (int x = 0; x < l.n; ++x)
    for (int z = 0; z < l.n; ++z) {
      if (!l.leq[x][z]) continue;
      for (int y = 0; y < l.n; ++y)
        if (l.join[x][l.meet[y][z]] != l.meet[l.join[x][y]][z]) return false;
    }
  return true;
}

}  // namespace

LatticeProfile classify_lattice(const Lattice& l) {
  LatticeProfile prof;
  prof.height = l.height();
  prof.graded = true;
  for (auto& [a, b] : l.covers)
    if (l.height_of[b] != l.height_of[a] + 1) prof.graded = false;

  prof.modular = is_modular(l);

  prof.semimodular = true;
  for (int a = 0; a < l.n && prof.semimodular; ++a)
    for (int b = 0; b < l.n; ++b)
      if (l.is_cover(l.meet[a][b], a) && !l.is_cover(b, l.join[a][b])) {
        prof.semimodular = false;
        break;
      }

  prof.distributive = true;
  for (int x = 0; x < l.n && prof.distributive; ++x)
    for (int y = 0; y < l.n && prof.distributive; ++y)
      for (int z = 0; z < l.n; ++z)
        if (l.meet[x][l.join[y][z]] != l.join[l.meet[x][y]][l.meet[x][z]]) {
          prof.distributive = false;
          break;
        }

  auto two_dist_ok = [&](bool dual) {
    const auto& mt = dual ? l.join : l.meet;
    const auto& jn = dual ? l.meet : l.join;
    for (int a = 0; a < l.n; ++a)
      for (int b = 0; b < l.n; ++b)
        for (int c = b; c < l.n; ++c)
          for (int d = c; d < l.n; ++d) {
            int lhs = mt[a][jn[jn[b][c]][d]];
            int rhs = jn[jn[mt[a][jn[b][c]]][mt[a][jn[b][d]]]]
                        [mt[a][jn[c][d]]];
            if (lhs != rhs) return false;
          }
    return true;
  };
  prof.two_distributive =
      two_dist_ok(false) && (prof.modular || two_dist_ok(true));

  prof.has_covering_m4 = false;
  for (int b = 0; b < l.n && !prof.has_covering_m4; ++b) {
    auto ups = l.upper_covers(b);
    if (ups.size() < 4) continue;
    for (int a = 0; a < l.n; ++a) {
      int cnt = 0;
      for (int u : ups)
        if (l.is_cover(u, a)) ++cnt;
      if (cnt >= 4) {
        prof.has_covering_m4 = true;
        break;
      }
    }
  }
  prof.thin = prof.two_distributive && !prof.has_covering_m4;
  return prof;
}

JoinIrreducibles join_irreducibles(const Lattice& l) {
  JoinIrreducibles ji;
  for (int x = 0; x < l.n; ++x) {
    auto lows = l.lower_covers(x);
    if (lows.size() == 1) {
      ji.j.push_back(x);
      ji.lower_star.push_back(lows[0]);
    }
  }
  ji.j_of.resize(l.n);
  for (int a = 0; a < l.n; ++a)
    for (int p : ji.j)
      if (l.leq[p][a]) ji.j_of[a].push_back(p);
  return ji;
}

namespace {

void congruence_close(const Lattice& l, UnionFind& uf) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < l.n; ++x)
      for (int y = x + 1; y < l.n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (int z = 0; z < l.n; ++z) {
          changed |= uf.unite(l.meet[x][z], l.meet[y][z]);
          changed |= uf.unite(l.join[x][z], l.join[y][z]);
        }
      }
  }
}

Congruence canonical_classes(const Lattice& l, UnionFind& uf) {
  Congruence c(l.n, -1);
  std::map<int, int> renum;
  for (int x = 0; x < l.n; ++x) {
    int r = uf.find(x);
    auto it = renum.find(r);
    if (it == renum.end()) it = renum.emplace(r, static_cast<int>(renum.size())).first;
    c[x] = it->second;
  }
  return c;
}

}  // namespace

Congruence principal_congruence(const Lattice& l, int a, int b) {
  UnionFind uf(l.n);
  uf.unite(a, b);
  congruence_close(l, uf);
  return canonical_classes(l, uf);
}

Lattice quotient_lattice(const Lattice& l, const Congruence& theta) {
  int k = 1 + *std::max_element(theta.begin(), theta.end());
  require(k >= 2, Err::Internal, "quotient by the full congruence");
  std::vector<std::vector<char>> qleq(k, std::vector<char>(k, 0));
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      if (l.leq[x][y]) qleq[theta[x]][theta[y]] = 1;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !qleq[i][j]) continue;
      bool cover = true;
      for (int m = 0; m < k && cover; ++m)
        if (m != i && m != j && qleq[i][m] && qleq[m][j]) cover = false;
      if (cover) covers.emplace_back(i, j);
    }
  return build_lattice(covers);
}

MaximalCongruences maximal_congruences(const Lattice& l) {
  require(is_modular(l), Err::NotModular,
          "maximal congruences computed for modular lattices only");
  MaximalCongruences out;
  std::vector<Congruence> atoms;
  for (auto& [a, b] : l.covers) {
    Congruence c = principal_congruence(l, a, b);
    if (!contains(atoms, c)) atoms.push_back(c);
  }
  out.s = static_cast<int>(atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) {
    UnionFind uf(l.n);
    for (size_t j = 0; j < atoms.size(); ++j) {
      if (j == i) continue;
      for (int x = 0; x < l.n; ++x)
        for (int y = x + 1; y < l.n; ++y)
          if (atoms[j][x] == atoms[j][y]) uf.unite(x, y);
    }
    congruence_close(l, uf);
    Congruence theta = canonical_classes(l, uf);
    require(*std::max_element(theta.begin(), theta.end()) > 0, Err::Internal,
            "maximal congruence collapsed everything");
    out.congruences.push_back(theta);
    out.factors.push_back(quotient_lattice(l, theta));
  }
  return out;
}

JiBound ji_bound(const Lattice& l) {
  JiBound b;
  b.lhs = static_cast<int>(join_irreducibles(l).j.size());
  b.rhs = 2 * l.height() - maximal_congruences(l).s;
  b.sharp = b.lhs == b.rhs;
  return b;
}

Pls Mopls::pls() const {
  std::vector<std::vector<int>> ls;
  for (const auto& l : lines) ls.push_back({l[0], l[1], l[2]});
  return build_pls(points, ls);
}

namespace {

// Lines with join value v: maximal 3-cliques of the graph "p~q iff p∨q=v".
// An extendable 3-clique signals a constant-join set of 4 or more points.
std::vector<std::array<int, 3>> lines_at_value(const Lattice& l,
                                               const std::vector<int>& j,
                                               int v) {
  int k = static_cast<int>(j.size());
  std::vector<std::array<int, 3>> out;
  auto adj = [&](int a, int b) { return l.join[j[a]][j[b]] == v; };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (!adj(a, b)) continue;
      for (int c = b + 1; c < k; ++c) {
        if (!adj(a, c) || !adj(b, c)) continue;
        for (int d = 0; d < k; ++d)
          require(d == a || d == b || d == c ||
                      !(adj(a, d) && adj(b, d) && adj(c, d)),
                  Err::LineTooLarge,
                  "constant-join set with four or more points");
        out.push_back({j[a], j[b], j[c]});
      }
    }
  return out;
}

std::vector<std::pair<int, int>> order_within(const Lattice& l,
                                              const std::vector<int>& pts) {
  std::vector<std::pair<int, int>> order;
  for (int p : pts)
    for (int q : pts)
      if (p != q && l.leq[p][q]) order.emplace_back(p, q);
  return order;
}

}  // namespace

Mopls extract_mopls(const Lattice& l) {
  require(is_modular(l), Err::NotModular, "MoPLS needs a modular lattice");
  auto ji = join_irreducibles(l);
  Mopls m;
  m.points = ji.j;
  m.order = order_within(l, ji.j);
  for (int v = 0; v < l.n; ++v) {
    auto ls = lines_at_value(l, ji.j, v);
    if (ls.empty()) continue;
    m.lines.push_back(*std::min_element(ls.begin(), ls.end()));
    m.line_join.push_back(v);
  }
  m.pls();  // asserts the PLS axiom
  return m;
}

std::vector<Mopls> enumerate_mopls_families(const Lattice& l,
                                            size_t family_bound) {
  require(is_modular(l), Err::NotModular, "MoPLS needs a modular lattice");
  auto ji = join_irreducibles(l);
  std::vector<std::vector<std::array<int, 3>>> choices;
  std::vector<int> values;
  for (int v = 0; v < l.n; ++v) {
    auto ls = lines_at_value(l, ji.j, v);
    if (ls.empty()) continue;
    std::sort(ls.begin(), ls.end());
    choices.push_back(ls);
    values.push_back(v);
  }
  size_t total = 1;
  for (auto& c : choices) {
    total *= c.size();
    require(total <= family_bound, Err::BoundExceeded,
            "too many line families");
  }
  std::vector<Mopls> out;
  std::vector<size_t> pick(choices.size(), 0);
  for (size_t t = 0; t < total; ++t) {
    Mopls m;
    m.points = ji.j;
    m.order = order_within(l, ji.j);
    std::vector<std::pair<std::array<int, 3>, int>> lv;
    for (size_t i = 0; i < choices.size(); ++i)
      lv.emplace_back(choices[i][pick[i]], values[i]);
    std::sort(lv.begin(), lv.end());
    for (auto& [line, v] : lv) {
      m.lines.push_back(line);
      m.line_join.push_back(v);
    }
    m.pls();
    out.push_back(std::move(m));
    for (size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
  }
  return out;
}

ReconstructedLattice reconstruct_from_mopls(
    const std::vector<int>& points,
    const std::vector<std::pair<int, int>>& order,
    const std::vector<std::vector<int>>& lines) {
  Pls pls = build_pls(points, lines);  // validates lines and points
  int k = static_cast<int>(pls.points.size());
  require(k >= 1, Err::InvalidPls, "no points");
  require(k <= 22, Err::BoundExceeded, "too many points to enumerate ideals");
  std::map<int, int> idx;
  for (int i = 0; i < k; ++i) idx[pls.points[i]] = i;

  std::vector<std::vector<char>> le(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) le[i][i] = 1;
  for (auto& [p, q] : order) {
    require(idx.count(p) && idx.count(q), Err::UnknownPoint,
            "order uses unknown point");
    le[idx[p]][idx[q]] = 1;
  }
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (le[i][m] && le[m][j]) le[i][j] = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      require(!(le[i][j] && le[j][i]), Err::NotAPoset,
              "order relation has a cycle");

  std::vector<uint32_t> line_masks;
  for (const auto& l : pls.lines)
    line_masks.push_back((1u << idx[l[0]]) | (1u << idx[l[1]]) |
                         (1u << idx[l[2]]));

  std::vector<uint32_t> closed;
  for (uint32_t x = 0; x < (1u << k); ++x) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (!(x & (1u << i))) continue;
      for (int j = 0; j < k && ok; ++j)
        if (le[j][i] && !(x & (1u << j))) ok = false;
    }
    for (uint32_t lm : line_masks) {
      if (!ok) break;
      int c = __builtin_popcount(x & lm);
      if (c >= 2 && c != 3) ok = false;
    }
    if (ok) closed.push_back(x);
  }
  std::sort(closed.begin(), closed.end(), [](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return std::tie(pa, a) < std::tie(pb, b);
  });

  int m = static_cast<int>(closed.size());
  std::vector<std::pair<int, int>> covers;
  auto subset = [](uint32_t a, uint32_t b) { return (a & ~b) == 0; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !subset(closed[i], closed[j]) || closed[i] == closed[j])
        continue;
      bool cover = true;
      for (int t = 0; t < m && cover; ++t) {
        if (t == i || t == j) continue;
        if (subset(closed[i], closed[t]) && subset(closed[t], closed[j]) &&
            closed[t] != closed[i] && closed[t] != closed[j])
          cover = false;
      }
      if (cover) covers.emplace_back(i, j);
    }

  ReconstructedLattice out;
  out.lattice = build_lattice(covers);
  for (uint32_t x : closed) {
    std::vector<int> ideal;
    for (int i = 0; i < k; ++i)
      if (x & (1u << i)) ideal.push_back(pls.points[i]);
    out.ideals.push_back(ideal);
  }
  return out;
}

LocalizedPls localize_at_coatom(const Lattice& l, const Mopls& m, int a) {
  require(a >= 0 && a < l.n && l.is_cover(a, l.top), Err::NotACoatom,
          "localization needs a coatom");
  LocalizedPls out;
  for (int p : m.points)
    if (!l.leq[p][a]) out.points.push_back(p);
  for (const auto& line : m.lines) {
    std::vector<int> inter;
    for (int x : line)
      if (contains(out.points, x)) inter.push_back(x);
    if (inter.size() >= 2) out.lines.push_back(inter);
  }
  int np = static_cast<int>(out.points.size());
  std::map<int, int> idx;
  for (int i = 0; i < np; ++i) idx[out.points[i]] = i;
  UnionFind uf(np + static_cast<int>(out.lines.size()));
  out.acyclic = true;
  for (size_t li = 0; li < out.lines.size(); ++li)
    for (int x : out.lines[li])
      if (!uf.unite(idx[x], np + static_cast<int>(li))) out.acyclic = false;
  return out;
}

bool is_locally_acyclic(const Lattice& l, const Mopls& m) {
  for (int a : l.coatoms())
    if (!localize_at_coatom(l, m, a).acyclic) return false;
  return true;
}

}  // namespace tightlat
