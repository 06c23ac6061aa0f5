#include "tightlat/pls.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>

namespace tightlat {

int Pls::line_through(int p, int q) const {
  for (size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    bool hp = l[0] == p || l[1] == p || l[2] == p;
    bool hq = l[0] == q || l[1] == q || l[2] == q;
    if (hp && hq) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> Pls::lines_of_point(int p) const {
  std::vector<int> out;
  for (size_t i = 0; i < lines.size(); ++i)
    if (lines[i][0] == p || lines[i][1] == p || lines[i][2] == p)
      out.push_back(static_cast<int>(i));
  return out;
}

int Pls::degree(int p) const {
  return static_cast<int>(lines_of_point(p).size());
}

int Pls::third_point(int li, int p, int q) const {
  for (int x : lines[li])
    if (x != p && x != q) return x;
  fail(Err::Internal, "line lacks a third point");
}

int Pls::max_point() const {
  require(!points.empty(), Err::InvalidPls, "empty point set");
  return points.back();
}

Pls build_pls(const std::vector<int>& points,
              const std::vector<std::vector<int>>& lines) {
  Pls p;
  p.points = sorted_unique(points);
  for (const auto& raw : lines) {
    require(raw.size() == 3, Err::LineSizeNot3, "line must list 3 points");
    std::array<int, 3> l = {raw[0], raw[1], raw[2]};
    std::sort(l.begin(), l.end());
    require(l[0] != l[1] && l[1] != l[2], Err::LineSizeNot3,
            "line points must be distinct");
    for (int x : l)
      require(contains(p.points, x), Err::UnknownPoint,
              "line uses point " + std::to_string(x));
    p.lines.push_back(l);
  }
  std::sort(p.lines.begin(), p.lines.end());
  for (size_t i = 0; i < p.lines.size(); ++i)
    for (size_t j = i + 1; j < p.lines.size(); ++j) {
      int common = 0;
      for (int x : p.lines[i])
        for (int y : p.lines[j])
          if (x == y) ++common;
      require(common <= 1, Err::LinesShareTwoPoints,
              "two lines share two points");
    }
  return p;
}

PlsComponents components_and_rank(const Pls& p) {
  PlsComponents out;
  int n = static_cast<int>(p.points.size());
  std::map<int, int> idx;
  for (int i = 0; i < n; ++i) idx[p.points[i]] = i;
  UnionFind uf(n);
  for (const auto& l : p.lines) {
    uf.unite(idx[l[0]], idx[l[1]]);
    uf.unite(idx[l[0]], idx[l[2]]);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(p.points[i]);
  for (auto& [root, pts] : groups) {
    out.components.push_back(pts);
    if (pts.size() == 1) out.isolated.push_back(pts[0]);
  }
  out.c = static_cast<int>(out.components.size());
  out.rk = n - static_cast<int>(p.lines.size());
  return out;
}

bool pls_is_acyclic(const Pls& p) {
  // A cycle in the PLS corresponds to a cycle in the point/line incidence
  // graph and vice versa (minimal incidence cycles avoid (3.1) violations).
  int n = static_cast<int>(p.points.size());
  std::map<int, int> idx;
  for (int i = 0; i < n; ++i) idx[p.points[i]] = i;
  UnionFind uf(n + static_cast<int>(p.lines.size()));
  for (size_t li = 0; li < p.lines.size(); ++li)
    for (int x : p.lines[li])
      if (!uf.unite(idx[x], n + static_cast<int>(li))) return false;
  return true;
}

std::vector<int> Cycle::support() const {
  std::vector<int> s = junctions;
  s.insert(s.end(), midpoints.begin(), midpoints.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Cycle> enumerate_cycles(const Pls& p, int max_len,
                                    int point_bound) {
  require(static_cast<int>(p.points.size()) <= point_bound,
          Err::BoundExceeded, "too many points for cycle enumeration");
  std::vector<Cycle> out;
  std::vector<int> junc;
  std::vector<int> used_lines;
  std::set<int> support;

  // Extends the junction path; support holds every point of every used line,
  // which makes the non-consecutive disjointness test a membership test.
  std::function<void()> dfs = [&]() {
    int u = junc.back();
    int j0 = junc.front();
    for (int li : p.lines_of_point(u)) {
      if (contains(used_lines, li)) continue;
      const auto& l = p.lines[li];
      for (int w : l) {
        if (w == u || w <= j0) continue;
        int m = p.third_point(li, u, w);
        if (support.count(w) || support.count(m)) continue;
        junc.push_back(w);
        used_lines.push_back(li);
        support.insert(w);
        support.insert(m);
        // Closing line: must exist, be fresh, and bring a new point.
        if (junc.size() >= 3 && junc[1] < w) {
          int close = p.line_through(w, j0);
          if (close >= 0 && !contains(used_lines, close)) {
            int q = p.third_point(close, w, j0);
            if (!support.count(q)) {
              Cycle c;
              c.junctions = junc;
              c.line_indices = used_lines;
              c.line_indices.push_back(close);
              for (size_t i = 0; i < c.junctions.size(); ++i) {
                int a = c.junctions[i];
                int b = c.junctions[(i + 1) % c.junctions.size()];
                c.midpoints.push_back(
                    p.third_point(c.line_indices[i], a, b));
              }
              out.push_back(c);
            }
          }
        }
        if (static_cast<int>(junc.size()) < max_len) dfs();
        support.erase(w);
        support.erase(m);
        used_lines.pop_back();
        junc.pop_back();
      }
    }
  };

  for (int start : p.points) {
    if (p.degree(start) < 2) continue;
    junc.assign(1, start);
    support.clear();
    support.insert(start);
    used_lines.clear();
    dfs();
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return a.junctions < b.junctions;
  });
  return out;
}

std::vector<Cycle> all_cycles(const Pls& p, int point_bound) {
  return enumerate_cycles(p, static_cast<int>(p.lines.size()), point_bound);
}

std::vector<MidpointLink> midpoint_links(const Pls& p, const Cycle& c) {
  std::set<int> jn(c.junctions.begin(), c.junctions.end());
  std::set<int> md(c.midpoints.begin(), c.midpoints.end());
  auto sup = c.support();
  std::set<int> cs(sup.begin(), sup.end());
  std::map<int, int> cline_of_mid;  // midpoint -> its C-line
  for (size_t i = 0; i < c.midpoints.size(); ++i)
    cline_of_mid[c.midpoints[i]] = c.line_indices[i];

  auto lines_intersect = [&](int la, int lb) {
    for (int x : p.lines[la])
      for (int y : p.lines[lb])
        if (x == y) return true;
    return false;
  };
  auto on_line = [&](int li, int pt) {
    const auto& l = p.lines[li];
    return l[0] == pt || l[1] == pt || l[2] == pt;
  };

  std::vector<MidpointLink> out;
  std::vector<int> tuple;
  std::vector<int> used_lines;
  std::set<int> psup;  // all points of used path lines

  std::function<void()> dfs = [&]() {
    int u = tuple.back();
    for (int li : p.lines_of_point(u)) {
      if (contains(used_lines, li)) continue;
      for (int w : p.lines[li]) {
        if (w == u) continue;
        int m = p.third_point(li, u, w);
        if (psup.count(w) || psup.count(m)) continue;
        if (cs.count(m)) continue;  // inner line point may not touch C*
        if (cs.count(w)) {
          // Terminal: w closes a link; no extension past a support point.
          int a0 = tuple.front();
          if (jn.count(w)) {
            MidpointLink ml;
            ml.kind = 1;
            ml.path = tuple;
            ml.path.push_back(w);
            ml.benign = on_line(cline_of_mid[a0], w);
            out.push_back(ml);
          } else if (a0 < w) {
            MidpointLink ml;
            ml.kind = 2;
            ml.path = tuple;
            ml.path.push_back(w);
            ml.benign = lines_intersect(cline_of_mid[a0], cline_of_mid[w]);
            out.push_back(ml);
          }
          continue;
        }
        tuple.push_back(w);
        used_lines.push_back(li);
        psup.insert(w);
        psup.insert(m);
        dfs();
        psup.erase(w);
        psup.erase(m);
        used_lines.pop_back();
        tuple.pop_back();
      }
    }
  };

  for (int a0 : c.midpoints) {
    tuple.assign(1, a0);
    used_lines.clear();
    psup.clear();
    psup.insert(a0);
    dfs();
  }
  std::sort(out.begin(), out.end(),
            [](const MidpointLink& a, const MidpointLink& b) {
              return std::tie(a.kind, a.path) < std::tie(b.kind, b.path);
            });
  return out;
}

namespace {

bool find_testifying_ordering(const Pls& p, std::vector<int>& order) {
  int t = static_cast<int>(p.lines.size());
  if (t == 0) return true;
  require(t <= 63, Err::BoundExceeded, "sparse search limited to 63 lines");
  std::map<int, int> idx;
  for (size_t i = 0; i < p.points.size(); ++i) idx[p.points[i]] = i;
  std::vector<std::array<int, 3>> li(t);
  for (int i = 0; i < t; ++i)
    for (int k = 0; k < 3; ++k) li[i][k] = idx[p.lines[i][k]];
  std::vector<int> cov(p.points.size(), 0);
  std::set<uint64_t> dead;
  std::function<bool(uint64_t, int)> rec = [&](uint64_t mask,
                                               int chosen) -> bool {
    if (chosen == t) return true;
    if (dead.count(mask)) return false;
    for (int i = 0; i < t; ++i) {
      if (mask & (1ull << i)) continue;
      if (cov[li[i][0]] && cov[li[i][1]] && cov[li[i][2]]) continue;
      for (int k = 0; k < 3; ++k) ++cov[li[i][k]];
      order.push_back(i);
      if (rec(mask | (1ull << i), chosen + 1)) return true;
      order.pop_back();
      for (int k = 0; k < 3; ++k) --cov[li[i][k]];
    }
    dead.insert(mask);
    return false;
  };
  return rec(0, 0);
}

bool is_qimp(const Pls& p) {
  for (const auto& l : p.lines) {
    bool has_qi = false;
    for (int x : l)
      if (p.degree(x) == 1) has_qi = true;
    if (!has_qi) return false;
  }
  return true;
}

// Midpoint sets per interesting line over a given cycle list.
std::map<int, std::set<int>> midpoints_by_line(const std::vector<Cycle>& cycles) {
  std::map<int, std::set<int>> mp;
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.line_indices.size(); ++i)
      mp[c.line_indices[i]].insert(c.midpoints[i]);
  return mp;
}

bool is_ump_from_cycles(const std::vector<Cycle>& cycles) {
  for (auto& [li, mids] : midpoints_by_line(cycles))
    if (mids.size() > 1) return false;
  return true;
}

}  // namespace

PlsProfile classify_pls(const Pls& p, int point_bound) {
  PlsProfile prof;
  auto cycles = all_cycles(p, point_bound);
  prof.acyclic = cycles.empty();
  prof.qimp = is_qimp(p);
  prof.ump = is_ump_from_cycles(cycles);
  prof.nmpl = true;
  prof.bmpl = true;
  for (const auto& c : cycles)
    for (const auto& ml : midpoint_links(p, c)) {
      prof.nmpl = false;
      if (!ml.benign) prof.bmpl = false;
    }
  prof.small_girth = true;
  for (const auto& c : cycles)
    if (c.length() > 4) prof.small_girth = false;
  prof.sparse = find_testifying_ordering(p, prof.testifying_ordering);
  if (!prof.sparse) prof.testifying_ordering.clear();

  prof.two_connected_qimp = false;
  if (prof.qimp && !p.points.empty() &&
      components_and_rank(p).c == 1 && !cycles.empty()) {
    std::set<int> on_interesting;
    for (auto& [li, mids] : midpoints_by_line(cycles))
      for (int x : p.lines[li]) on_interesting.insert(x);
    prof.two_connected_qimp =
        on_interesting.size() == p.points.size();
  }
  return prof;
}

Blueprint blueprint_graph(const Pls& p) {
  require(is_qimp(p), Err::NotAQimp, "input is not a QIMP");
  require(components_and_rank(p).c <= 1, Err::NotConnected,
          "blueprint needs a connected QIMP");
  auto cycles = all_cycles(p);
  auto interesting = midpoints_by_line(cycles);

  int t = static_cast<int>(p.lines.size());
  std::vector<int> plotted(t, -1);
  for (int i = 0; i < t; ++i) {
    std::vector<int> qi;
    for (int x : p.lines[i])
      if (p.degree(x) == 1) qi.push_back(x);
    auto it = interesting.find(i);
    if (it != interesting.end()) {
      require(qi.size() == 1, Err::Internal,
              "interesting line of a QIMP has one quasi-isolated point");
      plotted[i] = qi[0];
    } else {
      plotted[i] = qi.back();  // largest quasi-isolated point
    }
  }

  Blueprint bp;
  std::set<int> plotted_set(plotted.begin(), plotted.end());
  std::map<int, int> vidx;
  for (int x : p.points)
    if (!plotted_set.count(x)) {
      vidx[x] = bp.graph.add_vertex();
      bp.vertex_point.push_back(x);
    }
  for (int i = 0; i < t; ++i) {
    std::vector<int> ends;
    for (int x : p.lines[i])
      if (x != plotted[i]) ends.push_back(x);
    bp.graph.add_edge(vidx.at(ends[0]), vidx.at(ends[1]), i);
    bp.plotted.push_back(plotted[i]);
  }
  return bp;
}

Pls plot_graph(const LabeledGraph& g) {
  std::vector<int> points;
  for (int v = 0; v < g.n_vertices; ++v) points.push_back(v + 1);
  std::vector<std::vector<int>> lines;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    int mid = g.n_vertices + 1 + static_cast<int>(i);
    points.push_back(mid);
    lines.push_back({g.edges[i].first + 1, g.edges[i].second + 1, mid});
  }
  return build_pls(points, lines);
}

TreeDecomposition tree_decomposition(const Pls& p, int point_bound) {
  TreeDecomposition td;
  if (p.points.empty()) return td;
  require(components_and_rank(p).c == 1, Err::NotConnected,
          "tree decomposition needs a connected PLS");
  auto cycles = all_cycles(p, point_bound);
  require(is_ump_from_cycles(cycles), Err::NotAUmp, "input is not a UMP");

  if (is_qimp(p)) {
    td.pieces.push_back(p);
    td.glue_points.push_back(-1);
    return td;
  }

  int t = static_cast<int>(p.lines.size());
  // Lines sharing a cycle must share a piece; so must pieces sharing two
  // points or lying on a cycle of the piece/glue-point incidence graph.
  UnionFind uf(t);
  for (const auto& c : cycles)
    for (size_t i = 1; i < c.line_indices.size(); ++i)
      uf.unite(c.line_indices[0], c.line_indices[i]);

  auto piece_groups = [&]() {
    std::map<int, std::vector<int>> g;
    for (int i = 0; i < t; ++i) g[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, v] : g) out.push_back(v);
    return out;
  };
  auto piece_points = [&](const std::vector<int>& lis) {
    std::set<int> s;
    for (int li : lis)
      for (int x : p.lines[li]) s.insert(x);
    return s;
  };

  std::vector<std::vector<int>> pieces;
  for (;;) {
    pieces = piece_groups();
    int np = static_cast<int>(pieces.size());
    std::vector<std::set<int>> pts(np);
    for (int i = 0; i < np; ++i) pts[i] = piece_points(pieces[i]);
    bool merged = false;
    for (int i = 0; i < np && !merged; ++i)
      for (int j = i + 1; j < np && !merged; ++j) {
        int common = 0;
        for (int x : pts[i])
          if (pts[j].count(x)) ++common;
        if (common >= 2) {
          uf.unite(pieces[i][0], pieces[j][0]);
          merged = true;
        }
      }
    if (merged) continue;

    // Bipartite incidence: piece nodes 0..np-1, then one node per point
    // lying in two or more pieces.
    std::map<int, int> count;
    for (int i = 0; i < np; ++i)
      for (int x : pts[i]) ++count[x];
    std::vector<int> shared_pts;
    for (auto& [x, k] : count)
      if (k >= 2) shared_pts.push_back(x);
    int nn = np + static_cast<int>(shared_pts.size());
    std::vector<std::vector<int>> adj(nn);
    for (int i = 0; i < np; ++i)
      for (size_t s = 0; s < shared_pts.size(); ++s)
        if (pts[i].count(shared_pts[s])) {
          adj[i].push_back(np + static_cast<int>(s));
          adj[np + static_cast<int>(s)].push_back(i);
        }
    std::vector<int> state(nn, 0), stack, cyc;
    std::function<bool(int, int)> dfs = [&](int u, int parent) -> bool {
      state[u] = 1;
      stack.push_back(u);
      for (int v : adj[u]) {
        if (v == parent) continue;
        if (state[v] == 1) {
          cyc.assign(std::find(stack.begin(), stack.end(), v), stack.end());
          return true;
        }
        if (state[v] == 0 && dfs(v, u)) return true;
      }
      stack.pop_back();
      state[u] = 2;
      return false;
    };
    bool found = false;
    for (int u = 0; u < nn && !found; ++u)
      if (state[u] == 0) found = dfs(u, -1);
    if (!found) break;
    int first = -1;
    for (int u : cyc)
      if (u < np) {
        if (first < 0) first = u;
        uf.unite(pieces[first][0], pieces[u][0]);
      }
  }

  // The incidence structure is now a tree; BFS from the piece holding line 0.
  int np = static_cast<int>(pieces.size());
  std::vector<std::set<int>> pts(np);
  for (int i = 0; i < np; ++i) pts[i] = piece_points(pieces[i]);
  int root = 0;
  for (int i = 0; i < np; ++i)
    if (contains(pieces[i], 0)) root = i;
  std::vector<char> done(np, 0);
  std::vector<std::pair<int, int>> order;  // (piece, glue point)
  order.emplace_back(root, -1);
  done[root] = 1;
  for (size_t head = 0; head < order.size(); ++head) {
    int i = order[head].first;
    for (int j = 0; j < np; ++j) {
      if (done[j]) continue;
      for (int x : pts[i])
        if (pts[j].count(x)) {
          order.emplace_back(j, x);
          done[j] = 1;
          break;
        }
    }
  }
  require(static_cast<int>(order.size()) == np, Err::Internal,
          "piece graph unexpectedly disconnected");

  for (auto& [i, glue] : order) {
    std::vector<std::vector<int>> ls;
    for (int li : pieces[i])
      ls.push_back({p.lines[li][0], p.lines[li][1], p.lines[li][2]});
    std::vector<int> pp(pts[i].begin(), pts[i].end());
    Pls piece = build_pls(pp, ls);
    require(is_qimp(piece), Err::Internal, "piece of a UMP must be a QIMP");
    td.pieces.push_back(piece);
    td.glue_points.push_back(glue);
  }
  return td;
}

AddPathResult add_path(const Pls& p, int x, int y, int inner_count,
                       int point_bound) {
  require(x != y, Err::PathCollision, "path endpoints must differ");
  require(p.has_point(x) && p.has_point(y), Err::UnknownPoint,
          "path endpoints must exist");
  if (inner_count == 0)
    require(p.line_through(x, y) < 0, Err::PathCollision,
            "line [x,y] already present");

  AddPathResult res;
  int next = p.max_point();
  res.path.push_back(x);
  for (int i = 0; i < inner_count; ++i) res.path.push_back(++next);
  res.path.push_back(y);

  std::vector<int> points = p.points;
  std::vector<std::vector<int>> lines;
  for (const auto& l : p.lines) lines.push_back({l[0], l[1], l[2]});
  for (int i = 0; i + 1 < static_cast<int>(res.path.size()); ++i) {
    int mid = ++next;
    points.push_back(mid);
    if (i > 0) points.push_back(res.path[i]);
    lines.push_back({res.path[i], res.path[i + 1], mid});
  }
  res.pls = build_pls(points, lines);

  for (const auto& c : all_cycles(p, point_bound)) {
    std::set<int> jn(c.junctions.begin(), c.junctions.end());
    std::map<int, int> cline_of_mid;
    for (size_t i = 0; i < c.midpoints.size(); ++i)
      cline_of_mid[c.midpoints[i]] = c.line_indices[i];
    auto on_line = [&](int li, int pt) {
      const auto& l = p.lines[li];
      return l[0] == pt || l[1] == pt || l[2] == pt;
    };
    for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
      if (!cline_of_mid.count(a)) continue;
      if (jn.count(b) && on_line(cline_of_mid[a], b))
        res.benign_augmentation = true;  // type 1, same C-line
      if (cline_of_mid.count(b)) {
        for (int u : p.lines[cline_of_mid[a]])
          if (on_line(cline_of_mid[b], u)) res.benign_augmentation = true;
      }
    }
  }
  return res;
}

namespace {

struct Removable {
  std::vector<int> tuple;        // [x, z.., y]
  std::vector<int> line_indices;
};

std::vector<Removable> removable_candidates(const Pls& p) {
  std::vector<Removable> out;
  std::set<std::vector<int>> seen;
  std::vector<int> tuple, used;
  std::set<int> psup;

  std::function<void()> dfs = [&]() {
    int u = tuple.back();
    for (int li : p.lines_of_point(u)) {
      if (contains(used, li)) continue;
      for (int z : p.lines[li]) {
        if (z == u) continue;
        int m = p.third_point(li, u, z);
        if (p.degree(m) != 1) continue;
        if (psup.count(z) || psup.count(m)) continue;
        tuple.push_back(z);
        used.push_back(li);
        std::vector<int> rev(tuple.rbegin(), tuple.rend());
        if (seen.insert(std::min(tuple, rev)).second)
          out.push_back({tuple, used});
        if (p.degree(z) == 2) {
          psup.insert(z);
          psup.insert(m);
          dfs();
          psup.erase(z);
          psup.erase(m);
        }
        used.pop_back();
        tuple.pop_back();
      }
    }
  };

  for (int x : p.points) {
    tuple.assign(1, x);
    used.clear();
    psup.clear();
    psup.insert(x);
    dfs();
  }
  return out;
}

Pls remove_path(const Pls& p, const Removable& r) {
  std::set<int> gone;  // inner tuple points and path-line midpoints
  for (size_t i = 1; i + 1 < r.tuple.size(); ++i) gone.insert(r.tuple[i]);
  for (size_t i = 0; i < r.line_indices.size(); ++i)
    gone.insert(p.third_point(r.line_indices[i], r.tuple[i], r.tuple[i + 1]));
  std::vector<int> points;
  for (int x : p.points)
    if (!gone.count(x)) points.push_back(x);
  std::vector<std::vector<int>> lines;
  for (size_t li = 0; li < p.lines.size(); ++li)
    if (!contains(r.line_indices, static_cast<int>(li)))
      lines.push_back({p.lines[li][0], p.lines[li][1], p.lines[li][2]});
  return build_pls(points, lines);
}

// Does the removed tuple qualify as a benign midpoint-link of some cycle of
// the remainder? Inner points are fresh w.r.t. the remainder, so the support
// condition reduces to the endpoint roles.
int link_kind_in(const Pls& remainder, int x, int y, int point_bound) {
  bool t2 = false;
  for (const auto& c : all_cycles(remainder, point_bound)) {
    std::set<int> jn(c.junctions.begin(), c.junctions.end());
    std::map<int, int> cline_of_mid;
    for (size_t i = 0; i < c.midpoints.size(); ++i)
      cline_of_mid[c.midpoints[i]] = c.line_indices[i];
    auto on_line = [&](int li, int pt) {
      const auto& l = remainder.lines[li];
      return l[0] == pt || l[1] == pt || l[2] == pt;
    };
    for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
      if (!cline_of_mid.count(a)) continue;
      if (jn.count(b) && on_line(cline_of_mid[a], b)) return 1;
      if (cline_of_mid.count(b) && a < b) {
        for (int u : remainder.lines[cline_of_mid[a]])
          if (on_line(cline_of_mid[b], u)) t2 = true;
      }
    }
  }
  return t2 ? 2 : 0;
}

std::string serialize_pls(const Pls& p) {
  std::string s;
  for (int x : p.points) s += std::to_string(x) + ",";
  s += "|";
  for (const auto& l : p.lines)
    s += std::to_string(l[0]) + "." + std::to_string(l[1]) + "." +
         std::to_string(l[2]) + ",";
  return s;
}

}  // namespace

Pls remove_added_path(const Pls& p, const std::vector<int>& path) {
  require(path.size() >= 2, Err::InvalidPls, "path needs two endpoints");
  Removable r;
  r.tuple = path;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    int li = p.line_through(path[i], path[i + 1]);
    require(li >= 0, Err::InvalidPls, "path line missing");
    require(!contains(r.line_indices, li), Err::InvalidPls,
            "path reuses a line");
    int m = p.third_point(li, path[i], path[i + 1]);
    require(p.degree(m) == 1, Err::InvalidPls,
            "path midpoint lies on another line");
    r.line_indices.push_back(li);
  }
  for (size_t i = 1; i + 1 < path.size(); ++i)
    require(p.degree(path[i]) == 2, Err::InvalidPls,
            "inner path point lies on another line");
  return remove_path(p, r);
}

AugmentedUmpResult recognize_augmented_ump(const Pls& p, bool type1_only,
                                           int line_bound) {
  require(static_cast<int>(p.lines.size()) <= line_bound, Err::BoundExceeded,
          "augmented-UMP search bound exceeded");
  AugmentedUmpResult res;
  std::set<std::string> failed;
  int pb = std::max(40, 3 * line_bound);

  std::function<bool(const Pls&)> rec = [&](const Pls& cur) -> bool {
    if (is_ump_from_cycles(all_cycles(cur, pb))) return true;
    std::string key = serialize_pls(cur);
    if (failed.count(key)) return false;
    for (const auto& cand : removable_candidates(cur)) {
      Pls rem = remove_path(cur, cand);
      int kind =
          link_kind_in(rem, cand.tuple.front(), cand.tuple.back(), pb);
      if (kind == 0 || (type1_only && kind != 1)) continue;
      res.removed_paths.push_back(cand.tuple);
      if (rec(rem)) return true;
      res.removed_paths.pop_back();
    }
    failed.insert(key);
    return false;
  };

  res.yes = rec(p);
  if (!res.yes) res.removed_paths.clear();
  return res;
}

SplitRankResult split_rank(const Pls& p, int point_bound) {
  require(static_cast<int>(p.points.size()) <= point_bound,
          Err::BoundExceeded, "split-rank search bound exceeded");
  int c0 = components_and_rank(p).c;

  std::function<bool(const Pls&, int, Pls&)> attempt =
      [&](const Pls& cur, int budget, Pls& witness) -> bool {
    if (pls_is_acyclic(cur)) {
      witness = cur;
      return true;
    }
    if (budget == 0) return false;
    for (int pt : cur.points) {
      auto pencil = cur.lines_of_point(pt);
      int deg = static_cast<int>(pencil.size());
      if (deg < 2) continue;
      int fresh = cur.max_point() + 1;
      // Partitions of the pencil with pencil[0] staying at pt.
      for (uint64_t mask = 0; mask + 1 < (1ull << (deg - 1)); ++mask) {
        std::set<int> moved;  // lines handed to the copy
        for (int k = 1; k < deg; ++k)
          if (!(mask & (1ull << (k - 1)))) moved.insert(pencil[k]);
        std::vector<int> points = cur.points;
        points.push_back(fresh);
        std::vector<std::vector<int>> lines;
        for (size_t li = 0; li < cur.lines.size(); ++li) {
          std::vector<int> l(cur.lines[li].begin(), cur.lines[li].end());
          if (moved.count(static_cast<int>(li)))
            for (int& x : l)
              if (x == pt) x = fresh;
          lines.push_back(l);
        }
        Pls split = build_pls(points, lines);
        if (components_and_rank(split).c != c0) continue;
        if (attempt(split, budget - 1, witness)) return true;
      }
    }
    return false;
  };

  SplitRankResult res;
  for (int r = 0;; ++r) {
    Pls witness;
    if (attempt(p, r, witness)) {
      res.r_star = r;
      res.acyclic_witness = witness;
      return res;
    }
  }
}

std::vector<TriangleConfiguration> find_triangle_configurations(const Pls& p) {
  std::vector<TriangleConfiguration> out;
  int t = static_cast<int>(p.lines.size());
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b)
      for (int c = b + 1; c < t; ++c)
        for (int d = c + 1; d < t; ++d) {
          std::array<int, 4> idx = {a, b, c, d};
          std::set<int> meet_pts;
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j) {
              int common = -1, cnt = 0;
              for (int x : p.lines[idx[i]])
                for (int y : p.lines[idx[j]])
                  if (x == y) common = x, ++cnt;
              if (cnt != 1) ok = false;
              else meet_pts.insert(common);
            }
          if (!ok || meet_pts.size() != 6) continue;
          for (int i = 0; i < 4 && ok; ++i)
            for (int x : p.lines[idx[i]])
              if (!meet_pts.count(x)) ok = false;
          if (!ok) continue;
          for (int li = 0; li < t && ok; ++li) {
            if (li == a || li == b || li == c || li == d) continue;
            bool inside = true;
            for (int x : p.lines[li])
              if (!meet_pts.count(x)) inside = false;
            if (inside) ok = false;
          }
          if (!ok) continue;
          TriangleConfiguration tc;
          tc.line_indices = idx;
          tc.points.assign(meet_pts.begin(), meet_pts.end());
          out.push_back(tc);
        }
  return out;
}

}  // namespace tightlat
