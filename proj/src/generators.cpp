#include "tightlat/generators.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "tightlat/core.hpp"

namespace tightlat {

namespace {

int uni(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Lines pairwise share at most one point.
bool compatible(const std::vector<std::array<int, 3>>& lines,
                const std::array<int, 3>& cand) {
  for (const auto& l : lines) {
    int shared = 0;
    for (int a : l)
      for (int b : cand) shared += a == b;
    if (shared >= 2) return false;
  }
  return true;
}

}  // namespace

Pls random_pls(Rng& rng, int n_points, int n_lines) {
  require(n_points >= 3, Err::InvalidPls, "need at least 3 points");
  std::vector<std::array<int, 3>> lines;
  int budget = 60 * n_lines + 60;
  while (static_cast<int>(lines.size()) < n_lines && budget-- > 0) {
    int a = uni(rng, 1, n_points);
    int b = uni(rng, 1, n_points);
    int c = uni(rng, 1, n_points);
    if (a == b || a == c || b == c) continue;
    std::array<int, 3> cand{a, b, c};
    std::sort(cand.begin(), cand.end());
    if (!compatible(lines, cand)) continue;
    lines.push_back(cand);
  }
  std::vector<int> points(n_points);
  for (int i = 0; i < n_points; ++i) points[i] = i + 1;
  std::vector<std::vector<int>> ls;
  for (const auto& l : lines) ls.push_back({l[0], l[1], l[2]});
  return build_pls(points, ls);
}

Pls random_acyclic_pls(Rng& rng, int n_points) {
  require(n_points >= 3, Err::InvalidPls, "need at least 3 points");
  std::vector<int> support;
  std::vector<std::vector<int>> lines;
  int next = 1;
  while (next + 1 <= n_points) {
    bool attach = !support.empty() && coin(rng, 0.7);
    std::vector<int> line;
    if (attach) line.push_back(support[uni(rng, 0, (int)support.size() - 1)]);
    while ((int)line.size() < 3) line.push_back(next++);
    if (line.back() > n_points) break;  // ran out of names mid-line
    for (int q : line)
      if (!contains(support, q)) support.push_back(q);
    lines.push_back(line);
    if (coin(rng, 0.25)) break;
  }
  if (lines.empty()) {
    lines.push_back({1, 2, 3});
    support = {1, 2, 3};
  }
  std::sort(support.begin(), support.end());
  return build_pls(support, lines);
}

Pls random_qimp(Rng& rng, int n_vertices, int extra_edges) {
  require(n_vertices >= 2, Err::InvalidPls, "need at least 2 vertices");
  LabeledGraph g;
  g.n_vertices = n_vertices;
  int label = 1;
  std::set<std::pair<int, int>> present;
  for (int v = 1; v < n_vertices; ++v) {
    int u = uni(rng, 0, v - 1);
    g.add_edge(u, v, label++);
    present.insert({u, v});
  }
  int budget = 60;
  while (extra_edges > 0 && budget-- > 0) {
    int u = uni(rng, 0, n_vertices - 1);
    int v = uni(rng, 0, n_vertices - 1);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (present.count({u, v})) continue;
    g.add_edge(u, v, label++);
    present.insert({u, v});
    --extra_edges;
  }
  return plot_graph(g);
}

Pls random_ump(Rng& rng, int pieces) {
  Pls whole = random_qimp(rng, uni(rng, 3, 5), uni(rng, 0, 2));
  for (int k = 1; k < pieces; ++k) {
    Pls piece = random_qimp(rng, uni(rng, 2, 4), uni(rng, 0, 1));
    int glue_src = piece.points[uni(rng, 0, (int)piece.points.size() - 1)];
    int glue_dst = whole.points[uni(rng, 0, (int)whole.points.size() - 1)];
    int fresh = whole.max_point() + 1;
    std::vector<std::vector<int>> lines;
    for (const auto& l : whole.lines) lines.push_back({l[0], l[1], l[2]});
    std::vector<int> points = whole.points;
    std::vector<std::pair<int, int>> rename;
    auto mapped = [&](int q) {
      if (q == glue_src) return glue_dst;
      for (auto& r : rename)
        if (r.first == q) return r.second;
      rename.push_back({q, fresh});
      return fresh++;
    };
    for (const auto& l : piece.lines)
      lines.push_back({mapped(l[0]), mapped(l[1]), mapped(l[2])});
    for (int q : piece.points) {
      int m = mapped(q);
      if (!contains(points, m)) points.push_back(m);
    }
    std::sort(points.begin(), points.end());
    whole = build_pls(points, lines);
  }
  return whole;
}

AugmentedSample random_type1_augmented(Rng& rng, int links) {
  AugmentedSample out;
  // one cyclic piece guarantees a hosting cycle for every link
  out.base = random_qimp(rng, uni(rng, 3, 4), 1);
  Pls cur = out.base;
  for (int k = 0; k < links; ++k) {
    auto cycles = enumerate_cycles(cur, 6, 80);
    require(!cycles.empty(), Err::Internal, "cyclic base lost its cycles");
    const Cycle& c = cycles[uni(rng, 0, (int)cycles.size() - 1)];
    int i = uni(rng, 0, c.length() - 1);
    int x = c.midpoints[i];
    int y = coin(rng, 0.5) ? c.junctions[i]
                           : c.junctions[(i + 1) % c.length()];
    // y lies on the line of x, so a direct [x,y] line would collide with it;
    // real links here always have inner points
    auto r = add_path(cur, x, y, uni(rng, 1, 2), 80);
    require(r.benign_augmentation, Err::Internal,
            "constructed path is not a benign link");
    out.history.push_back({c.junctions, r.path, 1});
    cur = r.pls;
  }
  out.pls = cur;
  return out;
}

Lattice random_distributive_lattice(Rng& rng, int poset_size) {
  int k = std::min(poset_size, 7);
  require(k >= 1, Err::NotAPoset, "need at least one element");
  // random strict order on 0..k-1 compatible with <, transitively closed
  std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (coin(rng, 0.35)) lt[i][j] = true;
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (lt[i][m] && lt[m][j]) lt[i][j] = true;
  // enumerate downsets as bitmasks
  std::vector<int> downsets;
  for (int mask = 0; mask < (1 << k); ++mask) {
    bool ok = true;
    for (int j = 0; ok && j < k; ++j)
      if (mask >> j & 1)
        for (int i = 0; ok && i < k; ++i)
          if (lt[i][j] && !(mask >> i & 1)) ok = false;
    if (ok) downsets.push_back(mask);
  }
  std::sort(downsets.begin(), downsets.end(), [](int a, int b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> index(1 << k, -1);
  for (int i = 0; i < (int)downsets.size(); ++i) index[downsets[i]] = i;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < (int)downsets.size(); ++i)
    for (int j = 0; j < k; ++j)
      if (!(downsets[i] >> j & 1) && index[downsets[i] | (1 << j)] >= 0)
        covers.push_back({i, index[downsets[i] | (1 << j)]});
  return build_lattice(covers);
}

Lattice lattice_vertical_sum(const Lattice& lower, const Lattice& upper) {
  if (upper.n <= 1) return lower;
  if (lower.n <= 1) return upper;
  std::vector<std::pair<int, int>> covers = lower.covers;
  std::vector<int> remap(upper.n, -1);
  remap[upper.bottom] = lower.top;
  int next = lower.n;
  for (int e = 0; e < upper.n; ++e)
    if (e != upper.bottom) remap[e] = next++;
  for (auto [a, b] : upper.covers) covers.push_back({remap[a], remap[b]});
  return build_lattice(covers);
}

namespace {

Lattice chain_lattice(int covers) {
  std::vector<std::pair<int, int>> c;
  for (int i = 0; i < covers; ++i) c.push_back({i, i + 1});
  return build_lattice(c);
}

Lattice block(Rng& rng, bool allow_m4) {
  switch (uni(rng, 0, allow_m4 ? 5 : 4)) {
    case 0:
      return chain_lattice(uni(rng, 1, 3));
    case 1:
      return build_lattice({{0, 1}, {0, 2}, {1, 3}, {2, 3}});  // B2
    case 2:
      return build_lattice(
          {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});  // M3
    case 3:  // M3 on top of D2
      return build_lattice(
          {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
    case 4:
      return random_distributive_lattice(rng, uni(rng, 2, 4));
    default:
      return build_lattice(
          {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
  }
}

Lattice tower(Rng& rng, bool allow_m4, int max_size) {
  Lattice l = block(rng, allow_m4);
  int steps = uni(rng, 0, 2);
  for (int k = 0; k < steps; ++k) {
    Lattice b = block(rng, allow_m4);
    if (coin(rng, 0.5)) {
      if (l.n * b.n <= max_size) l = lattice_product(l, b);
    } else {
      if (l.n + b.n - 1 <= max_size) l = lattice_vertical_sum(l, b);
    }
  }
  return l;
}

}  // namespace

Lattice random_modular_lattice(Rng& rng, int max_size) {
  return tower(rng, true, max_size);
}

Lattice random_thin_lattice(Rng& rng, int max_size) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    Lattice l = tower(rng, false, max_size);
    if (classify_lattice(l).thin) return l;
  }
  return build_lattice({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace tightlat
