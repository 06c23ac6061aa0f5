#include "tightlat/modeling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "tightlat/core.hpp"
#include "tightlat/matroid.hpp"

namespace tightlat {
namespace {

// ---------------------------------------------------------------------------
// Triangle gluing.

struct GlueStep {
  int point = 0;
  std::vector<int> line_idx;  // incident lines, ascending; first is reference
};

struct GlueSetup {
  std::vector<GlueStep> steps;
  int slots = 0;
  int total_bits = 0;
};

// Edge of `label` inside line li's isolated triangle, as a slot pair.
std::pair<int, int> slot_edge(const Pls& p, int li, int label) {
  const auto& ln = p.lines[li];
  int base = 3 * li;
  if (ln[0] == label) return {base + 1, base + 2};
  if (ln[1] == label) return {base, base + 2};
  return {base, base + 1};
}

GlueSetup glue_setup(const Pls& p, int line_bound) {
  int nl = static_cast<int>(p.lines.size());
  require(nl <= line_bound, Err::BoundExceeded,
          "gluing search limited to " + std::to_string(line_bound) + " lines");
  GlueSetup s;
  s.slots = 3 * nl;
  for (int q : p.points) {
    auto incid = p.lines_of_point(q);
    if (incid.size() >= 2) s.steps.push_back({q, incid});
  }
  // Most constrained first so duds surface early.
  std::stable_sort(s.steps.begin(), s.steps.end(),
                   [](const GlueStep& a, const GlueStep& b) {
                     if (a.line_idx.size() != b.line_idx.size())
                       return a.line_idx.size() > b.line_idx.size();
                     return a.point < b.point;
                   });
  for (const auto& st : s.steps)
    s.total_bits += static_cast<int>(st.line_idx.size()) - 1;
  require(s.total_bits <= 22, Err::BoundExceeded,
          "gluing search has too many orientation choices");
  return s;
}

// Simplicity of the glued configuration: no edge collapses to a loop and no
// two labels sit on one vertex-class pair.
bool glue_ok(const Pls& p, UnionFind& uf) {
  std::map<std::pair<int, int>, int> seen;
  for (size_t li = 0; li < p.lines.size(); ++li)
    for (int label : p.lines[li]) {
      auto [u, v] = slot_edge(p, static_cast<int>(li), label);
      int ru = uf.find(u), rv = uf.find(v);
      if (ru == rv) return false;
      if (ru > rv) std::swap(ru, rv);
      auto [it, fresh] = seen.emplace(std::make_pair(ru, rv), label);
      if (!fresh && it->second != label) return false;
    }
  return true;
}

LabeledGraph glue_to_graph(const Pls& p, UnionFind& uf) {
  LabeledGraph g;
  std::map<int, int> vid;
  auto vtx = [&](int slot) {
    int r = uf.find(slot);
    auto it = vid.find(r);
    if (it != vid.end()) return it->second;
    int v = g.add_vertex();
    vid.emplace(r, v);
    return v;
  };
  std::set<int> done;
  for (size_t li = 0; li < p.lines.size(); ++li)
    for (int label : p.lines[li]) {
      if (!done.insert(label).second) continue;
      auto [u, v] = slot_edge(p, static_cast<int>(li), label);
      g.add_edge(vtx(u), vtx(v), label);
    }
  for (int q : p.points)
    if (p.degree(q) == 0) {
      int u = g.add_vertex(), v = g.add_vertex();
      g.add_edge(u, v, q);
    }
  return g;
}

// Visits every dud-free completed assignment in binary flip order until fn
// returns true. flips mirrors the current choice path.
bool glue_dfs(const Pls& p, const GlueSetup& s, size_t level, UnionFind& uf,
              std::vector<int>& flips,
              const std::function<bool(UnionFind&, const std::vector<int>&)>& fn) {
  if (level == s.steps.size()) return fn(uf, flips);
  const auto& st = s.steps[level];
  int k = static_cast<int>(st.line_idx.size()) - 1;
  auto ref = slot_edge(p, st.line_idx[0], st.point);
  for (int mask = 0; mask < (1 << k); ++mask) {
    UnionFind next = uf;
    for (int i = 0; i < k; ++i) {
      auto e = slot_edge(p, st.line_idx[i + 1], st.point);
      if (mask >> (k - 1 - i) & 1) {
        next.unite(ref.first, e.second);
        next.unite(ref.second, e.first);
      } else {
        next.unite(ref.first, e.first);
        next.unite(ref.second, e.second);
      }
    }
    if (!glue_ok(p, next)) continue;
    for (int i = 0; i < k; ++i) flips.push_back(mask >> (k - 1 - i) & 1);
    if (glue_dfs(p, s, level + 1, next, flips, fn)) return true;
    flips.resize(flips.size() - k);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Standard graphs.

// 2-connected blocks as line index sets: lines sharing a cycle are united,
// the rest stay singletons. Ordered by least line index.
std::vector<std::vector<int>> block_line_sets(const Pls& p, int point_bound) {
  int nl = static_cast<int>(p.lines.size());
  if (nl == 0) return {};
  UnionFind uf(nl);
  for (const auto& c : all_cycles(p, point_bound))
    for (size_t i = 1; i < c.line_indices.size(); ++i)
      uf.unite(c.line_indices[0], c.line_indices[i]);
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < nl; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [r, v] : by_root) out.push_back(std::move(v));
  return out;
}

Pls block_pls(const Pls& p, const std::vector<int>& line_idx) {
  std::vector<int> pts;
  std::vector<std::vector<int>> lines;
  for (int li : line_idx) {
    const auto& ln = p.lines[li];
    pts.insert(pts.end(), ln.begin(), ln.end());
    lines.push_back({ln[0], ln[1], ln[2]});
  }
  return build_pls(sorted_unique(pts), lines);
}

// Hub-and-spoke graph of one block: blueprint vertices hang off a fresh hub,
// plotted midpoints run between them.
LabeledGraph block_standard_graph(const Pls& block) {
  Blueprint bp = blueprint_graph(block);
  LabeledGraph g;
  int hub = g.add_vertex();
  std::vector<int> vmap(bp.graph.n_vertices);
  for (int i = 0; i < bp.graph.n_vertices; ++i) vmap[i] = g.add_vertex();
  for (int i = 0; i < bp.graph.n_vertices; ++i)
    g.add_edge(hub, vmap[i], bp.vertex_point[i]);
  for (size_t e = 0; e < bp.graph.edges.size(); ++e)
    g.add_edge(vmap[bp.graph.edges[e].first], vmap[bp.graph.edges[e].second],
               bp.plotted[e]);
  return g;
}

// Adds `local` to g; when glue_point >= 0 the edge carrying that label on
// both sides is identified endpoint-to-endpoint, smaller names first. The
// other identification is a Whitney twist and yields the same cycle matroid.
void merge_graph(LabeledGraph& g, const LabeledGraph& local, int glue_point) {
  std::vector<int> vmap(local.n_vertices, -1);
  int skip_edge = -1;
  if (glue_point >= 0) {
    int ei = g.edge_of_label(glue_point);
    int ej = local.edge_of_label(glue_point);
    require(ei >= 0 && ej >= 0, Err::Internal, "glue point lacks an edge");
    vmap[local.edges[ej].first] = g.edges[ei].first;
    vmap[local.edges[ej].second] = g.edges[ei].second;
    skip_edge = ej;
  }
  for (int v = 0; v < local.n_vertices; ++v)
    if (vmap[v] < 0) vmap[v] = g.add_vertex();
  for (size_t e = 0; e < local.edges.size(); ++e) {
    if (static_cast<int>(e) == skip_edge) continue;
    g.add_edge(vmap[local.edges[e].first], vmap[local.edges[e].second],
               local.labels[e]);
  }
}

LabeledGraph standard_graph_engine(const Pls& p, int point_bound) {
  auto blocks = block_line_sets(p, point_bound);
  std::vector<Pls> sub;
  sub.reserve(blocks.size());
  for (const auto& ls : blocks) sub.push_back(block_pls(p, ls));
  int n = static_cast<int>(sub.size());
  LabeledGraph g;
  std::vector<char> placed(n, 0);
  std::set<int> seen_points;
  for (int done = 0; done < n; ++done) {
    int pick = -1, glue = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
      if (placed[i]) continue;
      std::vector<int> shared;
      for (int q : sub[i].points)
        if (seen_points.count(q)) shared.push_back(q);
      if (shared.empty()) continue;
      require(shared.size() == 1, Err::Internal,
              "blocks meet the placed part in more than one point");
      pick = i;
      glue = shared[0];
    }
    if (pick < 0)
      for (int i = 0; i < n && pick < 0; ++i)
        if (!placed[i]) pick = i;
    int before = g.rank();
    LabeledGraph local = block_standard_graph(sub[pick]);
    merge_graph(g, local, glue);
    require(g.rank() == before + local.rank() - (glue >= 0 ? 1 : 0),
            Err::Internal, "block merge broke the rank bookkeeping");
    placed[pick] = 1;
    for (int q : sub[pick].points) seen_points.insert(q);
  }
  for (int q : p.points)
    if (p.degree(q) == 0) {
      int u = g.add_vertex(), v = g.add_vertex();
      g.add_edge(u, v, q);
    }
  require(check_line_pres(p, g), Err::Internal,
          "standard graph is not line-preserving");
  require(check_rank_model(p, g).ok, Err::Internal,
          "standard graph misses the rank");
  return g;
}

LabeledGraph standard_checked(const Pls& p) {
  LabeledGraph g = standard_graph_engine(p, 40);
  require(check_cycle_preserving(p, g), Err::Internal,
          "standard graph fails cycle preservation");
  require(check_circuit_friendly(p, g).ok, Err::Internal,
          "standard graph fails circuit friendliness");
  return g;
}

// ---------------------------------------------------------------------------
// Path extension.

// Grows g along path [x, z_1,..,z_s, y] with the given segment midpoints:
// the new inner spokes plus the rim chain form a wheel dented at the x-y
// rim. Adds exactly |path|-2 vertices, so mrk grows in step with rk.
void grow_graph_along_path(LabeledGraph& g, const std::vector<int>& path,
                           const std::vector<int>& mids) {
  int n = static_cast<int>(path.size());
  int ex = g.edge_of_label(path.front());
  int ey = g.edge_of_label(path.back());
  require(ex >= 0 && ey >= 0, Err::UnknownPoint,
          "path endpoints carry no edges");
  auto [xa, xb] = g.edges[ex];
  auto [ya, yb] = g.edges[ey];
  int v = -1, a = -1, b = -1;
  if (xa == ya) {
    v = xa, a = xb, b = yb;
  } else if (xa == yb) {
    v = xa, a = xb, b = ya;
  } else if (xb == ya) {
    v = xb, a = xa, b = yb;
  } else if (xb == yb) {
    v = xb, a = xa, b = ya;
  }
  require(v >= 0, Err::EdgesNotIncident, "endpoint edges share no vertex");
  if (n == 2) {
    require(!g.adjacent(a, b), Err::PathCollision,
            "triangle-closing edge already present");
    g.add_edge(a, b, mids[0]);
    return;
  }
  std::vector<int> w(n - 2);
  for (int i = 0; i < n - 2; ++i) w[i] = g.add_vertex();
  for (int i = 1; i + 1 < n; ++i) g.add_edge(v, w[i - 1], path[i]);
  g.add_edge(a, w[0], mids[0]);
  for (int i = 1; i + 2 < n; ++i) g.add_edge(w[i - 1], w[i], mids[i]);
  g.add_edge(w[n - 3], b, mids[n - 2]);
}

std::vector<int> canonical_junctions(std::vector<int> j) {
  auto it = std::min_element(j.begin(), j.end());
  std::rotate(j.begin(), it, j.end());
  if (j.size() >= 3 && j[1] > j.back()) std::reverse(j.begin() + 1, j.end());
  return j;
}

}  // namespace

GlueResult naive_glue_search(const Pls& p, bool require_rank, int line_bound) {
  auto s = glue_setup(p, line_bound);
  GlueResult out;
  UnionFind uf(std::max(s.slots, 1));
  std::vector<int> flips;
  glue_dfs(p, s, 0, uf, flips,
           [&](UnionFind& u, const std::vector<int>& fl) {
             LabeledGraph g = glue_to_graph(p, u);
             if (require_rank && !check_rank_model(p, g).ok) return false;
             out.found = true;
             out.graph = std::move(g);
             out.flips = fl;
             return true;
           });
  return out;
}

std::vector<LabeledGraph> naive_glue_all(const Pls& p, int line_bound) {
  auto s = glue_setup(p, line_bound);
  std::vector<LabeledGraph> out;
  UnionFind uf(std::max(s.slots, 1));
  std::vector<int> flips;
  glue_dfs(p, s, 0, uf, flips,
           [&](UnionFind& u, const std::vector<int>&) {
             out.push_back(glue_to_graph(p, u));
             return false;
           });
  return out;
}

LabeledGraph standard_graph_qimp(const Pls& p) {
  require(classify_pls(p).qimp, Err::NotAQimp, "input is not a QIMP");
  return standard_checked(p);
}

LabeledGraph standard_graph_ump(const Pls& p) {
  require(classify_pls(p).ump, Err::NotAUmp, "input is not a UMP");
  return standard_checked(p);
}

GraphModel extend_graph_with_path(const GraphModel& model,
                                  const std::vector<int>& path,
                                  int point_bound) {
  const Pls& p = model.pls;
  int n = static_cast<int>(path.size());
  require(n >= 2, Err::InvalidPls, "path needs at least two points");
  require(sorted_unique(path).size() == path.size(), Err::InvalidPls,
          "path repeats a point");
  int x = path.front(), y = path.back();
  require(p.has_point(x) && p.has_point(y), Err::UnknownPoint,
          "path endpoints must be existing points");
  for (int i = 1; i + 1 < n; ++i)
    require(!p.has_point(path[i]), Err::PathCollision,
            "inner point already present");
  if (n == 2)
    require(p.line_through(x, y) < 0, Err::PathCollision,
            "a line through the endpoints already exists");
  require(static_cast<int>(p.points.size()) + 2 * n - 3 <= point_bound,
          Err::BoundExceeded, "extension exceeds the point bound");
  require(check_line_pres(p, model.graph), Err::NotLinePreserving,
          "input graph does not model the input system");

  int next = p.max_point() + 1;
  for (int q : path) next = std::max(next, q + 1);
  std::vector<int> mids(n - 1);
  for (int i = 0; i + 1 < n; ++i) mids[i] = next++;

  std::vector<int> pts = p.points;
  std::vector<std::vector<int>> lines;
  lines.reserve(p.lines.size() + n - 1);
  for (const auto& ln : p.lines) lines.push_back({ln[0], ln[1], ln[2]});
  for (int i = 0; i + 1 < n; ++i) {
    pts.push_back(mids[i]);
    if (i >= 1) pts.push_back(path[i]);
    lines.push_back({path[i], path[i + 1], mids[i]});
  }
  Pls np = build_pls(pts, lines);

  auto before = check_rank_model(p, model.graph);
  LabeledGraph g = model.graph;
  grow_graph_along_path(g, path, mids);
  auto after = check_rank_model(np, g);
  require(after.mrk - before.mrk == n - 2 && after.rk - before.rk == n - 2,
          Err::Internal, "path extension broke the rank bookkeeping");
  if (n >= 3 && p.line_through(x, y) >= 0 &&
      check_circuit_friendly(p, model.graph, point_bound).ok)
    require(check_circuit_friendly(np, g, point_bound).ok, Err::Internal,
            "extension along a supported path lost circuit friendliness");
  return {std::move(np), std::move(g)};
}

GraphModel model_augmented_ump(const Pls& p,
                               const std::vector<AugmentationRecord>& history,
                               AugmentMode mode, int point_bound) {
  size_t h = history.size();
  std::vector<Pls> stages(h + 1);
  stages[h] = p;
  for (size_t i = h; i-- > 0;) {
    require(history[i].link.size() >= 2, Err::ModeViolation,
            "link needs at least two points");
    stages[i] = remove_added_path(stages[i + 1], history[i].link);
  }
  require(classify_pls(stages[0], point_bound).ump, Err::NotAUmp,
          "history does not strip back to a UMP");
  LabeledGraph g = standard_graph_ump(stages[0]);

  for (size_t k = 0; k < h; ++k) {
    const auto& rec = history[k];
    const Pls& st = stages[k];
    const Pls& nx = stages[k + 1];
    if (mode == AugmentMode::type1)
      require(rec.type == 1, Err::ModeViolation, "type 2 link in type1 mode");

    auto canon = canonical_junctions(rec.cycle);
    const Cycle* host = nullptr;
    auto cycles = all_cycles(st, point_bound);
    for (const auto& c : cycles)
      if (c.junctions == canon) {
        host = &c;
        break;
      }
    require(host != nullptr, Err::ModeViolation,
            "record cycle is not a cycle of its stage");

    int x = rec.link.front(), y = rec.link.back();
    require(x != y, Err::ModeViolation, "link endpoints coincide");
    bool xm = contains(host->midpoints, x), ym = contains(host->midpoints, y);
    bool xj = contains(host->junctions, x), yj = contains(host->junctions, y);
    int want = 0;
    if ((xm && yj) || (xj && ym)) want = 1;
    else if (xm && ym) want = 2;
    require(want != 0, Err::ModeViolation,
            "link endpoints do not straddle the cycle as a midpoint-link");
    require(want == rec.type, Err::ModeViolation,
            "record type disagrees with the cycle");

    auto line_of_mid = [&](int m) {
      for (size_t i = 0; i < host->midpoints.size(); ++i)
        if (host->midpoints[i] == m) return host->line_indices[i];
      return -1;
    };
    if (rec.type == 1) {
      int mid = xm ? x : y, jun = xm ? y : x;
      const auto& ln = st.lines[line_of_mid(mid)];
      require(contains(std::vector<int>(ln.begin(), ln.end()), jun),
              Err::ModeViolation, "type 1 link is not benign");
    } else {
      const auto& la = st.lines[line_of_mid(x)];
      const auto& lb = st.lines[line_of_mid(y)];
      bool meet = false;
      for (int q : la)
        for (int r : lb) meet = meet || q == r;
      require(meet, Err::ModeViolation, "type 2 link is not benign");
      if (mode == AugmentMode::small_girth) {
        require(host->length() <= 4, Err::ModeViolation,
                "type 2 link hosted on a cycle with more than four lines");
        // With at most 4 lines the cycle's image must be a wheel; its rims
        // are the midpoint edges, so the two link ends are incident there.
        require(edge_set_rank(g, host->support()) == host->length(),
                Err::Internal, "hosting cycle image is not a wheel");
      }
    }

    int n = static_cast<int>(rec.link.size());
    std::vector<int> mids(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
      int li = nx.line_through(rec.link[i], rec.link[i + 1]);
      require(li >= 0, Err::ModeViolation,
              "link path is missing from the augmented stage");
      mids[i] = nx.third_point(li, rec.link[i], rec.link[i + 1]);
    }
    grow_graph_along_path(g, rec.link, mids);
    require(check_line_pres(nx, g), Err::Internal,
            "extension lost line preservation");
  }

  require(check_rank_model(p, g).ok, Err::Internal,
          "replayed graph misses the rank");
  if (mode == AugmentMode::type1)
    require(check_circuit_friendly(p, g, point_bound).ok, Err::Internal,
            "type 1 replay is not circuit-friendly");
  return {p, g};
}

std::vector<AugmentationRecord> augmentation_records(
    const Pls& p, const std::vector<std::vector<int>>& removed_paths,
    int point_bound) {
  size_t h = removed_paths.size();
  std::vector<Pls> stages(h + 1);
  stages[h] = p;
  for (size_t i = h; i-- > 0;)
    stages[i] = remove_added_path(stages[i + 1], removed_paths[h - 1 - i]);

  std::vector<AugmentationRecord> records(h);
  for (size_t k = 0; k < h; ++k) {
    const Pls& st = stages[k];
    const auto& path = removed_paths[h - 1 - k];
    require(path.size() >= 2, Err::ModeViolation, "path needs two endpoints");
    int x = path.front(), y = path.back();

    AugmentationRecord rec;
    for (const auto& c : all_cycles(st, point_bound)) {
      bool xm = contains(c.midpoints, x), ym = contains(c.midpoints, y);
      bool xj = contains(c.junctions, x), yj = contains(c.junctions, y);
      auto line_of_mid = [&](int m) {
        for (size_t i = 0; i < c.midpoints.size(); ++i)
          if (c.midpoints[i] == m) return c.line_indices[i];
        return -1;
      };
      auto on_line = [&](int li, int q) {
        const auto& ln = st.lines[li];
        return ln[0] == q || ln[1] == q || ln[2] == q;
      };
      if ((xm && yj) || (xj && ym)) {
        int mid = xm ? x : y;
        int jun = xm ? y : x;
        if (!on_line(line_of_mid(mid), jun)) continue;
        rec.type = 1;
        rec.cycle = c.junctions;
        rec.link = path;
        if (!xm) std::reverse(rec.link.begin(), rec.link.end());
        break;
      }
      if (xm && ym) {
        const auto& la = st.lines[line_of_mid(x)];
        const auto& lb = st.lines[line_of_mid(y)];
        bool meet = false;
        for (int q : la)
          for (int r : lb) meet = meet || q == r;
        if (!meet) continue;
        rec.type = 2;
        rec.cycle = c.junctions;
        rec.link = path;
        if (x > y) std::reverse(rec.link.begin(), rec.link.end());
        break;
      }
    }
    require(rec.type != 0, Err::ModeViolation,
            "path is not a benign midpoint-link of any cycle at its stage");
    records[k] = rec;
  }
  return records;
}

}  // namespace tightlat
