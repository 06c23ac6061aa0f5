#include "tightlat/graph.hpp"

#include <map>
#include <tuple>

namespace tightlat {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotAPoset: return "NotAPoset";
    case Err::NotCovers: return "NotCovers";
    case Err::NotALattice: return "NotALattice";
    case Err::NotModular: return "NotModular";
    case Err::NotDistributive: return "NotDistributive";
    case Err::NotACoatom: return "NotACoatom";
    case Err::LineTooLarge: return "LineTooLarge";
    case Err::InvalidPls: return "InvalidPls";
    case Err::LineSizeNot3: return "LineSizeNot3";
    case Err::LinesShareTwoPoints: return "LinesShareTwoPoints";
    case Err::UnknownPoint: return "UnknownPoint";
    case Err::BoundExceeded: return "BoundExceeded";
    case Err::NotAQimp: return "NotAQimp";
    case Err::NotAUmp: return "NotAUmp";
    case Err::NotConnected: return "NotConnected";
    case Err::PathCollision: return "PathCollision";
    case Err::NotABijection: return "NotABijection";
    case Err::NotSimple: return "NotSimple";
    case Err::NotLinePreserving: return "NotLinePreserving";
    case Err::GroundOverlap: return "GroundOverlap";
    case Err::EdgesNotIncident: return "EdgesNotIncident";
    case Err::ModeViolation: return "ModeViolation";
    case Err::ModelCheckFailed: return "ModelCheckFailed";
    case Err::GraphDisconnected: return "GraphDisconnected";
    case Err::NotTight: return "NotTight";
    case Err::FactorNotTight: return "FactorNotTight";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

int LabeledGraph::add_vertex() { return n_vertices++; }

int LabeledGraph::add_edge(int u, int v, int label) {
  require(u >= 0 && u < n_vertices && v >= 0 && v < n_vertices, Err::Internal,
          "edge endpoint out of range");
  require(u != v, Err::NotSimple, "loop edge");
  if (u > v) std::swap(u, v);
  require(edge_index(u, v) < 0, Err::NotSimple, "parallel edge");
  require(edge_of_label(label) < 0, Err::NotABijection, "duplicate edge label");
  edges.emplace_back(u, v);
  labels.push_back(label);
  return static_cast<int>(edges.size()) - 1;
}

int LabeledGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i] == std::make_pair(u, v)) return static_cast<int>(i);
  return -1;
}

int LabeledGraph::edge_of_label(int label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

std::vector<int> LabeledGraph::neighbors(int v) const {
  std::vector<int> out;
  for (auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LabeledGraph::sorted_labels() const { return sorted_unique(labels); }

std::vector<int> LabeledGraph::component_of_vertex() const {
  UnionFind uf(n_vertices);
  for (auto& [u, v] : edges) uf.unite(u, v);
  std::vector<int> comp(n_vertices);
  std::map<int, int> renum;
  for (int v = 0; v < n_vertices; ++v) {
    int r = uf.find(v);
    auto it = renum.find(r);
    if (it == renum.end()) it = renum.emplace(r, static_cast<int>(renum.size())).first;
    comp[v] = it->second;
  }
  return comp;
}

int LabeledGraph::num_components() const {
  if (n_vertices == 0) return 0;
  auto comp = component_of_vertex();
  return 1 + *std::max_element(comp.begin(), comp.end());
}

void LabeledGraph::validate() const {
  require(labels.size() == edges.size(), Err::Internal, "label/edge size mismatch");
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : edges) {
    require(u >= 0 && v >= 0 && u < n_vertices && v < n_vertices, Err::Internal,
            "vertex out of range");
    require(u != v, Err::NotSimple, "loop edge");
    if (u > v) std::swap(u, v);
    es.emplace_back(u, v);
  }
  require(sorted_unique(es).size() == es.size(), Err::NotSimple, "parallel edges");
  require(sorted_unique(labels).size() == labels.size(), Err::NotABijection,
          "duplicate labels");
}

namespace {

std::vector<std::vector<char>> adjacency_matrix(const LabeledGraph& g) {
  std::vector<std::vector<char>> adj(g.n_vertices, std::vector<char>(g.n_vertices, 0));
  for (auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
  return adj;
}

// Enumerates simple vertex cycles (length >= 3) once each: minimal vertex
// first, second vertex smaller than last. chordless_only restricts to induced
// cycles.
void enumerate_vertex_cycles(const std::vector<std::vector<char>>& adj,
                             const std::vector<int>& verts, bool chordless_only,
                             std::vector<std::vector<int>>& out) {
  int n = static_cast<int>(verts.size());
  std::vector<int> path;
  std::vector<char> used(adj.size(), 0);

  auto dfs = [&](auto&& self, int v0) -> void {
    int last = path.back();
    for (int wi = 0; wi < n; ++wi) {
      int w = verts[wi];
      if (!adj[last][w] || used[w] || w <= v0) continue;
      bool chord = false;
      if (chordless_only) {
        for (size_t i = 1; i + 1 < path.size(); ++i)
          if (adj[w][path[i]]) { chord = true; break; }
      }
      if (chord) continue;
      bool closes = adj[w][v0] != 0;
      if (closes && path.size() >= 2 && path[1] < w) {
        path.push_back(w);
        out.push_back(path);
        path.pop_back();
      }
      // Past this w any completed cycle re-enters v0, so in chordless mode
      // the edge {w,v0} would be a chord. At depth 1 it is the walked edge.
      if (!(chordless_only && closes && path.size() >= 2)) {
        path.push_back(w);
        used[w] = 1;
        self(self, v0);
        used[w] = 0;
        path.pop_back();
      }
    }
  };

  for (int si = 0; si < n; ++si) {
    int v0 = verts[si];
    path.assign(1, v0);
    used[v0] = 1;
    dfs(dfs, v0);
    used[v0] = 0;
  }
}

}  // namespace

std::vector<ChordlessCircuit> chordless_circuits(const LabeledGraph& g) {
  auto adj = adjacency_matrix(g);
  std::vector<int> verts(g.n_vertices);
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<std::vector<int>> cycles;
  enumerate_vertex_cycles(adj, verts, true, cycles);
  std::vector<ChordlessCircuit> out;
  for (auto& cyc : cycles) {
    ChordlessCircuit c;
    c.vertices = cyc;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int e = g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]);
      c.edge_labels.push_back(g.labels[e]);
    }
    std::sort(c.edge_labels.begin(), c.edge_labels.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Wheel> wheels(const LabeledGraph& g) {
  auto adj = adjacency_matrix(g);
  std::vector<Wheel> out;
  for (int h = 0; h < g.n_vertices; ++h) {
    std::vector<int> nb = g.neighbors(h);
    if (nb.size() < 2) continue;
    // Degenerate wheels: any edge between two neighbors.
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (adj[nb[i]][nb[j]]) {
          Wheel w;
          w.hub = h;
          w.rim_vertices = {nb[i], nb[j]};
          w.spoke_labels = {g.labels[g.edge_index(h, nb[i])],
                            g.labels[g.edge_index(h, nb[j])]};
          w.rim_labels = {g.labels[g.edge_index(nb[i], nb[j])]};
          out.push_back(std::move(w));
        }
    // Nondegenerate: any simple cycle inside the neighborhood.
    std::vector<std::vector<int>> cycles;
    enumerate_vertex_cycles(adj, nb, false, cycles);
    for (auto& cyc : cycles) {
      Wheel w;
      w.hub = h;
      w.rim_vertices = cyc;
      for (size_t i = 0; i < cyc.size(); ++i) {
        w.spoke_labels.push_back(g.labels[g.edge_index(h, cyc[i])]);
        w.rim_labels.push_back(
            g.labels[g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()])]);
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

bool is_wheely(const LabeledGraph& g) {
  auto adj = adjacency_matrix(g);
  for (auto& c : chordless_circuits(g)) {
    if (c.vertices.size() == 3) continue;
    bool hub_found = false;
    for (int h = 0; h < g.n_vertices && !hub_found; ++h) {
      if (contains(c.vertices, h)) continue;
      bool all = true;
      for (int v : c.vertices)
        if (!adj[h][v]) { all = false; break; }
      hub_found = all;
    }
    if (!hub_found) return false;
  }
  return true;
}

std::vector<std::array<int, 3>> triangles_of(const LabeledGraph& g) {
  auto adj = adjacency_matrix(g);
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < g.n_vertices; ++u)
    for (int v = u + 1; v < g.n_vertices; ++v) {
      if (!adj[u][v]) continue;
      for (int w = v + 1; w < g.n_vertices; ++w)
        if (adj[u][w] && adj[v][w]) out.push_back({u, v, w});
    }
  return out;
}

namespace {

bool connected_within(const std::vector<std::vector<char>>& adj,
                      const std::vector<int>& verts, int a, int b,
                      std::pair<int, int> banned_edge) {
  std::vector<int> stack{a};
  std::vector<char> seen(adj.size(), 0);
  std::vector<char> in_set(adj.size(), 0);
  for (int v : verts) in_set[v] = 1;
  seen[a] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == b) return true;
    for (int w : verts) {
      if (seen[w] || !adj[u][w]) continue;
      if (std::minmax(u, w) == std::minmax(banned_edge.first, banned_edge.second))
        continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

}  // namespace

std::vector<std::array<int, 3>> extendible_triangles(const LabeledGraph& g) {
  auto adj = adjacency_matrix(g);
  std::vector<std::array<int, 3>> out;
  for (auto& t : triangles_of(g)) {
    bool ext = false;
    for (int x = 0; x < g.n_vertices && !ext; ++x) {
      if (x == t[0] || x == t[1] || x == t[2]) continue;
      if (adj[x][t[0]] && adj[x][t[1]] && adj[x][t[2]]) ext = true;
    }
    for (int hi = 0; hi < 3 && !ext; ++hi) {
      int h = t[hi], a = t[(hi + 1) % 3], b = t[(hi + 2) % 3];
      std::vector<int> nb = g.neighbors(h);
      if (connected_within(adj, nb, a, b, {a, b})) ext = true;
    }
    if (ext) {
      std::array<int, 3> lab = {g.labels[g.edge_index(t[0], t[1])],
                                g.labels[g.edge_index(t[0], t[2])],
                                g.labels[g.edge_index(t[1], t[2])]};
      std::sort(lab.begin(), lab.end());
      out.push_back(lab);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool graph_is_wheel(const LabeledGraph& g) {
  int n = g.n_vertices;
  if (n < 3 || !g.connected()) return false;
  if (n == 3) return g.edges.size() == 3;
  for (int h = 0; h < n; ++h) {
    if (static_cast<int>(g.neighbors(h).size()) != n - 1) continue;
    // Remaining vertices must form one circuit: all degree 2 without the hub.
    bool ok = true;
    int rim_edges = 0;
    for (auto& [u, v] : g.edges)
      if (u != h && v != h) ++rim_edges;
    if (rim_edges != n - 1) continue;
    for (int v = 0; v < n && ok; ++v) {
      if (v == h) continue;
      int deg = 0;
      for (auto& [a, b] : g.edges)
        if ((a == v || b == v) && a != h && b != h) ++deg;
      if (deg != 2) ok = false;
    }
    if (!ok) continue;
    // Connectivity of the rim.
    UnionFind uf(n);
    for (auto& [u, v] : g.edges)
      if (u != h && v != h) uf.unite(u, v);
    int root = -1;
    bool one = true;
    for (int v = 0; v < n; ++v) {
      if (v == h) continue;
      if (root < 0) root = uf.find(v);
      else if (uf.find(v) != root) one = false;
    }
    if (one) return true;
  }
  return false;
}

LabeledGraph glue_components(const LabeledGraph& g) {
  std::vector<char> has_edge(g.n_vertices, 0);
  for (auto& [u, v] : g.edges) has_edge[u] = has_edge[v] = 1;
  auto comp = g.component_of_vertex();

  std::vector<int> least_of_comp(g.n_vertices, -1);
  for (int v = 0; v < g.n_vertices; ++v)
    if (has_edge[v] && least_of_comp[comp[v]] < 0) least_of_comp[comp[v]] = v;

  // Old vertex -> new id, ascending; all component minima share one id.
  std::vector<int> to_new(g.n_vertices, -1);
  int next = 0, glue = -1;
  for (int v = 0; v < g.n_vertices; ++v) {
    if (!has_edge[v]) continue;
    if (least_of_comp[comp[v]] == v) {
      if (glue < 0) glue = next++;
      to_new[v] = glue;
    } else {
      to_new[v] = next++;
    }
  }

  LabeledGraph out;
  out.n_vertices = std::max(next, 1);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    out.add_edge(to_new[u], to_new[v], g.labels[i]);
  }
  out.validate();
  return out;
}

LabeledGraph canonicalize_vertices(const LabeledGraph& g) {
  // Deterministic relabeling: order vertices by (degree, sorted incident
  // labels), then BFS. Not a full canonical form; stable for our builders.
  std::vector<std::vector<int>> inc(g.n_vertices);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    inc[g.edges[i].first].push_back(g.labels[i]);
    inc[g.edges[i].second].push_back(g.labels[i]);
  }
  for (auto& v : inc) std::sort(v.begin(), v.end());
  std::vector<int> order(g.n_vertices);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return inc[a] < inc[b]; });
  std::vector<int> newname(g.n_vertices, -1);
  int next = 0;
  for (int v : order) newname[v] = next++;
  LabeledGraph out;
  out.n_vertices = g.n_vertices;
  std::vector<std::tuple<int, int, int>> es;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    int u = newname[g.edges[i].first], v = newname[g.edges[i].second];
    if (u > v) std::swap(u, v);
    es.emplace_back(u, v, g.labels[i]);
  }
  std::sort(es.begin(), es.end());
  for (auto& [u, v, lab] : es) {
    out.edges.emplace_back(u, v);
    out.labels.push_back(lab);
  }
  return out;
}

bool graphs_isomorphic_on_labels(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.n_vertices != b.n_vertices || a.edges.size() != b.edges.size()) return false;
  if (a.sorted_labels() != b.sorted_labels()) return false;
  // Backtracking vertex match; label-incidence signatures prune heavily.
  std::vector<std::vector<int>> inc_a(a.n_vertices), inc_b(b.n_vertices);
  for (size_t i = 0; i < a.edges.size(); ++i) {
    inc_a[a.edges[i].first].push_back(a.labels[i]);
    inc_a[a.edges[i].second].push_back(a.labels[i]);
  }
  for (size_t i = 0; i < b.edges.size(); ++i) {
    inc_b[b.edges[i].first].push_back(b.labels[i]);
    inc_b[b.edges[i].second].push_back(b.labels[i]);
  }
  for (auto& v : inc_a) std::sort(v.begin(), v.end());
  for (auto& v : inc_b) std::sort(v.begin(), v.end());
  std::vector<int> map_ab(a.n_vertices, -1);
  std::vector<char> used_b(b.n_vertices, 0);
  auto edge_label_b = [&](int u, int v) -> int {
    int e = b.edge_index(u, v);
    return e < 0 ? -1 : b.labels[e];
  };
  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == a.n_vertices) return true;
    for (int w = 0; w < b.n_vertices; ++w) {
      if (used_b[w] || inc_a[v] != inc_b[w]) continue;
      bool ok = true;
      for (int p = 0; p < v && ok; ++p) {
        int e = a.edge_index(p, v);
        int la = e < 0 ? -1 : a.labels[e];
        if (la != edge_label_b(map_ab[p], w)) ok = false;
      }
      if (!ok) continue;
      map_ab[v] = w;
      used_b[w] = 1;
      if (self(self, v + 1)) return true;
      used_b[w] = 0;
      map_ab[v] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

}  // namespace tightlat
