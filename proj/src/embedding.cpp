#include "tightlat/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tightlat {
namespace {

std::string int_list(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

// phi as dense lookups, validated as a bijection J(L) -> carrier.
struct PhiMaps {
  std::map<int, int> fwd;  // join irreducible -> carrier element
  std::map<int, int> rev;
};

PhiMaps bijection_maps(const std::vector<int>& jis, const std::vector<int>& carrier,
                       const PointToElement& phi) {
  require(phi.size() == jis.size() && jis.size() == carrier.size(),
          Err::NotABijection, "join irreducibles and carrier differ in size");
  PhiMaps out;
  for (auto& [p, e] : phi) {
    require(std::binary_search(jis.begin(), jis.end(), p), Err::NotABijection,
            "mapped point is not a join irreducible");
    require(std::binary_search(carrier.begin(), carrier.end(), e),
            Err::NotABijection, "image is not a carrier element");
    require(out.fwd.emplace(p, e).second, Err::NotABijection,
            "join irreducible mapped twice");
    require(out.rev.emplace(e, p).second, Err::NotABijection,
            "carrier element hit twice");
  }
  return out;
}

PointToElement identity_phi(const std::vector<int>& jis) {
  PointToElement phi;
  for (int p : jis) phi.emplace_back(p, p);
  return phi;
}

// GF(2) column basis in echelon form (distinct leading bits, descending).
struct XorBasis {
  std::vector<std::uint32_t> rows;
  std::uint32_t reduce(std::uint32_t c) const {
    for (std::uint32_t b : rows)
      if ((c ^ b) < c) c ^= b;
    return c;
  }
  bool insert(std::uint32_t c) {
    c = reduce(c);
    if (!c) return false;
    rows.push_back(c);
    std::sort(rows.rbegin(), rows.rend());
    return true;
  }
  bool spans(std::uint32_t c) const { return reduce(c) == 0; }
};

std::vector<int> closure_of(const BinaryMatroid& m, const std::vector<int>& s) {
  XorBasis basis;
  for (int e : s) basis.insert(m.column_of(e));
  std::vector<int> out;
  for (int e : m.ground)
    if (basis.spans(m.column_of(e))) out.push_back(e);
  return out;
}

std::string describe_certificate(const EmbeddingCertificate& c) {
  std::string s;
  if (!c.is_homomorphism) s += " not a homomorphism;";
  if (!c.is_cover_preserving) s += " not cover-preserving;";
  if (!c.maps_bottom_to_bottom) s += " bottom is not mapped to bottom;";
  return s.empty() ? std::string(" certificate holds") : s;
}

}  // namespace

EmbeddingCertificate certify_partition_embedding(const Lattice& l, int n,
                                                 const std::vector<Partition>& map) {
  require(static_cast<int>(map.size()) == l.n, Err::Internal,
          "map size differs from the lattice");
  for (const auto& q : map)
    require(q.n == n, Err::Internal, "partition on the wrong ground set");

  EmbeddingCertificate cert;
  cert.is_homomorphism = true;
  for (int x = 0; x < l.n && cert.is_homomorphism; ++x)
    for (int y = x; y < l.n; ++y) {
      if (partition_meet(map[x], map[y]) != map[l.meet[x][y]] ||
          partition_join(map[x], map[y]) != map[l.join[x][y]]) {
        cert.is_homomorphism = false;
        break;
      }
    }
  cert.is_cover_preserving = true;
  for (auto& [a, b] : l.covers)
    if (!partition_is_cover(map[a], map[b])) {
      cert.is_cover_preserving = false;
      break;
    }
  cert.maps_bottom_to_bottom = map[l.bottom] == bottom_partition(n);
  return cert;
}

LatticeModelCheck check_lattice_model(const Lattice& l, const LabeledGraph& g,
                                      const PointToElement& phi) {
  auto ji = join_irreducibles(l);
  auto maps = bijection_maps(ji.j, g.sorted_labels(), phi);

  if (g.rank() != l.height())
    return {false, "rank: model rank " + std::to_string(g.rank()) +
                       ", lattice height " + std::to_string(l.height())};

  for (const auto& c : chordless_circuits(g)) {
    std::vector<int> x;
    for (int lb : c.edge_labels) x.push_back(maps.rev.at(lb));
    for (size_t i = 0; i < x.size(); ++i) {
      int jn = l.bottom;
      for (size_t k = 0; k < x.size(); ++k)
        if (k != i) jn = l.join[jn][x[k]];
      if (!l.leq[x[i]][jn])
        return {false, "circuit-join: circuit " + int_list(c.edge_labels) +
                           ", point " + std::to_string(x[i]) +
                           " is not below the join of the rest"};
    }
  }
  return {true, ""};
}

LatticeModelCheck check_lattice_model(const Lattice& l, const LabeledGraph& g) {
  return check_lattice_model(l, g, identity_phi(join_irreducibles(l).j));
}

LatticeModelCheck check_lattice_model(const Lattice& l, const BinaryMatroid& m,
                                      const PointToElement& phi) {
  require(m.is_simple(), Err::NotSimple, "matroid has a loop or a parallel pair");
  auto ji = join_irreducibles(l);
  auto maps = bijection_maps(ji.j, m.ground, phi);

  if (m.rank() != l.height())
    return {false, "rank: model rank " + std::to_string(m.rank()) +
                       ", lattice height " + std::to_string(l.height())};

  for (int a = 0; a < l.n; ++a) {
    std::vector<int> image;
    for (int p : ji.j_of[a]) image.push_back(maps.fwd.at(p));
    std::sort(image.begin(), image.end());
    if (closure_of(m, image) != image)
      return {false, "closure: element " + std::to_string(a) +
                         ", image " + int_list(image) + " is not closed"};
  }
  return {true, ""};
}

PartitionEmbedding build_partition_embedding(const Lattice& l, const LabeledGraph& g,
                                             const PointToElement& phi) {
  auto cm = check_lattice_model(l, g, phi);
  require(cm.ok, Err::ModelCheckFailed, cm.failed_condition);
  require(g.connected(), Err::GraphDisconnected, "model graph is disconnected");
  // Connected with rank = height pins the vertex count.
  require(g.n_vertices == l.height() + 1, Err::Internal, "vertex count is off");

  auto ji = join_irreducibles(l);
  auto maps = bijection_maps(ji.j, g.sorted_labels(), phi);

  PartitionEmbedding out;
  out.lattice = l;
  out.n = g.n_vertices;
  out.map.reserve(l.n);
  for (int a = 0; a < l.n; ++a) {
    std::vector<std::pair<int, int>> edges;
    for (int p : ji.j_of[a]) {
      int e = g.edge_of_label(maps.fwd.at(p));
      edges.emplace_back(g.edges[e].first + 1, g.edges[e].second + 1);
    }
    out.map.push_back(comp_partition(out.n, edges));
  }
  out.certificate = certify_partition_embedding(l, out.n, out.map);
  require(out.certificate.tight(), Err::Internal,
          "construction failed its own certificate:" +
              describe_certificate(out.certificate));
  return out;
}

PartitionEmbedding build_partition_embedding(const Lattice& l, const LabeledGraph& g) {
  return build_partition_embedding(l, g, identity_phi(join_irreducibles(l).j));
}

ExtractedModel extract_model_from_embedding(const Lattice& l, int n,
                                            const std::vector<Partition>& map) {
  auto cert = certify_partition_embedding(l, n, map);
  require(cert.tight(), Err::NotTight,
          "map is not a tight embedding:" + describe_certificate(cert));

  auto ji = join_irreducibles(l);
  ExtractedModel out;
  out.raw.n_vertices = n;
  for (size_t t = 0; t < ji.j.size(); ++t) {
    int p = ji.j[t], ps = ji.lower_star[t];
    int bu = -1, bv = -1;
    for (int u = 1; u <= n && bu < 0; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (map[p].same_block(u, v) && !map[ps].same_block(u, v)) {
          bu = u, bv = v;
          break;
        }
    require(bu > 0, Err::Internal, "cover image brought no new pair");
    require(out.raw.edge_index(bu - 1, bv - 1) < 0, Err::Internal,
            "two join irreducibles picked the same pair");
    out.raw.add_edge(bu - 1, bv - 1, p);
  }
  out.glued = glue_components(out.raw);
  require(out.glued.n_vertices == l.height() + 1, Err::Internal,
          "glued vertex count is off");
  auto cm = check_lattice_model(l, out.glued);
  require(cm.ok, Err::Internal, "extracted model fails: " + cm.failed_condition);
  return out;
}

GeometricEmbedding build_geometric_embedding(const Lattice& l, const BinaryMatroid& m,
                                             const PointToElement& phi) {
  auto cm = check_lattice_model(l, m, phi);
  require(cm.ok, Err::ModelCheckFailed, cm.failed_condition);

  GeometricEmbedding out;
  out.matroid = m;

  // Flats by closure saturation, then ordered by rank and set order.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{closure_of(m, {})};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    auto flat = queue[head];
    for (int e : m.ground) {
      if (std::binary_search(flat.begin(), flat.end(), e)) continue;
      auto bigger = flat;
      bigger.push_back(e);
      auto cl = closure_of(m, bigger);
      if (seen.insert(cl).second) queue.push_back(cl);
    }
  }
  auto rank_of = [&](const std::vector<int>& s) {
    XorBasis b;
    int r = 0;
    for (int e : s) r += b.insert(m.column_of(e)) ? 1 : 0;
    return r;
  };
  out.flat_sets.assign(seen.begin(), seen.end());
  std::stable_sort(out.flat_sets.begin(), out.flat_sets.end(),
                   [&](const std::vector<int>& a, const std::vector<int>& b) {
                     return rank_of(a) < rank_of(b);
                   });

  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < out.flat_sets.size(); ++i)
    for (size_t j = 0; j < out.flat_sets.size(); ++j) {
      if (i == j) continue;
      const auto &a = out.flat_sets[i], &b = out.flat_sets[j];
      if (rank_of(b) == rank_of(a) + 1 &&
          std::includes(b.begin(), b.end(), a.begin(), a.end()))
        covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  out.flats = build_lattice(covers);

  auto ji = join_irreducibles(l);
  auto maps = bijection_maps(ji.j, m.ground, phi);
  out.map.assign(l.n, -1);
  for (int a = 0; a < l.n; ++a) {
    std::vector<int> image;
    for (int p : ji.j_of[a]) image.push_back(maps.fwd.at(p));
    std::sort(image.begin(), image.end());
    auto it = std::find(out.flat_sets.begin(), out.flat_sets.end(), image);
    require(it != out.flat_sets.end(), Err::Internal, "closed image missing");
    out.map[a] = static_cast<int>(it - out.flat_sets.begin());
  }

  auto& fl = out.flats;
  out.certificate.is_homomorphism = true;
  for (int x = 0; x < l.n && out.certificate.is_homomorphism; ++x)
    for (int y = x; y < l.n; ++y)
      if (fl.meet[out.map[x]][out.map[y]] != out.map[l.meet[x][y]] ||
          fl.join[out.map[x]][out.map[y]] != out.map[l.join[x][y]]) {
        out.certificate.is_homomorphism = false;
        break;
      }
  out.certificate.is_cover_preserving = true;
  for (auto& [a, b] : l.covers)
    if (!fl.is_cover(out.map[a], out.map[b])) {
      out.certificate.is_cover_preserving = false;
      break;
    }
  out.certificate.maps_bottom_to_bottom = out.map[l.bottom] == fl.bottom;
  require(out.certificate.tight(), Err::Internal,
          "geometric embedding failed its certificate:" +
              describe_certificate(out.certificate));
  return out;
}

PartitionEmbedding distributive_embedding(const Lattice& l) {
  require(classify_lattice(l).distributive, Err::NotDistributive,
          "anchor construction needs a distributive lattice");
  auto ji = join_irreducibles(l);
  int k = static_cast<int>(ji.j.size());
  int n = k + 1;  // ground: one element per join irreducible plus the anchor
  std::map<int, int> pos;
  for (int t = 0; t < k; ++t) pos[ji.j[t]] = t + 1;

  PartitionEmbedding out;
  out.lattice = l;
  out.n = n;
  for (int a = 0; a < l.n; ++a) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> big{n};
    std::vector<char> inside(n + 1, 0);
    for (int p : ji.j_of[a]) {
      big.push_back(pos.at(p));
      inside[pos.at(p)] = 1;
    }
    std::sort(big.begin(), big.end());
    blocks.push_back(big);
    for (int x = 1; x < n; ++x)
      if (!inside[x]) blocks.push_back({x});
    out.map.push_back(make_partition(n, blocks));
  }
  out.certificate = certify_partition_embedding(l, n, out.map);
  require(out.certificate.tight(), Err::Internal,
          "anchor construction failed its certificate:" +
              describe_certificate(out.certificate));
  return out;
}

PartitionEmbedding subdirect_embedding(const Lattice& l,
                                       const std::vector<PartitionEmbedding>& factor_embeddings) {
  auto mc = maximal_congruences(l);
  require(static_cast<int>(factor_embeddings.size()) == mc.s, Err::FactorNotTight,
          "need exactly one embedding per subdirectly irreducible factor");
  int total = 0;
  for (int i = 0; i < mc.s; ++i) {
    const auto& f = factor_embeddings[i];
    require(f.lattice.n == mc.factors[i].n && f.lattice.covers == mc.factors[i].covers,
            Err::FactorNotTight,
            "embedding " + std::to_string(i) + " is not over factor " + std::to_string(i));
    require(certify_partition_embedding(f.lattice, f.n, f.map).tight(),
            Err::FactorNotTight,
            "factor embedding " + std::to_string(i) + " is not tight");
    total += f.n;
  }

  PartitionEmbedding out;
  out.lattice = l;
  out.n = total;
  for (int a = 0; a < l.n; ++a) {
    std::vector<std::vector<int>> blocks;
    int off = 0;
    for (int i = 0; i < mc.s; ++i) {
      int cls = mc.congruences[i][a];
      for (auto blk : factor_embeddings[i].map[cls].blocks) {
        for (int& x : blk) x += off;
        blocks.push_back(std::move(blk));
      }
      off += factor_embeddings[i].n;
    }
    out.map.push_back(make_partition(total, blocks));
  }
  out.certificate = certify_partition_embedding(l, total, out.map);
  require(out.certificate.tight(), Err::Internal,
          "juxtaposition failed its certificate:" +
              describe_certificate(out.certificate));
  return out;
}

namespace {

// Pads a certified embedding with singletons up to ground size n.
PartitionEmbedding pad_embedding(const PartitionEmbedding& emb, int n) {
  if (n == emb.n) return emb;
  PartitionEmbedding out;
  out.lattice = emb.lattice;
  out.n = n;
  for (const auto& q : emb.map) {
    auto blocks = q.blocks;
    for (int x = emb.n + 1; x <= n; ++x) blocks.push_back({x});
    out.map.push_back(make_partition(n, blocks));
  }
  out.certificate = certify_partition_embedding(out.lattice, n, out.map);
  require(out.certificate.tight(), Err::Internal, "padding broke the certificate");
  return out;
}

}  // namespace

BruteForceResult brute_force_embedding_search(const Lattice& l, int n,
                                              long long work_bound) {
  require(n >= 1, Err::BoundExceeded, "empty ground set");
  BruteForceResult res;
  int d = l.height();
  if (n < d + 1) return res;  // heights force m >= height+1

  auto ji = join_irreducibles(l);
  int k = static_cast<int>(ji.j.size());
  int v = d + 1;
  require(v <= 8, Err::BoundExceeded, "too many vertices to canonicalize");

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
  int np = static_cast<int>(pairs.size());
  if (k > np || k < v - 1) return res;  // no connected candidates at all

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  }

  long long work = 0;
  auto charge = [&](long long c) {
    work += c;
    require(work <= work_bound, Err::BoundExceeded, "search budget exhausted");
  };

  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int c : comb) edges.push_back(pairs[c]);

    UnionFind uf(v);
    int parts = v;
    for (auto& [a, b] : edges) parts -= uf.unite(a, b) ? 1 : 0;
    if (parts == 1) {
      charge(static_cast<long long>(perms.size()) * k);
      // Keep the subset only if it is the least among its vertex renamings;
      // renamings fixing it are the automorphisms.
      bool least = true;
      std::vector<std::vector<int>> auts;
      for (const auto& perm : perms) {
        std::vector<std::pair<int, int>> img;
        for (auto& [a, b] : edges) {
          int x = perm[a], y = perm[b];
          img.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(img.begin(), img.end());
        if (img < edges) {
          least = false;
          break;
        }
        if (img == edges) {
          std::vector<int> alpha(k);
          for (int e = 0; e < k; ++e) {
            int x = perm[edges[e].first], y = perm[edges[e].second];
            auto key = std::make_pair(std::min(x, y), std::max(x, y));
            alpha[e] = static_cast<int>(
                std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
          }
          auts.push_back(alpha);
        }
      }
      if (least) {
        ++res.graphs_tried;
        LabeledGraph g;
        g.n_vertices = v;
        for (int e = 0; e < k; ++e) g.add_edge(edges[e].first, edges[e].second, e);
        auto circuits = chordless_circuits(g);  // labels are edge indices

        std::vector<int> asg(k);  // edge index -> join-irreducible index
        std::iota(asg.begin(), asg.end(), 0);
        do {
          charge(static_cast<long long>(auts.size() + circuits.size()));
          ++res.labelings_tried;
          bool canonical = true;
          for (const auto& alpha : auts) {
            std::vector<int> moved(k);
            for (int e = 0; e < k; ++e) moved[alpha[e]] = asg[e];
            if (moved < asg) {
              canonical = false;
              break;
            }
          }
          if (!canonical) continue;

          bool good = true;
          for (const auto& c : circuits) {
            for (size_t i = 0; i < c.edge_labels.size() && good; ++i) {
              int q = ji.j[asg[c.edge_labels[i]]];
              int jn = l.bottom;
              for (size_t t = 0; t < c.edge_labels.size(); ++t)
                if (t != i) jn = l.join[jn][ji.j[asg[c.edge_labels[t]]]];
              good = l.leq[q][jn];
            }
            if (!good) break;
          }
          if (good) {
            LabeledGraph model;
            model.n_vertices = v;
            for (int e = 0; e < k; ++e)
              model.add_edge(edges[e].first, edges[e].second, ji.j[asg[e]]);
            auto cm = check_lattice_model(l, model);
            require(cm.ok, Err::Internal, "search hit a false positive: " + cm.failed_condition);
            res.found = true;
            res.graph = model;
            res.embedding = pad_embedding(build_partition_embedding(l, model), n);
            return res;
          }
        } while (std::next_permutation(asg.begin(), asg.end()));
      }
    }

    int i = k - 1;
    while (i >= 0 && comb[i] == np - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return res;
}

DirectSearchResult direct_embedding_search(const Lattice& l, int n,
                                           long long node_bound) {
  require(n >= 1 && n <= 5, Err::BoundExceeded,
          "direct partition search capped at ground size five");
  DirectSearchResult res;
  auto parts = all_partitions(n);
  int np = static_cast<int>(parts.size());

  std::map<Partition, int> index;
  for (int i = 0; i < np; ++i) index[parts[i]] = i;
  std::vector<std::vector<char>> leq(np, std::vector<char>(np));
  std::vector<std::vector<char>> cover(np, std::vector<char>(np));
  std::vector<std::vector<int>> meet(np, std::vector<int>(np));
  std::vector<std::vector<int>> join(np, std::vector<int>(np));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      leq[i][j] = partition_leq(parts[i], parts[j]);
      cover[i][j] = partition_is_cover(parts[i], parts[j]);
      meet[i][j] = index.at(partition_meet(parts[i], parts[j]));
      join[i][j] = index.at(partition_join(parts[i], parts[j]));
    }
  std::vector<std::vector<int>> by_height(n);
  for (int i = 0; i < np; ++i) by_height[parts[i].height()].push_back(i);

  // A tight image of x sits at partition height = lattice height of x, so
  // anything taller than the ground allows fails outright.
  if (l.height() > n - 1) return res;

  std::vector<int> order(l.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return l.height_of[a] < l.height_of[b]; });

  std::vector<std::vector<std::pair<int, int>>> join_pairs(l.n);
  for (int x = 0; x < l.n; ++x)
    for (int y = x + 1; y < l.n; ++y) {
      int c = l.join[x][y];
      if (c != x && c != y) join_pairs[c].emplace_back(x, y);
    }

  std::vector<int> assign(l.n, -1);
  std::vector<char> used(np, 0);

  auto dfs = [&](auto&& self, int pos) -> bool {
    if (pos == l.n) return true;
    int x = order[pos];
    for (int id : by_height[l.height_of[x]]) {
      if (used[id]) continue;
      ++res.nodes;
      require(res.nodes <= node_bound, Err::BoundExceeded, "search budget exhausted");
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        int y = order[q], iy = assign[y];
        if (static_cast<bool>(l.leq[x][y]) != static_cast<bool>(leq[id][iy]) ||
            static_cast<bool>(l.leq[y][x]) != static_cast<bool>(leq[iy][id])) {
          ok = false;
          break;
        }
        if (l.is_cover(x, y) && !cover[id][iy]) ok = false;
        if (l.is_cover(y, x) && !cover[iy][id]) ok = false;
        int mel = l.meet[x][y];
        if (ok && assign[mel] >= 0 && meet[id][iy] != assign[mel]) ok = false;
        int jel = l.join[x][y];
        if (ok && assign[jel] >= 0 && join[id][iy] != assign[jel]) ok = false;
      }
      for (auto& [a, b] : join_pairs[x])
        if (ok && assign[a] >= 0 && assign[b] >= 0 &&
            join[assign[a]][assign[b]] != id)
          ok = false;
      if (!ok) continue;
      assign[x] = id;
      used[id] = 1;
      if (self(self, pos + 1)) return true;
      assign[x] = -1;
      used[id] = 0;
    }
    return false;
  };

  if (!dfs(dfs, 0)) return res;
  res.found = true;
  res.embedding.lattice = l;
  res.embedding.n = n;
  for (int x = 0; x < l.n; ++x) res.embedding.map.push_back(parts[assign[x]]);
  res.embedding.certificate = certify_partition_embedding(l, n, res.embedding.map);
  require(res.embedding.certificate.tight(), Err::Internal,
          "direct search hit a false positive");
  return res;
}

PipelineReport pipeline_embed_thin(const Lattice& l) {
  PipelineReport rep;
  auto prof = classify_lattice(l);
  if (!prof.thin) {
    rep.reason = prof.two_distributive
                     ? "not thin: a covering M4 exists"
                     : "not thin: 2-distributivity fails";
    return rep;
  }

  Pls p = extract_mopls(l).pls();
  auto pp = classify_pls(p);
  LabeledGraph g;
  if (pp.ump) {
    g = standard_graph_ump(p);
    rep.branch = "ump";
  } else {
    auto rec = recognize_augmented_ump(p, /*type1_only=*/true);
    if (rec.yes) {
      g = model_augmented_ump(p, augmentation_records(p, rec.removed_paths),
                              AugmentMode::type1)
              .graph;
      rep.branch = "augmented-type1";
    } else {
      bool got = false;
      for (const auto& cand : naive_glue_all(p)) {
        if (!check_rank_model(p, cand).ok) continue;
        if (!check_line_pres(p, cand)) continue;
        if (!check_circuit_friendly(p, cand).ok) continue;
        g = cand;
        got = true;
        break;
      }
      if (!got) {
        rep.reason = "no circuit-friendly rank-model found: the gluing search exhausted";
        return rep;
      }
      rep.branch = "glue-search";
    }
  }

  rep.model = glue_components(g);
  auto cm = check_lattice_model(l, rep.model);
  require(cm.ok, Err::Internal,
          "circuit-friendly rank-model rejected by the lattice-model check (" +
              cm.failed_condition + "); this breaks the pipeline's design assumption");
  rep.embedding = build_partition_embedding(l, rep.model);
  rep.embedded = true;
  return rep;
}

}  // namespace tightlat
