#ifndef TIGHTLAT_TESTS_PROPERTY_SUITES_HPP_
#define TIGHTLAT_TESTS_PROPERTY_SUITES_HPP_

// Randomized invariant suites shared by the unit tests and the acceptance
// runner. Each suite is a pure function of (n_cases, seed) and reports how
// many instances it checked and the first failure it saw.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tightlat/fixtures.hpp"
#include "tightlat/generators.hpp"
#include "tightlat/lattice.hpp"
#include "tightlat/matroid.hpp"
#include "tightlat/modeling.hpp"
#include "tightlat/pls.hpp"

namespace tightlat_tests {

using namespace tightlat;

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

inline void expect(SuiteResult& r, bool ok, const std::string& what) {
  if (!ok) {
    ++r.failures;
    if (r.first_failure.empty()) r.first_failure = what;
  }
}

// A testifying ordering is a permutation of the line indices in which every
// line contributes at least one point not covered by the earlier ones.
inline bool ordering_testifies(const Pls& p, const std::vector<int>& ord) {
  if (ord.size() != p.lines.size()) return false;
  std::set<int> support, used;
  for (int li : ord) {
    if (li < 0 || li >= static_cast<int>(p.lines.size()) || used.count(li))
      return false;
    used.insert(li);
    int fresh = 0;
    for (int q : p.lines[li]) fresh += support.count(q) ? 0 : 1;
    for (int q : p.lines[li]) support.insert(q);
    if (fresh == 0) return false;
  }
  return true;
}

inline Pls mixed_pls(Rng& rng, int i) {
  switch (i % 5) {
    case 0: return random_pls(rng, 5 + i % 7, 2 + i % 5);
    case 1: return random_qimp(rng, 3 + i % 3, i % 3);
    case 2: return random_ump(rng, 1 + i % 3);
    case 3: return random_acyclic_pls(rng, 3 + i % 8);
    default: return random_type1_augmented(rng, 1 + i % 2).pls;
  }
}

// Every profile flag that quantifies over cycles is vacuous on acyclic
// input, QIMP forces sparseness, and UMP forces link-freeness which forces
// benign links. The testifying ordering must really testify.
inline SuiteResult suite_implication_chain(int n_cases, std::uint64_t seed) {
  SuiteResult r{"implication-chain"};
  Rng rng(seed);
  for (int i = 0; i < n_cases; ++i) {
    Pls p = mixed_pls(rng, i);
    auto f = classify_pls(p);
    ++r.cases;
    if (f.acyclic) {
      expect(r, f.ump && f.nmpl && f.bmpl && f.sparse && f.small_girth,
             "acyclic PLS missing a vacuous cycle property");
    }
    expect(r, !f.qimp || f.sparse, "QIMP without sparseness");
    expect(r, !f.two_connected_qimp || f.qimp, "2-connected flag without QIMP");
    expect(r, !f.ump || f.nmpl, "UMP with a midpoint-link");
    expect(r, !f.nmpl || f.bmpl, "link-free PLS not BMPL");
    if (f.sparse) {
      expect(r, ordering_testifies(p, f.testifying_ordering),
             "invalid testifying ordering");
    } else {
      expect(r, f.testifying_ordering.empty(),
             "ordering reported for a non-sparse PLS");
    }
  }
  return r;
}

// Exhaustive order search over line subsets: is there a build order in
// which every line brings a new point?
inline bool order_search_sparse(const Pls& p) {
  int m = static_cast<int>(p.lines.size());
  if (m == 0) return true;
  std::vector<char> seen(std::size_t(1) << m, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  const std::uint32_t full = (std::uint32_t(1) << m) - 1;
  while (!stack.empty()) {
    std::uint32_t mask = stack.back();
    stack.pop_back();
    if (mask == full) return true;
    std::set<int> support;
    for (int l = 0; l < m; ++l)
      if (mask >> l & 1)
        for (int q : p.lines[l]) support.insert(q);
    for (int l = 0; l < m; ++l) {
      if (mask >> l & 1) continue;
      std::uint32_t next = mask | (std::uint32_t(1) << l);
      if (seen[next]) continue;
      int fresh = 0;
      for (int q : p.lines[l]) fresh += support.count(q) ? 0 : 1;
      if (fresh >= 1) {
        seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  return false;
}

// Adding a line that meets the current support in s points changes the rank
// by 2 - s, and the sparse flag agrees with the exhaustive order search.
inline SuiteResult suite_rank_increments(int n_cases, std::uint64_t seed) {
  SuiteResult r{"rank-increments"};
  Rng rng(seed);
  for (int i = 0; i < n_cases; ++i) {
    Pls p = random_pls(rng, 5 + i % 6, 2 + i % 6);
    ++r.cases;
    std::vector<int> order(p.lines.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::shuffle(order.begin(), order.end(), rng);
    std::set<int> support;
    std::vector<std::vector<int>> chosen;
    int predicted = 0;
    bool steps_ok = true;
    for (int li : order) {
      int s = 0;
      for (int q : p.lines[li]) s += support.count(q) ? 1 : 0;
      for (int q : p.lines[li]) support.insert(q);
      chosen.push_back({p.lines[li][0], p.lines[li][1], p.lines[li][2]});
      predicted += 2 - s;
      std::vector<int> pts(support.begin(), support.end());
      if (components_and_rank(build_pls(pts, chosen)).rk != predicted)
        steps_ok = false;
    }
    expect(r, steps_ok, "one-line extension changes rank by other than 2 - s");
    expect(r, classify_pls(p).sparse == order_search_sparse(p),
           "sparse flag disagrees with the order search");
  }
  return r;
}

// Benign type-1 links keep the class closed: the result stays BMPL and
// sparse, the recognizer accepts it in type-1 mode, and the recorded
// history replays verbatim.
inline SuiteResult suite_type1_closure(int n_cases, std::uint64_t seed) {
  SuiteResult r{"type1-closure"};
  Rng rng(seed);
  for (int i = 0; i < n_cases; ++i) {
    auto s = random_type1_augmented(rng, 1 + i % 3);
    ++r.cases;
    expect(r, classify_pls(s.base).ump, "augmentation base is not a UMP");
    auto f = classify_pls(s.pls);
    expect(r, f.bmpl, "type-1 augmented UMP lost BMPL");
    expect(r, f.sparse, "type-1 augmented UMP lost sparseness");
    expect(r, recognize_augmented_ump(s.pls, true).yes,
           "type-1 recognizer rejects a type-1 history");
    Pls cur = s.base;
    bool replay_ok = true;
    for (const auto& step : s.history) {
      if (step.type != 1 || step.link.size() < 2) {
        replay_ok = false;
        break;
      }
      auto res = add_path(cur, step.link.front(), step.link.back(),
                          static_cast<int>(step.link.size()) - 2);
      if (!res.benign_augmentation || res.path != step.link) {
        replay_ok = false;
        break;
      }
      cur = res.pls;
    }
    expect(r, replay_ok, "recorded history does not replay as benign links");
    expect(r,
           replay_ok && cur.points == s.pls.points && cur.lines == s.pls.lines,
           "replayed augmentation differs from the sample");
  }
  return r;
}

// On sparse input every line-preserving model satisfies mrk <= rk, for
// glued graphs and for binary labelings alike.
inline SuiteResult suite_model_rank_inequality(int n_cases, std::uint64_t seed) {
  SuiteResult r{"model-rank-inequality"};
  Rng rng(seed);
  for (int i = 0; r.cases < n_cases; ++i) {
    if (i > 80 * n_cases) {
      expect(r, false, "generator starved");
      break;
    }
    Pls p;
    switch (i % 4) {
      case 0: p = random_acyclic_pls(rng, 4 + i % 6); break;
      case 1: p = random_qimp(rng, 3 + i % 3, i % 2); break;
      case 2: p = random_ump(rng, 1 + i % 2); break;
      default: p = random_pls(rng, 5 + i % 5, 2 + i % 4); break;
    }
    if (p.lines.empty() || p.lines.size() > 6 || p.points.size() > 10) continue;
    if (!classify_pls(p).sparse) continue;
    ++r.cases;
    int rk = components_and_rank(p).rk;
    for (const auto& g : naive_glue_all(p)) {
      expect(r, check_line_pres(p, g), "glued graph lost line preservation");
      auto rmc = check_rank_model(p, g);
      expect(r, rmc.rk == rk, "model check recomputes a different rank");
      expect(r, rmc.mrk <= rk, "model rank exceeds PLS rank on sparse input");
      expect(r, rmc.ok == (rmc.mrk == rmc.rk), "rank-model flag inconsistent");
    }
    auto bm = binary_model_search(p);
    if (bm.found)
      expect(r, bm.model.rank() <= rk, "binary model rank exceeds PLS rank");
  }
  return r;
}

inline LabeledGraph subgraph_of_labels(const LabeledGraph& g,
                                       const std::vector<int>& labels) {
  std::set<int> want(labels.begin(), labels.end());
  std::vector<int> vmap(g.n_vertices, -1);
  LabeledGraph sub;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!want.count(g.labels[e])) continue;
    int u = g.edges[e].first, v = g.edges[e].second;
    if (vmap[u] < 0) vmap[u] = sub.add_vertex();
    if (vmap[v] < 0) vmap[v] = sub.add_vertex();
    sub.add_edge(vmap[u], vmap[v], g.labels[e]);
  }
  return sub;
}

// In a line-preserving model, a cycle whose support image reaches the full
// configuration rank (= cycle length) spans a wheel.
inline SuiteResult suite_wheel_conclusion(int n_cases, std::uint64_t seed) {
  SuiteResult r{"wheel-conclusion"};
  Rng rng(seed);
  int hits = 0;
  for (int i = 0; r.cases < n_cases; ++i) {
    if (i > 80 * n_cases) {
      expect(r, false, "generator starved");
      break;
    }
    Pls p;
    LabeledGraph g;
    if (i % 3 == 2) {
      p = random_pls(rng, 5 + i % 5, 3 + i % 3);
      if (p.lines.size() > 6 || pls_is_acyclic(p)) continue;
      if (!classify_pls(p).sparse) continue;
      auto models = naive_glue_all(p);
      if (models.empty()) continue;
      g = models[i % models.size()];
    } else {
      p = random_ump(rng, 1 + i % 2);
      if (pls_is_acyclic(p)) continue;
      g = standard_graph_ump(p);
    }
    if (!check_line_pres(p, g)) continue;
    ++r.cases;
    for (const auto& c : all_cycles(p)) {
      auto support = c.support();
      if (edge_set_rank(g, support) != c.length()) continue;
      ++hits;
      expect(r, graph_is_wheel(subgraph_of_labels(g, support)),
             "full-rank cycle image is not a wheel");
    }
  }
  expect(r, hits > 0, "wheel conclusion never exercised");
  return r;
}

// A bijective line-preserving model that preserves cycles only exists over
// a BMPL input.
inline SuiteResult suite_cycle_pres_bmpl(int n_cases, std::uint64_t seed) {
  SuiteResult r{"cycle-preservation-forces-bmpl"};
  Rng rng(seed);
  int hits = 0;
  for (int i = 0; r.cases < n_cases; ++i) {
    if (i > 80 * n_cases) {
      expect(r, false, "generator starved");
      break;
    }
    Pls p;
    std::vector<LabeledGraph> models;
    if (i % 2 == 0) {
      p = random_ump(rng, 1 + i % 2);
      if (pls_is_acyclic(p)) continue;
      models.push_back(standard_graph_ump(p));
    } else {
      p = random_pls(rng, 5 + i % 5, 2 + i % 4);
      if (p.lines.size() > 6 || pls_is_acyclic(p)) continue;
      models = naive_glue_all(p);
      if (models.empty()) continue;
    }
    ++r.cases;
    bool bmpl = classify_pls(p).bmpl;
    for (const auto& g : models) {
      if (!check_line_pres(p, g)) continue;
      if (check_cycle_preserving(p, g)) {
        ++hits;
        expect(r, bmpl, "cycle-preserving model of a non-BMPL PLS");
      }
    }
  }
  expect(r, hits > 0, "cycle preservation never exercised");
  return r;
}

// rk = |lines| - r* + c, witnessed by an acyclic PLS with the same
// component and line counts and r* extra point copies.
inline SuiteResult suite_split_rank_identity(int n_cases, std::uint64_t seed) {
  SuiteResult r{"split-rank-identity"};
  Rng rng(seed);
  for (int i = 0; r.cases < n_cases; ++i) {
    if (i > 80 * n_cases) {
      expect(r, false, "generator starved");
      break;
    }
    int nl = 2 + i % 7;
    int np = i % 3 == 0 ? 5 + i % 5 : 2 * nl + 1 + i % 4;
    Pls p = random_pls(rng, np, nl);
    if (p.lines.size() > 8) continue;
    auto cr = components_and_rank(p);
    // the exact deepening is exponential in the split count, so keep the
    // expected count (2|lines| + c - |points|) within reach
    if (2 * static_cast<int>(p.lines.size()) + cr.c -
            static_cast<int>(p.points.size()) >
        3)
      continue;
    ++r.cases;
    auto sr = split_rank(p);
    expect(r, cr.rk == static_cast<int>(p.lines.size()) - sr.r_star + cr.c,
           "split-rank identity fails");
    expect(r, pls_is_acyclic(sr.acyclic_witness), "split witness not acyclic");
    auto wr = components_and_rank(sr.acyclic_witness);
    expect(r, wr.c == cr.c, "split witness changes the component count");
    expect(r, sr.acyclic_witness.lines.size() == p.lines.size(),
           "split witness changes the line count");
    expect(r, sr.acyclic_witness.points.size() == p.points.size() + sr.r_star,
           "split witness point count is off");
  }
  return r;
}

// |J(L)| >= 2 d(L) - s(L) on modular lattices, with both sides recomputed
// from first principles.
inline SuiteResult suite_ji_bound_modular(int n_cases, std::uint64_t seed) {
  SuiteResult r{"ji-bound-modular"};
  Rng rng(seed);
  for (int i = 0; i < n_cases; ++i) {
    Lattice l = (i % 4 == 3) ? random_distributive_lattice(rng, 3 + i % 4)
                             : random_modular_lattice(rng, 40);
    ++r.cases;
    auto b = ji_bound(l);
    expect(r, b.lhs >= b.rhs, "join-irreducible bound violated");
    expect(r, b.lhs == static_cast<int>(join_irreducibles(l).j.size()),
           "bound lhs differs from the join-irreducible count");
    expect(r, b.rhs == 2 * l.height() - maximal_congruences(l).s,
           "bound rhs differs from 2 height - factor count");
    expect(r, b.sharp == (b.lhs == b.rhs), "sharpness flag wrong");
  }
  return r;
}

// The MoPLS of a thin lattice has rank d(L) and one component per
// subdirect factor.
inline SuiteResult suite_mopls_rank_thin(int n_cases, std::uint64_t seed) {
  SuiteResult r{"mopls-rank-thin"};
  Rng rng(seed);
  std::vector<Lattice> pool;
  for (const auto& fx : fixtures())
    if (fx.kind == "lattice" && classify_lattice(fx.lattice).thin)
      pool.push_back(fx.lattice);
  for (int i = 0; i < n_cases; ++i) {
    Lattice l = i < static_cast<int>(pool.size())
                    ? pool[i]
                    : random_thin_lattice(rng, 40);
    ++r.cases;
    auto pr = components_and_rank(extract_mopls(l).pls());
    expect(r, pr.rk == l.height(), "MoPLS rank differs from lattice height");
    expect(r, pr.c == maximal_congruences(l).s,
           "MoPLS component count differs from the factor count");
  }
  return r;
}

inline std::vector<SuiteResult> run_all_property_suites(int n_cases) {
  return {
      suite_implication_chain(n_cases, 101),
      suite_rank_increments(n_cases, 102),
      suite_type1_closure(n_cases, 103),
      suite_model_rank_inequality(n_cases, 104),
      suite_wheel_conclusion(n_cases, 105),
      suite_cycle_pres_bmpl(n_cases, 106),
      suite_split_rank_identity(n_cases, 107),
      suite_ji_bound_modular(n_cases, 108),
      suite_mopls_rank_thin(n_cases, 109),
  };
}

}  // namespace tightlat_tests

#endif  // TIGHTLAT_TESTS_PROPERTY_SUITES_HPP_
