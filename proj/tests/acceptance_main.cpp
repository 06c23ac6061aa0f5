// Acceptance runner: each criterion prints exactly one PASS/FAIL line with
// its runtime, and the exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "property_suites.hpp"
#include "tightlat/embedding.hpp"
#include "tightlat/fixtures.hpp"
#include "tightlat/generators.hpp"
#include "tightlat/lattice.hpp"
#include "tightlat/matroid.hpp"
#include "tightlat/modeling.hpp"
#include "tightlat/pls.hpp"

using namespace tightlat;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

// Lambda-1: rank 4, one component, sparse with a testifying ordering, no
// unique-midpoint property, a non-benign midpoint-link.
bool criterion1(Check& c) {
  Pls p = pls_fixture("lambda1");
  auto cr = components_and_rank(p);
  c.require(cr.rk == 4, "rk != 4");
  c.require(cr.c == 1, "component count != 1");
  auto f = classify_pls(p);
  c.require(f.sparse, "not sparse");
  c.require(tightlat_tests::ordering_testifies(p, f.testifying_ordering),
            "testifying ordering invalid");
  c.require(!f.ump, "ump unexpectedly true");
  c.require(!f.bmpl, "bmpl unexpectedly true");
  return c.ok;
}

// Fano PLS: rank 0, not sparse, its rank-3 binary model is the Fano
// matroid, and that matroid is not graphic.
bool criterion2(Check& c) {
  Pls p = pls_fixture("fano");
  c.require(components_and_rank(p).rk == 0, "rk != 0");
  c.require(!classify_pls(p).sparse, "sparse unexpectedly true");
  auto bm = binary_model_search(p, 3);
  c.require(bm.found, "no rank-3 binary model");
  if (bm.found) {
    auto fixture = matroid_fixture("fano_matroid");
    c.require(matroid_circuits(bm.model) == matroid_circuits(fixture),
              "model circuits differ from the Fano matroid");
    c.require(!is_graphic(bm.model).graphic, "Fano model reported graphic");
  }
  return c.ok;
}

// The reference GF(2) labeling line-pres rank-models lambda-1 with mrk 4,
// while the exhaustive triangle-gluing search proves no graph does.
bool criterion3(Check& c) {
  Pls p = pls_fixture("lambda1");
  auto m = matroid_fixture("lambda1_model");
  PointToElement psi;
  for (int q : p.points) psi.push_back({q, q});
  c.require(check_line_pres(p, m, psi), "labeling not line-preserving");
  auto rmc = check_rank_model(p, m, psi);
  c.require(rmc.ok && rmc.mrk == 4 && rmc.rk == 4,
            "labeling is not a rank-model with mrk 4");
  c.require(!naive_glue_search(p, true).found,
            "gluing search unexpectedly found a graph");
  return c.ok;
}

// Standard graphs of the two QIMP fixtures have rank |V|-1, and the
// standard graph of their glued UMP is a cycle-preserving circuit-friendly
// rank-model with the gluing arithmetic exact.
bool criterion4(Check& c) {
  Pls q1 = pls_fixture("qimp1"), q2 = pls_fixture("qimp2");
  Pls j5 = pls_fixture("j5");
  c.require(components_and_rank(q1).rk == 6 - 3, "rk(qimp1) != 3");
  c.require(components_and_rank(q2).rk == 5 - 2, "rk(qimp2) != 3");
  auto g1 = standard_graph_qimp(q1), g2 = standard_graph_qimp(q2);
  c.require(g1.rank() == g1.n_vertices - 1, "qimp1 graph rank != |V|-1");
  c.require(g2.rank() == g2.n_vertices - 1, "qimp2 graph rank != |V|-1");
  c.require(check_rank_model(q1, g1).ok, "qimp1 graph not a rank-model");
  c.require(check_rank_model(q2, g2).ok, "qimp2 graph not a rank-model");
  auto g5 = standard_graph_ump(j5);
  c.require(g5.n_vertices == g1.n_vertices + g2.n_vertices - 2,
            "glued vertex count not |V1|+|V2|-2");
  auto rmc = check_rank_model(j5, g5);
  c.require(rmc.ok && rmc.mrk == g1.rank() + g2.rank() - 1,
            "glued model rank not mrk1+mrk2-1");
  c.require(check_line_pres(j5, g5), "glued graph not line-preserving");
  c.require(check_cycle_preserving(j5, g5), "glued graph not cycle-preserving");
  c.require(check_circuit_friendly(j5, g5).ok,
            "glued graph not circuit-friendly");
  return c.ok;
}

// The augmented fixture replays to a line-pres rank-model whose big cycle
// drops rank: rk(C*,L*) = 7 > mrk of the cycle image.
bool criterion5(Check& c) {
  Pls p = pls_fixture("j2");
  c.require(p.points.size() == 14 && p.lines.size() == 8, "not 14 points / 8 lines");
  c.require(components_and_rank(p).rk == 6, "rk != 6");
  auto cycles = all_cycles(p);
  c.require(cycles.size() == 4, "cycle count != 4");
  c.require(classify_pls(p).bmpl, "not BMPL");
  auto rec = recognize_augmented_ump(p, false);
  c.require(rec.yes, "not recognized as an augmented UMP");
  if (!rec.yes) return c.ok;
  auto records = augmentation_records(p, rec.removed_paths);
  auto gm = model_augmented_ump(p, records, AugmentMode::small_girth);
  c.require(check_line_pres(p, gm.graph), "replayed graph not line-preserving");
  c.require(check_rank_model(p, gm.graph).ok, "replayed graph not a rank-model");
  bool saw_big = false;
  for (const auto& cy : cycles) {
    if (cy.length() != 7) continue;
    saw_big = true;
    auto support = cy.support();
    int conf_rank = static_cast<int>(support.size()) - cy.length();
    int mrk = edge_set_rank(gm.graph, support);
    c.require(conf_rank == 7, "big cycle configuration rank != 7");
    c.require(mrk == 6, "big cycle image rank != 6");
    c.require(conf_rank > mrk, "no rank drop on the big cycle");
  }
  c.require(saw_big, "no 7-line cycle found");
  return c.ok;
}

// Pipeline embeddings: M3 into Part(3), M3 x D2 into Part(4), extraction
// round-trips, and the subdirect juxtaposition lands tight in Part(5).
bool criterion6(Check& c) {
  auto m3 = lattice_fixture("m3");
  auto rep3 = pipeline_embed_thin(m3);
  c.require(rep3.embedded && rep3.embedding.n == 3 &&
                rep3.embedding.certificate.tight(),
            "M3 not tightly embedded into Part(3)");
  auto l2 = lattice_fixture("m3_x_d2");
  auto rep4 = pipeline_embed_thin(l2);
  c.require(rep4.embedded && rep4.embedding.n == 4 &&
                rep4.embedding.certificate.tight(),
            "M3 x D2 not tightly embedded into Part(4)");
  if (rep4.embedded) {
    auto ex = extract_model_from_embedding(l2, rep4.embedding.n,
                                           rep4.embedding.map);
    c.require(check_lattice_model(l2, ex.glued).ok,
              "extracted model fails the lattice-model check");
    auto again = build_partition_embedding(l2, ex.glued);
    c.require(again.certificate.tight(), "re-embedding not tight");
  }
  auto mc = maximal_congruences(l2);
  std::vector<PartitionEmbedding> factors;
  for (const auto& f : mc.factors) {
    auto ds = direct_embedding_search(f, f.height() + 1);
    c.require(ds.found, "factor embedding not found");
    if (!ds.found) return c.ok;
    factors.push_back(ds.embedding);
  }
  auto sub = subdirect_embedding(l2, factors);
  c.require(sub.n == 5, "subdirect ground size != 5");
  c.require(sub.certificate.tight(), "subdirect embedding not tight");
  return c.ok;
}

// Nine seeded property suites, 500 cases each, no failures.
bool criterion7(Check& c, std::string& extra) {
  auto results = tightlat_tests::run_all_property_suites(500);
  std::ostringstream names;
  for (const auto& r : results) {
    c.require(r.cases >= 500, r.name + " ran under 500 cases");
    c.require(r.failures == 0,
              r.name + " failed: " + r.first_failure);
    names << " " << r.name << "=" << r.cases;
  }
  extra = names.str();
  return c.ok;
}

// Twenty generated acyclic PLSes with at most 10 points are all
// non-vacuous graph-triggers.
bool criterion8(Check& c) {
  Rng rng(88);
  for (int i = 0; i < 20; ++i) {
    Pls p = random_acyclic_pls(rng, 4 + i % 7);
    auto tr = graph_trigger_check(p);
    c.require(tr.is_trigger, "acyclic PLS not a trigger");
    c.require(!tr.vacuous, "trigger check vacuous on an acyclic PLS");
    if (!c.ok) break;
  }
  return c.ok;
}

// Negative controls: M4 is not thin, LM(GF(2)^3) is not 2-distributive and
// the exhaustive search proves it has no tight partition embedding.
bool criterion9(Check& c) {
  c.require(!classify_lattice(lattice_fixture("m4")).thin,
            "M4 reported thin");
  auto lm = lattice_fixture("lm_gf2_3");
  c.require(!classify_lattice(lm).two_distributive,
            "LM(GF(2)^3) reported 2-distributive");
  auto bf = brute_force_embedding_search(lm, lm.height() + 1);
  c.require(!bf.found, "embedding found for LM(GF(2)^3)");
  return c.ok;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string label;
    std::function<bool(Check&, std::string&)> run;
  };
  auto plain = [](bool (*f)(Check&)) {
    return [f](Check& c, std::string&) { return f(c); };
  };
  std::vector<Entry> entries = {
      {1, "lambda-1 rank, components and classification", plain(criterion1)},
      {2, "Fano PLS rank, binary model and non-graphicness", plain(criterion2)},
      {3, "lambda-1 binary model vs exhausted gluing search", plain(criterion3)},
      {4, "standard graphs and the glued UMP model", plain(criterion4)},
      {5, "augmented fixture replay and big-cycle rank drop", plain(criterion5)},
      {6, "pipeline embeddings, extraction and subdirect map", plain(criterion6)},
      {7, "randomized property suites",
       [](Check& c, std::string& extra) { return criterion7(c, extra); }},
      {8, "acyclic PLSes are non-vacuous graph-triggers", plain(criterion8)},
      {9, "negative controls without tight embeddings", plain(criterion9)},
  };

  int failures = 0;
  for (auto& e : entries) {
    Check c;
    std::string extra;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string threw;
    try {
      ok = e.run(c, extra);
    } catch (const std::exception& ex) {
      threw = ex.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (ok) {
      std::printf("PASS criterion %d: %s (%.2f s)%s\n", e.id, e.label.c_str(),
                  secs, extra.c_str());
    } else {
      ++failures;
      std::string why = threw.empty() ? c.why.str() : "exception: " + threw;
      std::printf("FAIL criterion %d: %s (%.2f s) [%s]\n", e.id,
                  e.label.c_str(), secs, why.c_str());
    }
    std::fflush(stdout);
  }
  return failures;
}
