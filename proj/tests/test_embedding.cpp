#include <algorithm>
#include <set>

#include "doctest.h"
#include "tightlat/embedding.hpp"
#include "tightlat/fixtures.hpp"
#include "tightlat/modeling.hpp"

using namespace tightlat;

TEST_CASE("partition arithmetic") {
  auto q = make_partition(4, {{3, 1}, {4}, {2}});
  CHECK(q.blocks == std::vector<std::vector<int>>{{1, 3}, {2}, {4}});
  CHECK(q.height() == 1);
  auto c = comp_partition(4, {{1, 2}});
  CHECK(c.blocks == std::vector<std::vector<int>>{{1, 2}, {3}, {4}});
  auto tree = comp_partition(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(tree == top_partition(4));

  auto a = make_partition(4, {{1, 2}, {3, 4}});
  auto b = make_partition(4, {{1, 3}, {2, 4}});
  CHECK(partition_meet(a, b) == bottom_partition(4));
  CHECK(partition_join(a, b) == top_partition(4));
  CHECK(partition_leq(bottom_partition(4), a));
  CHECK(!partition_leq(a, b));
  CHECK(partition_is_cover(a, top_partition(4)));
  CHECK(!partition_is_cover(bottom_partition(4), top_partition(4)));

  CHECK_THROWS_WITH_AS(make_partition(3, {{1, 2}}), doctest::Contains("ParseError"),
                       Error);
  CHECK_THROWS_AS(make_partition(3, {{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(make_partition(3, {{1, 2}, {3, 4}}), Error);
}

TEST_CASE("materialized partition lattices match the generic builder") {
  auto p3 = build_part_lattice(3);
  CHECK(p3.elements.size() == 5);
  CHECK(p3.lattice.atoms().size() == 3);
  CHECK(lattices_isomorphic(p3.lattice, lattice_fixture("m3")));

  auto p4 = build_part_lattice(4);
  CHECK(p4.elements.size() == 15);
  auto ref = build_lattice(p4.lattice.covers);
  CHECK(ref.leq == p4.lattice.leq);
  CHECK(ref.meet == p4.lattice.meet);
  CHECK(ref.join == p4.lattice.join);
  CHECK(ref.bottom == p4.lattice.bottom);
  CHECK(ref.top == p4.lattice.top);
  CHECK(ref.height_of == p4.lattice.height_of);

  auto p5 = build_part_lattice(5);
  CHECK(p5.elements.size() == 52);
  CHECK(p5.lattice.height() == 4);
}

TEST_CASE("triangle models the diamond") {
  auto m3 = lattice_fixture("m3");
  LabeledGraph tri;
  tri.n_vertices = 3;
  tri.add_edge(0, 1, 1);
  tri.add_edge(0, 2, 2);
  tri.add_edge(1, 2, 3);
  auto cm = check_lattice_model(m3, tri);
  CHECK(cm.ok);
  auto emb = build_partition_embedding(m3, tri);
  CHECK(emb.certificate.tight());
  CHECK(emb.n == 3);
  std::set<Partition> atom_images{emb.map[1], emb.map[2], emb.map[3]};
  CHECK(atom_images.size() == 3);
  for (const auto& part : atom_images) CHECK(part.height() == 1);
  CHECK(emb.map[0] == bottom_partition(3));
  CHECK(emb.map[4] == top_partition(3));

  // graph rank 2 with two edges cannot carry three join irreducibles
  LabeledGraph path;
  path.n_vertices = 3;
  path.add_edge(0, 1, 1);
  path.add_edge(1, 2, 2);
  CHECK_THROWS_WITH_AS(check_lattice_model(m3, path),
                       doctest::Contains("NotABijection"), Error);

  // extraction round-trip
  auto ex = extract_model_from_embedding(m3, emb.n, emb.map);
  CHECK(ex.glued.n_vertices == 3);
  CHECK(ex.glued.edges.size() == 3);
  auto emb2 = build_partition_embedding(m3, ex.glued);
  CHECK(emb2.map == emb.map);
}

TEST_CASE("distributive embeddings") {
  auto d2 = lattice_fixture("d2");
  auto e = distributive_embedding(d2);
  CHECK(e.n == 2);
  CHECK(e.map[0] == bottom_partition(2));
  CHECK(e.map[1] == top_partition(2));

  auto e2 = distributive_embedding(lattice_fixture("boolean2"));
  CHECK(e2.n == 3);
  CHECK(e2.certificate.tight());

  auto e3 = distributive_embedding(lattice_fixture("chain2"));
  CHECK(e3.n == 3);
  CHECK(e3.certificate.tight());

  auto e4 = distributive_embedding(lattice_fixture("boolean3"));
  CHECK(e4.n == 4);
  CHECK(e4.certificate.tight());

  CHECK_THROWS_WITH_AS(distributive_embedding(lattice_fixture("m3")),
                       doctest::Contains("NotDistributive"), Error);
}

static PartitionEmbedding product_part5() {
  auto l2 = lattice_fixture("m3_x_d2");
  auto mc = maximal_congruences(l2);
  REQUIRE(mc.s == 2);
  std::vector<PartitionEmbedding> fs;
  for (const auto& f : mc.factors) {
    auto r = direct_embedding_search(f, f.height() + 1);
    REQUIRE(r.found);
    fs.push_back(r.embedding);
  }
  return subdirect_embedding(l2, fs);
}

TEST_CASE("subdirect embedding of the product lattice") {
  auto l2 = lattice_fixture("m3_x_d2");
  auto part5 = product_part5();
  CHECK(part5.n == 5);
  CHECK(part5.certificate.tight());

  // simple lattice: the one-factor wrapper is the factor embedding itself
  auto m3 = lattice_fixture("m3");
  auto mcm = maximal_congruences(m3);
  CHECK(mcm.s == 1);
  auto rm = direct_embedding_search(mcm.factors[0], 3);
  REQUIRE(rm.found);
  auto wrap = subdirect_embedding(m3, {rm.embedding});
  CHECK(wrap.n == 3);
  CHECK(wrap.certificate.tight());

  // dropping a factor leaves covers unpreserved
  auto mc = maximal_congruences(l2);
  auto r0 = direct_embedding_search(mc.factors[0], mc.factors[0].height() + 1);
  REQUIRE(r0.found);
  CHECK_THROWS_WITH_AS(subdirect_embedding(l2, {r0.embedding}),
                       doctest::Contains("FactorNotTight"), Error);
}

TEST_CASE("extraction glues the subdirect image connected") {
  auto l2 = lattice_fixture("m3_x_d2");
  auto part5 = product_part5();
  auto ex = extract_model_from_embedding(l2, 5, part5.map);
  CHECK(ex.raw.n_vertices == 5);
  CHECK(ex.raw.edges.size() == 4);
  CHECK(ex.raw.num_components() == 2);
  CHECK(ex.glued.n_vertices == 4);
  CHECK(ex.glued.connected());
  auto emb4 = build_partition_embedding(l2, ex.glued);
  CHECK(emb4.n == 4);
  CHECK(emb4.certificate.tight());
}

TEST_CASE("brute force search agrees with the direct oracle") {
  auto m3 = lattice_fixture("m3");
  auto rm3 = brute_force_embedding_search(m3, 3);
  REQUIRE(rm3.found);
  CHECK(rm3.embedding.n == 3);
  CHECK(rm3.embedding.certificate.tight());

  auto l2 = lattice_fixture("m3_x_d2");
  auto rl2 = brute_force_embedding_search(l2, 4);
  REQUIRE(rl2.found);
  CHECK(rl2.embedding.certificate.tight());
  CHECK(rl2.graph.n_vertices == 4);

  auto lm = lattice_fixture("lm_gf2_3");
  CHECK(lm.height() == 3);
  CHECK(join_irreducibles(lm).j.size() == 7);
  CHECK(!brute_force_embedding_search(lm, 4).found);

  CHECK(direct_embedding_search(m3, 3).found);
  CHECK(direct_embedding_search(l2, 4).found);
  CHECK(!direct_embedding_search(lm, 4).found);

  // padding works, going below the height bound does not
  auto rl2pad = brute_force_embedding_search(l2, 5);
  REQUIRE(rl2pad.found);
  CHECK(rl2pad.embedding.n == 5);
  CHECK(rl2pad.embedding.certificate.tight());
  CHECK(!brute_force_embedding_search(l2, 3).found);
}

TEST_CASE("geometric embedding via matroid flats") {
  auto m3 = lattice_fixture("m3");
  BinaryMatroid tri = make_binary_matroid({1, 2, 3}, {1u, 2u, 3u}, 2);
  PointToElement phi{{1, 1}, {2, 2}, {3, 3}};
  auto ge = build_geometric_embedding(m3, tri, phi);
  CHECK(ge.flat_sets.size() == 5);
  CHECK(ge.certificate.tight());
  CHECK(lattices_isomorphic(ge.flats, m3));
}

TEST_CASE("triangle plus pendant models the product lattice") {
  auto l2 = lattice_fixture("m3_x_d2");
  auto jis = join_irreducibles(l2).j;
  REQUIRE(jis.size() == 4);
  auto mop = extract_mopls(l2);
  REQUIRE(mop.lines.size() == 1);
  auto line = mop.lines[0];
  int iso = -1;
  for (int p : jis)
    if (p != line[0] && p != line[1] && p != line[2]) iso = p;
  REQUIRE(iso >= 0);

  LabeledGraph h2;
  h2.n_vertices = 4;
  h2.add_edge(0, 1, line[0]);
  h2.add_edge(0, 2, line[1]);
  h2.add_edge(1, 2, line[2]);
  h2.add_edge(0, 3, iso);
  CHECK(check_lattice_model(l2, h2).ok);

  auto gm = graphic_matroid(h2);
  PointToElement idphi;
  for (int p : jis) idphi.emplace_back(p, p);
  auto ge2 = build_geometric_embedding(l2, gm, idphi);
  CHECK(ge2.flat_sets.size() == 10);
  CHECK(ge2.flats.height() == 3);
  CHECK(ge2.certificate.tight());
  auto embh2 = build_partition_embedding(l2, h2);
  CHECK(embh2.n == 4);
  CHECK(embh2.certificate.tight());

  // a 4-circuit carrying all four labels does NOT model the product: the
  // isolated join irreducible is not below the join of the line
  LabeledGraph c4;
  c4.n_vertices = 4;
  c4.add_edge(0, 1, line[0]);
  c4.add_edge(1, 2, iso);
  c4.add_edge(2, 3, line[1]);
  c4.add_edge(0, 3, line[2]);
  auto cm4 = check_lattice_model(l2, c4);
  CHECK(!cm4.ok);
  CHECK(cm4.failed_condition.substr(0, 13) == "circuit-join:");
}

TEST_CASE("stacked diamond admits both models with one partition image") {
  // diamond on top of a two-element chain: the line joins to the top and the
  // isolated join irreducible sits below it, so the 4-circuit works as well
  auto l2s = lattice_fixture("l2");
  CHECK(l2s.n == 6);
  auto prof = classify_lattice(l2s);
  CHECK(prof.modular);
  CHECK(prof.thin);
  CHECK(prof.height == 3);
  auto mop = extract_mopls(l2s);
  REQUIRE(mop.lines.size() == 1);
  CHECK(mop.points.size() == 4);
  CHECK(mop.order.size() == 3);
  auto line = mop.lines[0];
  int iso = -1;
  for (int p : mop.points)
    if (p != line[0] && p != line[1] && p != line[2]) iso = p;
  REQUIRE(iso >= 0);
  CHECK(l2s.leq[iso][l2s.top]);

  LabeledGraph h2s, c4s;
  h2s.n_vertices = 4;
  h2s.add_edge(0, 1, line[0]);
  h2s.add_edge(0, 2, line[1]);
  h2s.add_edge(1, 2, line[2]);
  h2s.add_edge(0, 3, iso);
  c4s.n_vertices = 4;
  c4s.add_edge(0, 1, line[0]);
  c4s.add_edge(1, 2, iso);
  c4s.add_edge(2, 3, line[1]);
  c4s.add_edge(0, 3, line[2]);
  CHECK(check_lattice_model(l2s, h2s).ok);
  CHECK(check_lattice_model(l2s, c4s).ok);
  auto embh = build_partition_embedding(l2s, h2s);
  auto embc = build_partition_embedding(l2s, c4s);
  CHECK(embh.certificate.tight());
  CHECK(embc.certificate.tight());

  // the two graphs induce the same map up to renaming the ground set
  bool aligned = false;
  std::vector<int> pi{1, 2, 3, 4};
  do {
    bool all = true;
    for (int a = 0; a < l2s.n && all; ++a) {
      std::vector<std::vector<int>> blocks;
      for (const auto& blk : embh.map[a].blocks) {
        std::vector<int> nb;
        for (int x : blk) nb.push_back(pi[x - 1]);
        blocks.push_back(nb);
      }
      all = make_partition(4, blocks) == embc.map[a];
    }
    aligned = aligned || all;
  } while (!aligned && std::next_permutation(pi.begin(), pi.end()));
  CHECK(aligned);
}

TEST_CASE("twisted matroid bijection fails the closure condition") {
  auto lm = lattice_fixture("lm_gf2_3");
  auto fano = matroid_fixture("fano_matroid");
  PointToElement good, twisted;
  auto jis = join_irreducibles(lm).j;
  REQUIRE(jis.size() == 7);
  // atoms of the fixture are elements 1..7 with column value equal to the id
  for (int i = 0; i < 7; ++i) good.emplace_back(jis[i], i + 1);
  for (int i = 0; i < 7; ++i)
    twisted.emplace_back(jis[i], i == 0 ? 2 : i == 1 ? 1 : i + 1);

  auto cg = check_lattice_model(lm, fano, good);
  CHECK(cg.ok);
  auto ge = build_geometric_embedding(lm, fano, good);
  CHECK(ge.certificate.tight());
  CHECK(ge.flat_sets.size() == 16);

  auto ct = check_lattice_model(lm, fano, twisted);
  CHECK(!ct.ok);
  CHECK(ct.failed_condition.substr(0, 8) == "closure:");
  CHECK_THROWS_WITH_AS(build_geometric_embedding(lm, fano, twisted),
                       doctest::Contains("ModelCheckFailed"), Error);
}

TEST_CASE("pipeline embeds thin fixtures through the standard branch") {
  auto rep = pipeline_embed_thin(lattice_fixture("m3_x_d2"));
  CHECK(rep.embedded);
  CHECK(rep.branch == "ump");
  CHECK(rep.embedding.n == 4);
  CHECK(rep.embedding.certificate.tight());
  CHECK(rep.model.n_vertices == 4);
  CHECK(rep.model.connected());

  auto reps = pipeline_embed_thin(lattice_fixture("l2"));
  CHECK(reps.embedded);
  CHECK(reps.branch == "ump");
  CHECK(reps.embedding.n == 4);
  CHECK(reps.embedding.certificate.tight());

  auto repm = pipeline_embed_thin(lattice_fixture("m3"));
  CHECK(repm.embedded);
  CHECK(repm.embedding.n == 3);

  auto repb = pipeline_embed_thin(lattice_fixture("boolean3"));
  CHECK(repb.embedded);
  CHECK(repb.embedding.certificate.tight());
  CHECK(repb.embedding.n == 4);
}

TEST_CASE("pipeline rejects unembeddable input with a reason") {
  auto rep = pipeline_embed_thin(lattice_fixture("m4"));
  CHECK(!rep.embedded);
  CHECK(rep.reason.find("not thin") != std::string::npos);

  auto rep2 = pipeline_embed_thin(lattice_fixture("lm_gf2_3"));
  CHECK(!rep2.embedded);

  // thin but no line-preserving rank model: the gluing search runs dry
  auto l1 = lattice_fixture("l1");
  CHECK(classify_lattice(l1).thin);
  CHECK(l1.height() == 4);
  auto rep3 = pipeline_embed_thin(l1);
  CHECK(!rep3.embedded);
  CHECK(rep3.reason.find("gluing search exhausted") != std::string::npos);
}

TEST_CASE("gluing graph components preserves rank") {
  LabeledGraph g;
  g.n_vertices = 6;
  g.add_edge(0, 1, 10);
  g.add_edge(3, 4, 11);
  g.add_edge(4, 5, 12);
  auto glued = glue_components(g);  // vertex 2 is edgeless
  CHECK(glued.n_vertices == 4);
  CHECK(glued.connected());
  CHECK(glued.edges.size() == 3);
  CHECK(glued.rank() == g.rank());
}

TEST_CASE("embedding heights obey the vertex bound") {
  // every tight embedding lands in Part(m) with m at least height + 1
  for (const char* nm : {"m3", "m3_x_d2", "l2", "boolean2", "boolean3"}) {
    auto l = lattice_fixture(nm);
    auto rep = pipeline_embed_thin(l);
    REQUIRE(rep.embedded);
    CHECK(rep.embedding.n >= l.height() + 1);
  }
}
