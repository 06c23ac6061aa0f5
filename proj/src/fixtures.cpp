#include "tightlat/fixtures.hpp"

#include "tightlat/core.hpp"

namespace tightlat {

namespace {

Lattice chain_lattice(int covers) {
  std::vector<std::pair<int, int>> c;
  for (int i = 0; i < covers; ++i) c.push_back({i, i + 1});
  return build_lattice(c);
}

Lattice boolean_lattice(int k) {
  std::vector<int> masks(1 << k);
  for (int m = 0; m < (1 << k); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), [](int a, int b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> index(1 << k);
  for (int i = 0; i < (1 << k); ++i) index[masks[i]] = i;
  std::vector<std::pair<int, int>> covers;
  for (int m = 0; m < (1 << k); ++m)
    for (int j = 0; j < k; ++j)
      if (!(m >> j & 1)) covers.push_back({index[m], index[m | (1 << j)]});
  return build_lattice(covers);
}

// Subspaces of GF(2)^3: ids 0 bottom, 1..7 the nonzero vectors, 7+k the
// plane of vectors orthogonal to k, 15 top.
Lattice lm_gf2_3() {
  std::vector<std::pair<int, int>> covers;
  for (int v = 1; v <= 7; ++v) covers.push_back({0, v});
  for (int k = 1; k <= 7; ++k) {
    for (int v = 1; v <= 7; ++v)
      if (__builtin_popcount(v & k) % 2 == 0) covers.push_back({v, 7 + k});
    covers.push_back({7 + k, 15});
  }
  return build_lattice(covers);
}

std::vector<Fixture> build_corpus() {
  std::vector<Fixture> out;
  auto lat = [&](const std::string& name, Lattice l, const std::string& note,
                 bool reconstructed = false) {
    Fixture f;
    f.name = name;
    f.kind = "lattice";
    f.note = note;
    f.reconstructed = reconstructed;
    f.lattice = std::move(l);
    out.push_back(std::move(f));
  };
  auto pls = [&](const std::string& name, Pls p, const std::string& note,
                 bool reconstructed = false) {
    Fixture f;
    f.name = name;
    f.kind = "pls";
    f.note = note;
    f.reconstructed = reconstructed;
    f.pls = std::move(p);
    out.push_back(std::move(f));
  };
  auto mat = [&](const std::string& name, BinaryMatroid m,
                 const std::string& note) {
    Fixture f;
    f.name = name;
    f.kind = "matroid";
    f.note = note;
    f.matroid = std::move(m);
    out.push_back(std::move(f));
  };

  lat("d2", chain_lattice(1), "two-element chain");
  lat("chain1", chain_lattice(1), "chain with one cover");
  lat("chain2", chain_lattice(2), "chain with two covers");
  lat("chain3", chain_lattice(3), "chain with three covers");
  lat("chain4", chain_lattice(4), "chain with four covers");
  lat("boolean2", boolean_lattice(2), "Boolean lattice of a 2-set");
  lat("boolean3", boolean_lattice(3), "Boolean lattice of a 3-set");
  lat("m3", build_lattice({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
      "diamond: three atoms under one top; modular, not distributive");
  lat("m4",
      build_lattice(
          {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}),
      "four atoms under one top; the smallest non-thin modular lattice");
  lat("m3_x_d2", lattice_product(build_lattice({{0, 1}, {0, 2}, {0, 3},
                                                {1, 4}, {2, 4}, {3, 4}}),
                                 chain_lattice(1)),
      "direct product of the diamond with the two-element chain");
  lat("l2",
      build_lattice({{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}}),
      "diamond stacked on a two-element chain: the subdirect sublattice of "
      "m3_x_d2 whose line of join irreducibles joins to the top");
  lat("lm_gf2_3", lm_gf2_3(),
      "subspace lattice of the 3-dimensional binary vector space; "
      "2-distributivity fails");
  lat("l1",
      reconstruct_from_mopls(
          {1, 2, 3, 4, 5, 6, 7, 8, 9},
          {{5, 1}, {5, 8}, {6, 2}, {6, 9}, {7, 3}, {7, 4}},
          {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 1}, {2, 9, 5}})
          .lattice,
      "height-4 thin modular lattice with nine join irreducibles arranged "
      "as the lambda1 configuration; structure pinned down from stated "
      "invariants rather than an explicit table",
      true);

  pls("lambda1",
      build_pls({1, 2, 3, 4, 5, 6, 7, 8, 9},
                {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 1}, {2, 9, 5}}),
      "nine points on five lines closing two cycles through shared points; "
      "sparse, but midpoints are not unique across cycles");
  pls("j2",
      build_pls({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14},
                {{1, 2, 3},
                 {3, 4, 5},
                 {5, 6, 1},
                 {6, 7, 8},
                 {8, 9, 10},
                 {10, 11, 5},
                 {1, 12, 13},
                 {13, 14, 7}}),
      "fourteen points on eight lines: a triangle of lines grown by two "
      "benign midpoint-link additions");
  pls("fano",
      build_pls({1, 2, 3, 4, 5, 6, 7}, {{1, 2, 3},
                                        {1, 4, 5},
                                        {1, 6, 7},
                                        {2, 4, 6},
                                        {2, 5, 7},
                                        {3, 4, 7},
                                        {3, 5, 6}}),
      "seven points on seven lines: the projective plane of order two");
  pls("qimp1", build_pls({1, 2, 3, 4, 5, 6}, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}}),
      "triangle blueprint fully plotted: six points on three lines");
  pls("qimp2", build_pls({1, 2, 3, 4, 5}, {{1, 2, 3}, {3, 4, 5}}),
      "path blueprint: five points on two lines sharing one junction");
  pls("j5",
      build_pls({1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}, {2, 7, 8}, {8, 9, 10}}),
      "tree of the two QIMPes qimp1 and qimp2 glued at a single point");

  mat("fano_matroid",
      make_binary_matroid({1, 2, 3, 4, 5, 6, 7}, {1u, 2u, 3u, 4u, 5u, 6u, 7u},
                          3),
      "binary matroid of all seven nonzero vectors of GF(2)^3");
  mat("lambda1_model",
      make_binary_matroid({1, 2, 3, 4, 5, 6, 7, 8, 9},
                          {1u, 3u, 2u, 6u, 4u, 12u, 8u, 9u, 7u}, 4),
      "rank-4 binary labeling of lambda1: every line sums to zero");
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> corpus = build_corpus();
  return corpus;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return f;
  fail(Err::ParseError, "unknown fixture: " + name);
}

Lattice lattice_fixture(const std::string& name) {
  const Fixture& f = fixture(name);
  require(f.kind == "lattice", Err::ParseError,
          "fixture " + name + " is not a lattice");
  return f.lattice;
}

Pls pls_fixture(const std::string& name) {
  const Fixture& f = fixture(name);
  require(f.kind == "pls", Err::ParseError,
          "fixture " + name + " is not a pls");
  return f.pls;
}

BinaryMatroid matroid_fixture(const std::string& name) {
  const Fixture& f = fixture(name);
  require(f.kind == "matroid", Err::ParseError,
          "fixture " + name + " is not a matroid");
  return f.matroid;
}

}  // namespace tightlat
