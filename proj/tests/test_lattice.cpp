#include <algorithm>
#include <map>

#include "doctest.h"
#include "tightlat/fixtures.hpp"
#include "tightlat/lattice.hpp"

using namespace tightlat;

TEST_CASE("build_lattice validates input") {
  CHECK_THROWS_WITH_AS(build_lattice({{0, 1}, {1, 0}}), doctest::Contains("NotAPoset"),
                       Error);
  // covers must be irredundant: 0<1<2 plus the composite 0<2
  CHECK_THROWS_AS(build_lattice({{0, 1}, {1, 2}, {0, 2}}), Error);
  // two maximal elements: no top, not a lattice
  CHECK_THROWS_AS(build_lattice({{0, 1}, {0, 2}}), Error);
  // hexagon poset where {1,2} has no unique meet of upper bounds
  CHECK_THROWS_AS(
      build_lattice({{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}),
      Error);
  auto c = build_lattice({{0, 1}, {1, 2}});
  CHECK(c.n == 3);
  CHECK(c.bottom == 0);
  CHECK(c.top == 2);
  CHECK(c.height() == 2);
}

TEST_CASE("chains and boolean lattices are distributive") {
  for (const char* name : {"chain1", "chain2", "chain3", "chain4"}) {
    auto l = lattice_fixture(name);
    auto p = classify_lattice(l);
    CHECK(p.graded);
    CHECK(p.distributive);
    CHECK(p.two_distributive);
    CHECK(p.thin);
    CHECK(p.height == l.n - 1);
  }
  auto b3 = lattice_fixture("boolean3");
  auto p = classify_lattice(b3);
  CHECK(b3.n == 8);
  CHECK(p.height == 3);
  CHECK(p.distributive);
  CHECK(join_irreducibles(b3).j.size() == 3);
  auto mc = maximal_congruences(b3);
  CHECK(mc.s == 3);
  for (const auto& f : mc.factors) CHECK(lattices_isomorphic(f, lattice_fixture("d2")));
}

TEST_CASE("diamond profile, congruences, and bound") {
  auto m3 = lattice_fixture("m3");
  auto p = classify_lattice(m3);
  CHECK(p.graded);
  CHECK(p.height == 2);
  CHECK(p.modular);
  CHECK(p.semimodular);
  CHECK(!p.distributive);
  CHECK(p.two_distributive);
  CHECK(!p.has_covering_m4);
  CHECK(p.thin);

  auto ji = join_irreducibles(m3);
  CHECK(ji.j.size() == 3);
  for (int e : ji.j) CHECK(ji.lower_star[e] == m3.bottom);
  CHECK(ji.j_of[m3.top] == ji.j);

  auto mc = maximal_congruences(m3);
  CHECK(mc.s == 1);
  CHECK(mc.factors.size() == 1);
  CHECK(lattices_isomorphic(mc.factors[0], m3));

  auto jb = ji_bound(m3);
  CHECK(jb.lhs == 3);
  CHECK(jb.rhs == 3);  // 2*2 - 1
  CHECK(jb.sharp);

  auto mo = extract_mopls(m3);
  CHECK(mo.points.size() == 3);
  CHECK(mo.order.empty());
  CHECK(mo.lines.size() == 1);
  CHECK(mo.line_join[0] == m3.top);
  CHECK(components_and_rank(mo.pls()).c == 1);
}

TEST_CASE("product of diamond and chain") {
  auto l = lattice_fixture("m3_x_d2");
  CHECK(l.n == 10);
  auto p = classify_lattice(l);
  CHECK(p.height == 3);
  CHECK(p.modular);
  CHECK(p.thin);

  auto mc = maximal_congruences(l);
  CHECK(mc.s == 2);
  int to_m3 = 0, to_d2 = 0;
  for (const auto& f : mc.factors) {
    if (lattices_isomorphic(f, lattice_fixture("m3"))) ++to_m3;
    if (lattices_isomorphic(f, lattice_fixture("d2"))) ++to_d2;
  }
  CHECK(to_m3 == 1);
  CHECK(to_d2 == 1);

  auto mo = extract_mopls(l);
  CHECK(mo.points.size() == 4);
  CHECK(mo.lines.size() == 1);
  // one component per maximal congruence
  CHECK(components_and_rank(mo.pls()).c == mc.s);
}

TEST_CASE("four atoms with one join value exceed line size") {
  auto m4 = lattice_fixture("m4");
  auto p = classify_lattice(m4);
  CHECK(p.modular);
  CHECK(p.has_covering_m4);
  CHECK(!p.thin);
  CHECK_THROWS_WITH_AS(extract_mopls(m4), doctest::Contains("LineTooLarge"), Error);
}

TEST_CASE("reconstruction from point antichains") {
  auto r = reconstruct_from_mopls({1, 2, 3}, {}, {{1, 2, 3}});
  CHECK(r.lattice.n == 5);
  CHECK(lattices_isomorphic(r.lattice, lattice_fixture("m3")));

  auto r2 = reconstruct_from_mopls({1, 2, 3}, {}, {});
  CHECK(r2.lattice.n == 8);
  CHECK(r2.lattice.height() == 3);
  CHECK(classify_lattice(r2.lattice).distributive);
  CHECK(lattices_isomorphic(r2.lattice, lattice_fixture("boolean3")));
}

// The nine-point five-line fixture: its ideal lattice is the height-4 thin
// modular lattice the corpus ships as "l1".
static const std::vector<std::vector<int>> kNineLines = {
    {1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {1, 7, 8}, {2, 5, 9}};
static const std::vector<std::pair<int, int>> kNineOrder = {
    {5, 1}, {5, 8}, {6, 2}, {6, 9}, {7, 3}, {7, 4}};

// element -> original point, matching each ideal against an order down-set
static std::map<int, int> point_names(const ReconstructedLattice& r) {
  std::map<std::vector<int>, int> downset_to_point;
  for (int x = 1; x <= 9; ++x) {
    std::vector<int> ds = {x};
    for (const auto& o : kNineOrder)
      if (o.second == x) ds.push_back(o.first);
    std::sort(ds.begin(), ds.end());
    downset_to_point[ds] = x;
  }
  std::map<int, int> name;
  for (int i = 0; i < r.lattice.n; ++i) {
    auto it = downset_to_point.find(r.ideals[i]);
    if (it != downset_to_point.end()) name[i] = it->second;
  }
  return name;
}

TEST_CASE("nine-point reconstruction: profile and bound") {
  auto r = reconstruct_from_mopls({1, 2, 3, 4, 5, 6, 7, 8, 9}, kNineOrder, kNineLines);
  const Lattice& l = r.lattice;
  CHECK(l.n == 15);
  CHECK(l.height() == 4);
  auto p = classify_lattice(l);
  CHECK(p.graded);
  CHECK(p.modular);
  CHECK(p.semimodular);
  CHECK(!p.distributive);
  CHECK(p.two_distributive);
  CHECK(!p.has_covering_m4);
  CHECK(p.thin);
  CHECK(join_irreducibles(l).j.size() == 9);
  CHECK(maximal_congruences(l).s == 1);

  auto jb = ji_bound(l);
  CHECK(jb.lhs == 9);
  CHECK(jb.rhs == 7);  // 2*4 - 1
  CHECK(!jb.sharp);

  CHECK(lattices_isomorphic(l, lattice_fixture("l1")));
  CHECK(fixture("l1").reconstructed);
}

TEST_CASE("nine-point reconstruction: extraction round-trips") {
  auto r = reconstruct_from_mopls({1, 2, 3, 4, 5, 6, 7, 8, 9}, kNineOrder, kNineLines);
  const Lattice& l = r.lattice;
  auto ji = join_irreducibles(l);
  auto name = point_names(r);
  CHECK(name.size() == 9);

  // the ideals are exactly the J(a), written in original point names
  for (int a = 0; a < l.n; ++a) {
    std::vector<int> ja;
    for (int e : ji.j_of[a]) ja.push_back(name.at(e));
    std::sort(ja.begin(), ja.end());
    CHECK(ja == r.ideals[a]);
  }

  auto mo = extract_mopls(l);
  CHECK(mo.points.size() == 9);
  CHECK(mo.order.size() == 6);
  CHECK(mo.lines.size() == 5);

  // extraction recovers the pinned order
  std::vector<std::pair<int, int>> ord;
  for (const auto& o : mo.order) ord.push_back({name.at(o.first), name.at(o.second)});
  std::sort(ord.begin(), ord.end());
  auto want = kNineOrder;
  std::sort(want.begin(), want.end());
  CHECK(ord == want);

  // canonical representatives (lexicographically least per join value)
  std::vector<std::vector<int>> lines;
  for (const auto& t : mo.lines) {
    std::vector<int> nm = {name.at(t[0]), name.at(t[1]), name.at(t[2])};
    std::sort(nm.begin(), nm.end());
    lines.push_back(nm);
  }
  std::sort(lines.begin(), lines.end());
  CHECK(lines == std::vector<std::vector<int>>{
                     {1, 2, 3}, {1, 6, 8}, {2, 5, 9}, {3, 4, 5}, {5, 6, 7}});

  // the five join values are distinct and the original family is one of the
  // maximal families
  auto fams = enumerate_mopls_families(l);
  CHECK(fams.size() == 64);
  auto target = kNineLines;
  for (auto& t : target) std::sort(t.begin(), t.end());
  std::sort(target.begin(), target.end());
  bool found = false;
  for (const auto& fam : fams) {
    std::vector<std::vector<int>> fl;
    for (const auto& t : fam.lines) {
      std::vector<int> nm = {name.at(t[0]), name.at(t[1]), name.at(t[2])};
      std::sort(nm.begin(), nm.end());
      fl.push_back(nm);
    }
    std::sort(fl.begin(), fl.end());
    if (fl == target) found = true;
  }
  CHECK(found);

  // reconstructing from the extracted family gives the lattice back
  std::vector<int> pts;
  for (int e : mo.points) pts.push_back(name.at(e));
  std::vector<std::pair<int, int>> ord2;
  for (const auto& o : mo.order) ord2.push_back({name.at(o.first), name.at(o.second)});
  std::vector<std::vector<int>> ls;
  for (const auto& t : mo.lines)
    ls.push_back({name.at(t[0]), name.at(t[1]), name.at(t[2])});
  auto rt = reconstruct_from_mopls(pts, ord2, ls);
  CHECK(lattices_isomorphic(rt.lattice, l));
}

TEST_CASE("localization at coatoms") {
  auto r = reconstruct_from_mopls({1, 2, 3, 4, 5, 6, 7, 8, 9}, kNineOrder, kNineLines);
  const Lattice& l = r.lattice;
  auto mo = extract_mopls(l);
  auto name = point_names(r);
  CHECK(is_locally_acyclic(l, mo));

  bool seen = false;
  for (int a : l.coatoms()) {
    auto loc = localize_at_coatom(l, mo, a);
    CHECK(loc.acyclic);
    if (r.ideals[a] == std::vector<int>{3, 4, 5, 6, 7}) {
      seen = true;
      std::vector<int> pts;
      for (int e : loc.points) pts.push_back(name.at(e));
      std::sort(pts.begin(), pts.end());
      CHECK(pts == std::vector<int>{1, 2, 8, 9});
      std::vector<std::vector<int>> ls;
      for (const auto& t : loc.lines) {
        std::vector<int> nm;
        for (int e : t) nm.push_back(name.at(e));
        std::sort(nm.begin(), nm.end());
        ls.push_back(nm);
      }
      std::sort(ls.begin(), ls.end());
      CHECK(ls == std::vector<std::vector<int>>{{1, 2}, {1, 8}, {2, 9}});
    }
  }
  CHECK(seen);

  // distributive lattices are locally acyclic as well
  auto b3 = lattice_fixture("boolean3");
  CHECK(is_locally_acyclic(b3, extract_mopls(b3)));
}

TEST_CASE("subspace lattice fixture") {
  auto lm = lattice_fixture("lm_gf2_3");
  CHECK(lm.n == 16);
  CHECK(lm.height() == 3);
  auto p = classify_lattice(lm);
  CHECK(p.modular);
  CHECK(!p.two_distributive);
  CHECK(!p.thin);
  CHECK(join_irreducibles(lm).j.size() == 7);
  CHECK(lm.atoms().size() == 7);
  CHECK(lm.coatoms().size() == 7);
}

TEST_CASE("lattice product multiplies heights and sizes") {
  auto m3 = lattice_fixture("m3");
  auto b2 = lattice_fixture("boolean2");
  auto pr = lattice_product(m3, b2);
  CHECK(pr.n == 20);
  CHECK(pr.height() == 4);
  CHECK(classify_lattice(pr).modular);
  CHECK(maximal_congruences(pr).s == 3);
}
