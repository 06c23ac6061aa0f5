#ifndef TIGHTLAT_FIXTURES_HPP_
#define TIGHTLAT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "tightlat/lattice.hpp"
#include "tightlat/matroid.hpp"
#include "tightlat/pls.hpp"

namespace tightlat {

// Named corpus shared by tests and the command line tool. A fixture is
// reconstructed when its source data was incomplete and the object was pinned
// down from stated invariants; such fixtures are kept out of exact-value
// acceptance checks.
struct Fixture {
  std::string name;
  std::string kind;  // "lattice" | "pls" | "matroid"
  std::string note;
  bool reconstructed = false;
  Lattice lattice;
  Pls pls;
  BinaryMatroid matroid;
};

// Stable catalog order; built once, then shared.
const std::vector<Fixture>& fixtures();

const Fixture& fixture(const std::string& name);  // ParseError if unknown
Lattice lattice_fixture(const std::string& name);
Pls pls_fixture(const std::string& name);
BinaryMatroid matroid_fixture(const std::string& name);

}  // namespace tightlat

#endif  // TIGHTLAT_FIXTURES_HPP_
