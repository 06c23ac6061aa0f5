#ifndef TIGHTLAT_CORE_HPP_
#define TIGHTLAT_CORE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightlat {

enum class Err {
  NotAPoset,
  NotCovers,
  NotALattice,
  NotModular,
  NotDistributive,
  NotACoatom,
  LineTooLarge,
  InvalidPls,
  LineSizeNot3,
  LinesShareTwoPoints,
  UnknownPoint,
  BoundExceeded,
  NotAQimp,
  NotAUmp,
  NotConnected,
  PathCollision,
  NotABijection,
  NotSimple,
  NotLinePreserving,
  GroundOverlap,
  EdgesNotIncident,
  ModeViolation,
  ModelCheckFailed,
  GraphDisconnected,
  NotTight,
  FactorNotTight,
  ParseError,
  Internal,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Err c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

// Disjoint-set forest with path compression.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // smaller index wins: keeps roots canonical
    parent[b] = a;
    return true;
  }
};

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <typename T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace tightlat

#endif  // TIGHTLAT_CORE_HPP_
