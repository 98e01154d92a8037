#pragma once

#include <string>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/error.hpp"

namespace linram {

/// Vertex sets of an induced K_{n,n} (biclique) or of its bipartite complement.
struct HomogeneousWitness {
  bool biclique = true;
  std::vector<int> a;
  std::vector<int> b;
  std::string method;
};

/// Direct adjacency check: |a| = |b| = n, distinct in-range vertices, all pairs adjacent (or all non-adjacent).
inline bool homogeneous_ok(const BipartiteGraph& g, const HomogeneousWitness& w, int n) {
  if (static_cast<int>(w.a.size()) != n || static_cast<int>(w.b.size()) != n) return false;
  std::uint64_t seen_a = 0, seen_b = 0;
  for (int x : w.a) {
    if (x < 0 || x >= g.size_a() || ((seen_a >> x) & 1U)) return false;
    seen_a |= std::uint64_t{1} << x;
  }
  for (int y : w.b) {
    if (y < 0 || y >= g.size_b() || ((seen_b >> y) & 1U)) return false;
    seen_b |= std::uint64_t{1} << y;
  }
  for (int x : w.a)
    for (int y : w.b)
      if (g.adjacent(x, y) != w.biclique) return false;
  return true;
}

inline void require_homogeneous(const BipartiteGraph& g, const HomogeneousWitness& w, int n, const char* who) {
  if (!homogeneous_ok(g, w, n))
    throw error(std::string(who) + ": produced witness (" + w.method + ") failed adjacency verification");
}

}  // namespace linram
