#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/canonical.hpp"
#include "linram/class_spec.hpp"
#include "linram/invariants.hpp"

namespace linram {

inline constexpr int enumeration_cap = 12;
inline constexpr int bipartite_enumeration_cap = 8;

/// Upper bounds on clique and independence number; negative means unbounded.
struct Caps {
  int max_omega = -1;
  int max_alpha = -1;
};

/// Extra hereditary restriction applied to every generated graph.
using GraphFilter = std::function<bool(const Graph&)>;

/**
 * Isomorph-free generation of the members of a hereditary class. Level n is
 * built from level n - 1 by adding a vertex with every possible
 * neighbourhood, keeping graphs that stay in the class and within the caps,
 * and deduplicating by canonical form. Levels are sorted and cached.
 */
class ClassEnumerator {
 public:
  ClassEnumerator(ClassSpec x, Caps caps, GraphFilter filter = {})
      : x_(std::move(x)), caps_(caps), filter_(std::move(filter)) {
    levels_.push_back({Graph(0)});
  }

  const ClassSpec& spec() const { return x_; }
  Caps caps() const { return caps_; }

  /// All canonical members with n vertices.
  const std::vector<Graph>& level(int n) {
    if (n < 0) throw precondition_error("level order must be non-negative");
    if (n > enumeration_cap)
      throw size_limit_error("enumeration is capped at " + std::to_string(enumeration_cap) + " vertices");
    while (static_cast<int>(levels_.size()) <= n) levels_.push_back(extend(levels_.back()));
    return levels_[static_cast<std::size_t>(n)];
  }

  std::size_t count(int n) { return level(n).size(); }

 private:
  bool accept_child(const Graph& parent, const Graph& co_parent, const Graph::Row& s) const {
    if (caps_.max_omega >= 0) {
      if (caps_.max_omega == 0) return false;
      if (has_clique(parent, s, caps_.max_omega)) return false;
    }
    if (caps_.max_alpha >= 0) {
      if (caps_.max_alpha == 0) return false;
      if (has_clique(co_parent, parent.vertices() - s, caps_.max_alpha)) return false;
    }
    return true;
  }

  std::vector<Graph> extend(const std::vector<Graph>& previous) const {
    std::unordered_set<Graph, GraphHash> seen;
    std::vector<Graph> out;
    for (const auto& parent : previous) {
      const int n = parent.order();
      const Graph co_parent = complement(parent);
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t m = 0; m < limit; ++m) {
        const auto s = Graph::Row::from_word(m);
        if (!accept_child(parent, co_parent, s)) continue;
        Graph child = parent.with_vertex(s);
        if (x_.violation_through(child, n)) continue;
        if (filter_ && !filter_(child)) continue;
        Graph c = canonical_label(child);
        if (seen.insert(c).second) out.push_back(std::move(c));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ClassSpec x_;
  Caps caps_;
  GraphFilter filter_;
  std::vector<std::vector<Graph>> levels_;
};

inline std::vector<Graph> enumerate_class(const ClassSpec& x, int n, Caps caps = {}) {
  ClassEnumerator e(x, caps);
  return e.level(n);
}

struct RamseyResult {
  int value = 0;                 // exact R when saturated, otherwise a lower bound
  bool saturated = false;
  std::vector<Graph> witnesses;  // canonical good graphs on value - 1 vertices
  std::vector<std::size_t> counts;  // counts[n] = good graphs on n vertices
};

/// R_X(p, q) by exhaustive enumeration of graphs with omega < p and alpha < q.
inline RamseyResult ramsey_exact(const ClassSpec& x, int p, int q, int cap) {
  if (p < 2 || q < 2) throw precondition_error("ramsey_exact needs p, q >= 2");
  if (cap < 1 || cap > enumeration_cap)
    throw size_limit_error("ramsey cap must lie in 1.." + std::to_string(enumeration_cap));
  ClassEnumerator e(x, Caps{p - 1, q - 1});
  RamseyResult r;
  for (int n = 0; n <= cap; ++n) {
    r.counts.push_back(e.count(n));
    if (r.counts.back() == 0) {
      r.value = n;
      r.saturated = true;
      r.witnesses = e.level(n - 1);
      return r;
    }
  }
  r.value = cap + 1;
  r.witnesses = e.level(cap);
  return r;
}

// ---------------------------------------------------------------------------
// Bipartite graphs with fixed parts

/// Canonical form respecting parts: A stays A, B stays B.
inline BipartiteGraph canonical_bipartite(const BipartiteGraph& g) {
  const Graph u = g.to_graph();
  std::vector<int> colours(static_cast<std::size_t>(u.order()), 1);
  for (int a = 0; a < g.size_a(); ++a) colours[static_cast<std::size_t>(a)] = 0;
  const auto form = canonical_form(u, colours);
  return BipartiteGraph::from_graph(form.graph, BipartiteGraph::low_bits(g.size_a()));
}

/// Bounds on b(G) and a(G); negative means unbounded.
struct BipartiteCaps {
  int max_b = -1;
  int max_a = -1;
};

using BipartiteFilter = std::function<bool(const BipartiteGraph&)>;

/**
 * Isomorph-free generation of coloured bipartite graphs in a class. The
 * class is given by uncoloured forbidden graphs tested on the underlying
 * graph, plus an optional hereditary filter. Level (i, j) is grown from
 * (i, j - 1) by a new B-vertex, or from (i - 1, 0) by a new A-vertex.
 */
class BipartiteEnumerator {
 public:
  BipartiteEnumerator(ClassSpec x, BipartiteCaps caps, BipartiteFilter filter = {})
      : x_(std::move(x)), caps_(caps), filter_(std::move(filter)) {
    levels_[{0, 0}] = {BipartiteGraph(0, 0)};
  }

  const std::vector<BipartiteGraph>& level(int na, int nb) {
    if (na < 0 || nb < 0) throw precondition_error("part sizes must be non-negative");
    if (na > bipartite_enumeration_cap || nb > bipartite_enumeration_cap)
      throw size_limit_error("bipartite enumeration is capped at " +
                             std::to_string(bipartite_enumeration_cap) + " per part");
    auto it = levels_.find({na, nb});
    if (it != levels_.end()) return it->second;
    std::vector<BipartiteGraph> out;
    if (nb > 0) out = extend(level(na, nb - 1), false);
    else out = extend(level(na - 1, 0), true);
    return levels_[{na, nb}] = std::move(out);
  }

 private:
  bool accept(const BipartiteGraph& g, std::uint64_t s, bool add_a) const {
    // Orient so the new vertex joins part A of `h`.
    const BipartiteGraph h = add_a ? g : g.swapped();
    BicliqueSets sets;
    if (caps_.max_b >= 0) {
      if (caps_.max_b == 0) return false;
      const int p = caps_.max_b + 1;
      if (find_biclique(h, p - 1, p, sets, h.mask_a(), s)) return false;
    }
    if (caps_.max_a >= 0) {
      if (caps_.max_a == 0) return false;
      const int q = caps_.max_a + 1;
      if (find_biclique(h.bipartite_complement(), q - 1, q, sets, h.mask_a(), h.mask_b() & ~s))
        return false;
    }
    return true;
  }

  std::vector<BipartiteGraph> extend(const std::vector<BipartiteGraph>& previous, bool add_a) const {
    std::unordered_set<BipartiteGraph, BipartiteHash> seen;
    std::vector<BipartiteGraph> out;
    for (const auto& parent : previous) {
      const int other = add_a ? parent.size_b() : parent.size_a();
      const std::uint64_t limit = std::uint64_t{1} << other;
      for (std::uint64_t m = 0; m < limit; ++m) {
        if (!accept(parent, m, add_a)) continue;
        BipartiteGraph child = add_a ? parent.with_a(m) : parent.with_b(m);
        if (!x_.unrestricted()) {
          const Graph u = child.to_graph();
          const int v = add_a ? child.size_a() - 1 : child.order() - 1;
          if (x_.violation_through(u, v)) continue;
        }
        if (filter_ && !filter_(child)) continue;
        BipartiteGraph c = canonical_bipartite(child);
        if (seen.insert(c).second) out.push_back(std::move(c));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ClassSpec x_;
  BipartiteCaps caps_;
  BipartiteFilter filter_;
  std::map<std::pair<int, int>, std::vector<BipartiteGraph>> levels_;
};

struct BipRamseyResult {
  int value = 0;
  bool saturated = false;
  std::vector<BipartiteGraph> witnesses;  // parts of value - 1 each
  std::vector<std::size_t> counts;        // counts[n] = good graphs with n + n vertices
};

/// R^b_X(p, q): least n such that every member with n vertices per part has
/// b(G) >= p or a(G) >= q.
inline BipRamseyResult bipartite_ramsey_exact(const ClassSpec& x, int p, int q, int cap) {
  if (p < 1 || q < 1) throw precondition_error("bipartite_ramsey_exact needs p, q >= 1");
  if (cap < 1 || cap > bipartite_enumeration_cap)
    throw size_limit_error("bipartite cap must lie in 1.." + std::to_string(bipartite_enumeration_cap));
  BipartiteEnumerator e(x, BipartiteCaps{p - 1, q - 1});
  BipRamseyResult r;
  for (int n = 0; n <= cap; ++n) {
    r.counts.push_back(e.level(n, n).size());
    if (r.counts.back() == 0) {
      r.value = n;
      r.saturated = true;
      r.witnesses = e.level(n - 1, n - 1);
      return r;
    }
  }
  r.value = cap + 1;
  r.witnesses = e.level(cap, cap);
  return r;
}

}  // namespace linram
