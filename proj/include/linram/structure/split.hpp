#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/catalog.hpp"
#include "linram/class_spec.hpp"
#include "linram/error.hpp"
#include "linram/graph.hpp"
#include "linram/subgraph.hpp"

namespace linram {

struct SplitPartition {
  Graph::Row clique;
  Graph::Row independent;
};

namespace detail {

inline std::vector<int> bits(const Graph::Row& r) {
  std::vector<int> out;
  r.for_each([&](int v) { out.push_back(v); });
  return out;
}

inline void require_class(const Graph& g, const ClassSpec& x, const char* what) {
  if (auto v = x.violation(g))
    throw class_violation(std::string(what) + ": graph contains a forbidden " +
                              to_graph6(x.forbidden()[v->index]),
                          v->embedding);
}

}  // namespace detail

/**
 * Clique/independent partition of a split graph. Vertices are sorted by
 * degree; the degree sequence decides splitness and the top m vertices form
 * the clique.
 */
inline std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) { return g.degree(u) > g.degree(v); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[static_cast<std::size_t>(i)]) >= i) m = i + 1;
  long long left = 0, right = 0;
  for (int i = 0; i < n; ++i) {
    const int d = g.degree(order[static_cast<std::size_t>(i)]);
    (i < m ? left : right) += d;
  }
  if (left != static_cast<long long>(m) * (m - 1) + right) return std::nullopt;
  SplitPartition s;
  for (int i = 0; i < n; ++i) (i < m ? s.clique : s.independent).set(order[static_cast<std::size_t>(i)]);
  if (!is_clique(g, s.clique) || !is_independent(g, s.independent))
    throw error("split_partition: degree test accepted a graph without a valid partition");
  return s;
}

struct PseudoSplit {
  std::vector<int> cycle;  // an induced C5, in cyclic order
  Graph::Row clique;       // complete to the cycle
  Graph::Row independent;  // anticomplete to the cycle
};

/// C5 plus a clique complete to it and an independent set anticomplete to it.
inline PseudoSplit pseudo_split_partition(const Graph& g) {
  static const ClassSpec x({parse_graph_name("2K2"), cycle(4)}, "(2K2, C4)-free");
  detail::require_class(g, x, "pseudo_split_partition");
  const auto e = contains_induced(g, cycle(5));
  if (!e) throw precondition_error("pseudo_split_partition: graph has no induced C5");
  PseudoSplit p;
  p.cycle = *e;
  Graph::Row c;
  for (int v : p.cycle) c.set(v);
  for (int v = 0; v < g.order(); ++v) {
    if (c.test(v)) continue;
    const auto hit = g.neighbours(v) & c;
    if (hit == c) p.clique.set(v);
    else if (hit.none()) p.independent.set(v);
    else throw error("pseudo_split_partition: vertex " + std::to_string(v) + " is mixed on the cycle");
  }
  if (!is_clique(g, p.clique) || !is_independent(g, p.independent))
    throw error("pseudo_split_partition: partition check failed");
  return p;
}

/// Certificate returned for (2K2, K3)-free graphs.
struct ExtendedC5 {
  bool bipartite = false;
  std::vector<int> colouring;             // when bipartite
  std::array<std::vector<int>, 5> parts;  // otherwise: independent sets joined cyclically
  std::vector<int> isolated;

  std::array<int, 5> sizes() const {
    std::array<int, 5> s{};
    for (int i = 0; i < 5; ++i) s[static_cast<std::size_t>(i)] = static_cast<int>(parts[static_cast<std::size_t>(i)].size());
    return s;
  }
};

inline ExtendedC5 extended_c5_recognize(const Graph& g) {
  static const ClassSpec x({parse_graph_name("2K2"), complete(3)}, "(2K2, K3)-free");
  detail::require_class(g, x, "extended_c5_recognize");
  ExtendedC5 r;
  r.colouring = two_colouring(g);
  if (!r.colouring.empty() || g.empty()) {
    r.bipartite = true;
    return r;
  }
  const auto e = contains_induced(g, cycle(5));
  if (!e) throw error("extended_c5_recognize: non-bipartite graph without an induced C5");
  const auto& s = *e;
  std::vector<int> part(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < 5; ++i) part[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] = i;
  for (int v = 0; v < g.order(); ++v) {
    if (part[static_cast<std::size_t>(v)] >= 0) continue;
    Graph::Row hit;
    for (int i = 0; i < 5; ++i)
      if (g.adjacent(v, s[static_cast<std::size_t>(i)])) hit.set(i);
    if (hit.none()) continue;
    for (int i = 0; i < 5; ++i) {
      Graph::Row want;
      want.set((i + 4) % 5);
      want.set((i + 1) % 5);
      if (hit == want) part[static_cast<std::size_t>(v)] = i;
    }
    if (part[static_cast<std::size_t>(v)] < 0)
      throw error("extended_c5_recognize: vertex " + std::to_string(v) + " has an unexpected trace on the C5");
  }
  for (int v = 0; v < g.order(); ++v) {
    const int pv = part[static_cast<std::size_t>(v)];
    if (pv < 0) {
      if (g.degree(v) != 0) throw error("extended_c5_recognize: vertex off the blowup is not isolated");
      r.isolated.push_back(v);
      continue;
    }
    r.parts[static_cast<std::size_t>(pv)].push_back(v);
    for (int u = 0; u < g.order(); ++u) {
      const int pu = part[static_cast<std::size_t>(u)];
      if (u == v || pu < 0) continue;
      const int d = (pu - pv + 5) % 5;
      if (g.adjacent(u, v) != (d == 1 || d == 4))
        throw error("extended_c5_recognize: blowup adjacency check failed");
    }
  }
  return r;
}

/// One vertex per part adjacent to every non-isolated vertex of the opposite part.
inline std::pair<int, int> chain_dominators(const BipartiteGraph& g) {
  static const ClassSpec x({parse_graph_name("2K2")}, "2K2-free");
  detail::require_class(g.to_graph(), x, "chain_dominators");
  if (g.edge_count() == 0) throw precondition_error("chain_dominators: graph has no edges");
  if (!is_connected(g.to_graph())) throw precondition_error("chain_dominators: graph is disconnected");
  std::uint64_t covered_b = 0, covered_a = 0;
  for (int a = 0; a < g.size_a(); ++a) covered_b |= g.row(a);
  for (int b = 0; b < g.size_b(); ++b) covered_a |= g.column(b);
  int da = -1, db = -1;
  for (int a = 0; a < g.size_a() && da < 0; ++a)
    if (g.row(a) == covered_b) da = a;
  for (int b = 0; b < g.size_b() && db < 0; ++b)
    if (g.column(b) == covered_a) db = b;
  if (da < 0 || db < 0) throw error("chain_dominators: no dominating vertex in a part");
  return {da, db};
}

}  // namespace linram
