#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linram/bitset.hpp"
#include "linram/error.hpp"

namespace linram {

/**
 * Undirected simple graph stored as one neighbourhood bit row per vertex.
 *
 * Invariants: rows are symmetric, no vertex is in its own row, and no bit at
 * or above order() is set. `Words` bounds the order at 64 * Words.
 */
template <std::size_t Words>
class BasicGraph {
 public:
  using Row = BitSet<Words>;
  static constexpr int max_order = Row::capacity;

  BasicGraph() = default;

  explicit BasicGraph(int n) {
    if (n < 0 || n > max_order)
      throw size_limit_error("graph order " + std::to_string(n) + " exceeds capacity " +
                             std::to_string(max_order));
    rows_.resize(static_cast<std::size_t>(n));
  }

  BasicGraph(int n, std::initializer_list<std::pair<int, int>> edges) : BasicGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }

  const Row& neighbours(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return neighbours(u).test(v); }
  int degree(int v) const { return neighbours(v).count(); }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u)].reset(v);
    rows_[static_cast<std::size_t>(v)].reset(u);
  }

  void set_edge(int u, int v, bool present) { present ? add_edge(u, v) : remove_edge(u, v); }

  Row vertices() const { return Row::prefix(order()); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += static_cast<std::size_t>(r.count());
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      neighbours(u).for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  /// Appends a vertex adjacent to `nbrs` (which must lie inside the current vertex set).
  BasicGraph with_vertex(const Row& nbrs) const {
    BasicGraph g = *this;
    const int v = order();
    if (v >= max_order) throw size_limit_error("graph order exceeds capacity");
    g.rows_.push_back(nbrs);
    nbrs.for_each([&](int u) { g.rows_[static_cast<std::size_t>(u)].set(v); });
    return g;
  }

  /// Induced subgraph on `subset`, vertices renumbered in increasing order.
  BasicGraph induced(const Row& subset) const {
    std::vector<int> keep;
    subset.for_each([&](int v) {
      if (v < order()) keep.push_back(v);
    });
    return induced(std::span<const int>(keep));
  }

  /// Induced subgraph on the listed vertices; vertex i of the result is `vs[i]`.
  template <std::size_t OutWords = Words>
  BasicGraph<OutWords> induced_as(std::span<const int> vs) const {
    BasicGraph<OutWords> g(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (adjacent(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }

  BasicGraph induced(std::span<const int> vs) const { return induced_as<Words>(vs); }

  /// Relabelled copy: old vertex v becomes new vertex perm[v].
  BasicGraph relabeled(std::span<const int> perm) const {
    BasicGraph g(order());
    for (int u = 0; u < order(); ++u) {
      Row r;
      neighbours(u).for_each([&](int v) { r.set(perm[static_cast<std::size_t>(v)]); });
      g.rows_[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = r;
    }
    return g;
  }

  bool operator==(const BasicGraph&) const = default;
  auto operator<=>(const BasicGraph& o) const {
    if (auto c = order() <=> o.order(); c != 0) return c;
    return rows_ <=> o.rows_;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(order());
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < Words; ++i) {
        h ^= r.word(i);
        h *= 1099511628211ULL;
        h ^= h >> 29;
      }
    return static_cast<std::size_t>(h);
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order() || u == v)
      throw precondition_error("invalid vertex pair (" + std::to_string(u) + ", " +
                               std::to_string(v) + ")");
  }

  std::vector<Row> rows_;
};

using Graph = BasicGraph<1>;
using WideGraph = BasicGraph<2>;

struct GraphHash {
  template <std::size_t W>
  std::size_t operator()(const BasicGraph<W>& g) const {
    return g.hash();
  }
};

template <std::size_t W>
BasicGraph<W> complement(const BasicGraph<W>& g) {
  BasicGraph<W> h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

/// G + H: vertices of H follow those of G.
template <std::size_t W>
BasicGraph<W> disjoint_union(const BasicGraph<W>& g, const BasicGraph<W>& h) {
  BasicGraph<W> out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

/// Disjoint union with every G-vertex adjacent to every H-vertex.
template <std::size_t W>
BasicGraph<W> graph_join(const BasicGraph<W>& g, const BasicGraph<W>& h) {
  BasicGraph<W> out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

/// Copy with `n` words per row. Throws size_limit_error when the order does not fit.
template <std::size_t To, std::size_t From>
BasicGraph<To> resize_words(const BasicGraph<From>& g) {
  BasicGraph<To> out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

template <std::size_t W>
bool is_clique(const BasicGraph<W>& g, const typename BasicGraph<W>::Row& s) {
  bool ok = true;
  s.for_each([&](int v) {
    auto others = s;
    others.reset(v);
    if (!others.is_subset_of(g.neighbours(v))) ok = false;
  });
  return ok;
}

template <std::size_t W>
bool is_independent(const BasicGraph<W>& g, const typename BasicGraph<W>::Row& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if ((g.neighbours(v) & s).any()) ok = false;
  });
  return ok;
}

/// Connected components as vertex masks, ordered by smallest vertex.
template <std::size_t W>
std::vector<typename BasicGraph<W>::Row> components(const BasicGraph<W>& g) {
  using Row = typename BasicGraph<W>::Row;
  std::vector<Row> out;
  Row seen;
  for (int s = 0; s < g.order(); ++s) {
    if (seen.test(s)) continue;
    Row comp, frontier;
    frontier.set(s);
    while (frontier.any()) {
      comp |= frontier;
      Row next;
      frontier.for_each([&](int v) { next |= g.neighbours(v); });
      frontier = next - comp;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

template <std::size_t W>
bool is_connected(const BasicGraph<W>& g) {
  return g.order() <= 1 || components(g).size() == 1;
}

/// Two-colouring (colour 0/1 per vertex) or empty when an odd cycle exists.
template <std::size_t W>
std::vector<int> two_colouring(const BasicGraph<W>& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      bool bad = false;
      g.neighbours(v).for_each([&](int u) {
        auto& cu = colour[static_cast<std::size_t>(u)];
        if (cu < 0) {
          cu = 1 - colour[static_cast<std::size_t>(v)];
          stack.push_back(u);
        } else if (cu == colour[static_cast<std::size_t>(v)]) {
          bad = true;
        }
      });
      if (bad) return {};
    }
  }
  return colour;
}

template <std::size_t W>
bool is_bipartite(const BasicGraph<W>& g) {
  return g.order() == 0 || !two_colouring(g).empty();
}

/// Acyclic check by edge count per component.
template <std::size_t W>
bool is_forest(const BasicGraph<W>& g) {
  return g.edge_count() + components(g).size() == static_cast<std::size_t>(g.order());
}

}  // namespace linram
