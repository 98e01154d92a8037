#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/graph.hpp"
#include "linram/invariants.hpp"

namespace linram {

/// Injective map from pattern vertices to host vertices: embedding[h] = image of h.
using Embedding = std::vector<int>;

/**
 * Induced-subgraph matcher for a fixed pattern H. Pattern vertices are placed
 * in a static order: each next vertex has the most already-placed neighbours,
 * ties broken by larger degree. Candidates are the intersection of the
 * (non-)neighbourhoods of the images placed so far.
 */
class InducedMatcher {
 public:
  explicit InducedMatcher(Graph pattern) : h_(std::move(pattern)) {
    order_ = placement_order(-1);
    for (int h = 0; h < h_.order(); ++h)
      rooted_.push_back(representative(h) ? placement_order(h) : std::vector<int>{});
  }

  const Graph& pattern() const { return h_; }

  /// Some induced copy of H in G. `allowed`, when given, restricts the image of each H-vertex.
  template <std::size_t W>
  std::optional<Embedding> find(const BasicGraph<W>& g,
                                const std::vector<BitSet<W>>* allowed = nullptr) const {
    if (h_.order() > g.order()) return std::nullopt;
    return run(g, order_, allowed, -1, -1);
  }

  /// Some induced copy of H in G whose image contains vertex `through`.
  template <std::size_t W>
  std::optional<Embedding> find_through(const BasicGraph<W>& g, int through) const {
    if (h_.order() > g.order()) return std::nullopt;
    for (int h = 0; h < h_.order(); ++h) {
      const auto& ord = rooted_[static_cast<std::size_t>(h)];
      if (ord.empty()) continue;
      if (auto e = run(g, ord, static_cast<const std::vector<BitSet<W>>*>(nullptr), h, through)) return e;
    }
    return std::nullopt;
  }

 private:
  std::vector<int> placement_order(int root) const {
    const int k = h_.order();
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    if (root >= 0) {
      order.push_back(root);
      placed[static_cast<std::size_t>(root)] = true;
    }
    while (static_cast<int>(order.size()) < k) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < k; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (int u : order) links += h_.adjacent(u, v) ? 1 : 0;
        const int d = h_.degree(v);
        if (links > best_links || (links == best_links && d > best_deg)) {
          best = v;
          best_links = links;
          best_deg = d;
        }
      }
      order.push_back(best);
      placed[static_cast<std::size_t>(best)] = true;
    }
    return order;
  }

  // Vertices with identical closed or open neighbourhoods are interchangeable as roots.
  bool representative(int h) const {
    for (int u = 0; u < h; ++u) {
      auto nu = h_.neighbours(u), nh = h_.neighbours(h);
      nu.reset(h);
      nh.reset(u);
      if (nu == nh) return false;
    }
    return true;
  }

  template <std::size_t W>
  std::optional<Embedding> run(const BasicGraph<W>& g, const std::vector<int>& order,
                               const std::vector<BitSet<W>>* allowed, int root, int root_image) const {
    using Row = BitSet<W>;
    const int k = h_.order();
    const int n = g.order();
    Embedding image(static_cast<std::size_t>(k), -1);
    if (k == 0) return image;
    std::vector<Row> cand(static_cast<std::size_t>(k));
    Row used;
    const Row all = g.vertices();

    auto candidates = [&](int depth) {
      const int hv = order[static_cast<std::size_t>(depth)];
      Row c = allowed ? ((*allowed)[static_cast<std::size_t>(hv)] & all) : all;
      c.subtract(used);
      for (int j = 0; j < depth && c.any(); ++j) {
        const int hu = order[static_cast<std::size_t>(j)];
        const int gu = image[static_cast<std::size_t>(hu)];
        if (h_.adjacent(hu, hv)) c &= g.neighbours(gu);
        else c.subtract(g.neighbours(gu));
      }
      const int dh = h_.degree(hv);
      const int nh = k - 1 - dh;
      Row filtered;
      c.for_each([&](int v) {
        const int dg = g.degree(v);
        if (dg >= dh && n - 1 - dg >= nh) filtered.set(v);
      });
      return filtered;
    };

    int depth = 0;
    if (root >= 0) {
      const int dh = h_.degree(root), dg = g.degree(root_image);
      if (dg < dh || (n - 1 - dg) < (k - 1 - dh)) return std::nullopt;
      image[static_cast<std::size_t>(root)] = root_image;
      used.set(root_image);
      depth = 1;
      if (k == 1) return image;
    }
    const int base = depth;
    cand[static_cast<std::size_t>(depth)] = candidates(depth);
    while (depth >= base) {
      auto& c = cand[static_cast<std::size_t>(depth)];
      const int hv = order[static_cast<std::size_t>(depth)];
      if (image[static_cast<std::size_t>(hv)] >= 0) {
        used.reset(image[static_cast<std::size_t>(hv)]);
        image[static_cast<std::size_t>(hv)] = -1;
      }
      if (c.none()) {
        --depth;
        continue;
      }
      const int v = c.first();
      c.reset(v);
      image[static_cast<std::size_t>(hv)] = v;
      used.set(v);
      if (depth + 1 == k) return image;
      ++depth;
      cand[static_cast<std::size_t>(depth)] = candidates(depth);
    }
    return std::nullopt;
  }

  Graph h_;
  std::vector<int> order_;
  std::vector<std::vector<int>> rooted_;
};

template <std::size_t W>
std::optional<Embedding> contains_induced(const BasicGraph<W>& g, const Graph& h) {
  return InducedMatcher(h).find(g);
}

/// Colour-preserving containment: A-vertices of H land in A of G, B in B. No part swap.
inline std::optional<Embedding> contains_colored_induced(const BipartiteGraph& g,
                                                          const BipartiteGraph& h) {
  if (h.size_a() > g.size_a() || h.size_b() > g.size_b()) return std::nullopt;
  const Graph gg = g.to_graph();
  const Graph hh = h.to_graph();
  std::vector<Graph::Row> allowed(static_cast<std::size_t>(hh.order()));
  Graph::Row part_a, part_b;
  for (int a = 0; a < g.size_a(); ++a) part_a.set(a);
  for (int b = 0; b < g.size_b(); ++b) part_b.set(g.size_a() + b);
  for (int v = 0; v < hh.order(); ++v)
    allowed[static_cast<std::size_t>(v)] = v < h.size_a() ? part_a : part_b;
  return InducedMatcher(hh).find(gg, &allowed);
}

/// Vertex sets (A-side, B-side) of an induced K_{n,n}.
struct BicliqueWitness {
  std::vector<int> a;
  std::vector<int> b;
};

inline std::optional<BicliqueWitness> find_balanced_biclique(const BipartiteGraph& g, int n) {
  if (n < 1) throw precondition_error("find_balanced_biclique: n must be at least 1");
  BicliqueSets s;
  if (!find_biclique(g, n, n, s)) return std::nullopt;
  return BicliqueWitness{BipartiteGraph::bits_of(s.a), BipartiteGraph::bits_of(s.b)};
}

/// n + n vertices with no edges between the chosen sides.
inline std::optional<BicliqueWitness> find_balanced_co_biclique(const BipartiteGraph& g, int n) {
  return find_balanced_biclique(g.bipartite_complement(), n);
}

}  // namespace linram
