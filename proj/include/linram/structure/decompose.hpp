#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/error.hpp"

namespace linram {

enum class DecompKind { leaf, disjoint_union, join, skew_join };

inline const char* to_string(DecompKind k) {
  switch (k) {
    case DecompKind::leaf: return "leaf";
    case DecompKind::disjoint_union: return "disjoint_union";
    case DecompKind::join: return "join";
    case DecompKind::skew_join: return "skew_join";
  }
  return "?";
}

/**
 * Path or cycle with duplicated vertices, read off the twin quotient of G
 * (or of its bipartite complement when `complemented`). Block i of A is
 * joined to blocks i and i+1 of B and co-joined to the rest; the last A
 * block is joined to the last B block and, when `closed`, to the first.
 */
struct IntervalStructure {
  bool complemented = false;
  bool closed = false;
  std::vector<std::uint64_t> a_blocks;
  std::vector<std::uint64_t> b_blocks;
};

struct DecompositionNode {
  DecompKind kind = DecompKind::leaf;
  std::uint64_t a = 0;  // vertices of part A in the input graph
  std::uint64_t b = 0;
  // skew join: A of children[0] is complete to B of children[1]
  std::vector<DecompositionNode> children;
  BipartiteGraph graph;                          // leaves: induced subgraph, vertices in increasing order
  std::optional<IntervalStructure> certificate;  // leaves, in the input graph's labels
};

struct Split {
  DecompKind kind = DecompKind::leaf;
  std::uint64_t a1 = 0, b1 = 0, a2 = 0, b2 = 0;
};

namespace detail {

inline std::uint64_t nbrs_of_a(const BipartiteGraph& g, std::uint64_t as, bool comp) {
  std::uint64_t out = 0;
  for (int a : BipartiteGraph::bits_of(as)) out |= comp ? ~g.row(a) : g.row(a);
  return out & g.mask_b();
}

inline std::uint64_t nbrs_of_b(const BipartiteGraph& g, std::uint64_t bs, bool comp) {
  std::uint64_t out = 0;
  for (int b : BipartiteGraph::bits_of(bs)) out |= comp ? ~g.column(b) : g.column(b);
  return out & g.mask_a();
}

// component of the first vertex (A before B) inside (ma, mb)
inline std::pair<std::uint64_t, std::uint64_t> first_component(const BipartiteGraph& g, std::uint64_t ma,
                                                               std::uint64_t mb, bool comp) {
  std::uint64_t ca = 0, cb = 0;
  if (ma) ca = ma & (~ma + 1);
  else cb = mb & (~mb + 1);
  std::uint64_t fa = ca, fb = cb;
  while (fa || fb) {
    const std::uint64_t nb = nbrs_of_a(g, fa, comp) & mb & ~cb;
    const std::uint64_t na = nbrs_of_b(g, fb, comp) & ma & ~ca;
    ca |= na;
    cb |= nb;
    fa = na;
    fb = nb;
  }
  return {ca, cb};
}

inline std::uint64_t row_in(const BipartiteGraph& g, int a, std::uint64_t mb) { return g.row(a) & mb; }
inline std::uint64_t column_in(const BipartiteGraph& g, int b, std::uint64_t ma) { return g.column(b) & ma; }

}  // namespace detail

/// One top-level split of the subgraph induced by (ma, mb), by priority union > join > skew join.
inline std::optional<Split> split_once(const BipartiteGraph& g, std::uint64_t ma, std::uint64_t mb) {
  if (std::popcount(ma) + std::popcount(mb) <= 1) return std::nullopt;
  for (bool comp : {false, true}) {
    const auto [ca, cb] = detail::first_component(g, ma, mb, comp);
    if (ca != ma || cb != mb)
      return Split{comp ? DecompKind::join : DecompKind::disjoint_union, ca, cb, ma & ~ca, mb & ~cb};
  }
  // twin groups of B sorted by degree; B1 is a prefix with N(b1) inside N(b2) across the cut
  std::vector<std::uint64_t> groups;
  std::vector<std::uint64_t> hoods;
  for (int b : BipartiteGraph::bits_of(mb)) {
    const std::uint64_t nb = detail::column_in(g, b, ma);
    auto it = std::find(hoods.begin(), hoods.end(), nb);
    if (it == hoods.end()) {
      hoods.push_back(nb);
      groups.push_back(std::uint64_t{1} << b);
    } else {
      groups[static_cast<std::size_t>(it - hoods.begin())] |= std::uint64_t{1} << b;
    }
  }
  std::vector<std::size_t> order(groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return std::popcount(hoods[x]) < std::popcount(hoods[y]); });
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::uint64_t below = 0, above = ma, b1 = 0;
    for (std::size_t i = 0; i < k; ++i) {
      below |= hoods[order[i]];
      b1 |= groups[order[i]];
    }
    for (std::size_t i = k; i < order.size(); ++i) above &= hoods[order[i]];
    if ((below & ~above) == 0) return Split{DecompKind::skew_join, below, b1, ma & ~below, mb & ~b1};
  }
  return std::nullopt;
}

/// Interval structure of the subgraph induced by (ma, mb), if its twin quotient or that of its complement is a path or cycle.
inline std::optional<IntervalStructure> interval_structure(const BipartiteGraph& g, std::uint64_t ma, std::uint64_t mb) {
  std::vector<std::uint64_t> ta, tb;  // twin classes
  std::vector<int> ra, rb;            // representatives
  for (int a : BipartiteGraph::bits_of(ma)) {
    bool found = false;
    for (std::size_t i = 0; i < ra.size() && !found; ++i)
      if (detail::row_in(g, ra[i], mb) == detail::row_in(g, a, mb)) {
        ta[i] |= std::uint64_t{1} << a;
        found = true;
      }
    if (!found) {
      ra.push_back(a);
      ta.push_back(std::uint64_t{1} << a);
    }
  }
  for (int b : BipartiteGraph::bits_of(mb)) {
    bool found = false;
    for (std::size_t i = 0; i < rb.size() && !found; ++i)
      if (detail::column_in(g, rb[i], ma) == detail::column_in(g, b, ma)) {
        tb[i] |= std::uint64_t{1} << b;
        found = true;
      }
    if (!found) {
      rb.push_back(b);
      tb.push_back(std::uint64_t{1} << b);
    }
  }
  const int qa = static_cast<int>(ra.size()), qb = static_cast<int>(rb.size());
  if (qa + qb == 0) return std::nullopt;
  for (bool comp : {false, true}) {
    auto adj = [&](int i, int j) { return g.adjacent(ra[static_cast<std::size_t>(i)], rb[static_cast<std::size_t>(j)]) != comp; };
    std::vector<std::vector<int>> na(static_cast<std::size_t>(qa)), nb(static_cast<std::size_t>(qb));
    int edges = 0;
    for (int i = 0; i < qa; ++i)
      for (int j = 0; j < qb; ++j)
        if (adj(i, j)) {
          na[static_cast<std::size_t>(i)].push_back(j);
          nb[static_cast<std::size_t>(j)].push_back(i);
          ++edges;
        }
    bool ok = true;
    for (const auto& v : na) ok = ok && v.size() <= 2;
    for (const auto& v : nb) ok = ok && v.size() <= 2;
    const int verts = qa + qb;
    const bool cycle = edges == verts && verts >= 4;
    if (!ok || (edges != verts - 1 && !cycle)) continue;
    // walk the quotient; (side, index) with side 0 = A
    int start_side = -1, start = -1;
    for (int j = 0; j < qb && start < 0; ++j)
      if (cycle || nb[static_cast<std::size_t>(j)].size() <= 1) {
        start_side = 1;
        start = j;
      }
    for (int i = 0; i < qa && start < 0; ++i)
      if (na[static_cast<std::size_t>(i)].size() <= 1) {
        start_side = 0;
        start = i;
      }
    if (start < 0) continue;
    std::vector<std::pair<int, int>> walk{{start_side, start}};
    std::vector<bool> seen_a(static_cast<std::size_t>(qa)), seen_b(static_cast<std::size_t>(qb));
    (start_side ? seen_b : seen_a)[static_cast<std::size_t>(start)] = true;
    for (;;) {
      const auto [side, v] = walk.back();
      const auto& nbr = side ? nb[static_cast<std::size_t>(v)] : na[static_cast<std::size_t>(v)];
      auto& seen = side ? seen_a : seen_b;
      int next = -1;
      for (int w : nbr)
        if (!seen[static_cast<std::size_t>(w)] && (next < 0 || w < next)) next = w;
      if (next < 0) break;
      seen[static_cast<std::size_t>(next)] = true;
      walk.push_back({1 - side, next});
    }
    if (static_cast<int>(walk.size()) != verts) continue;  // disconnected
    IntervalStructure s;
    s.complemented = comp;
    std::size_t pos = 0;
    std::uint64_t lead_a = 0;
    if (walk.front().first == 0) {
      // path with an A end: that block is the last A block, joined to the first B block
      lead_a = ta[static_cast<std::size_t>(walk.front().second)];
      pos = 1;
      s.closed = true;
    }
    for (; pos < walk.size(); ++pos) {
      const auto [side, v] = walk[pos];
      (side ? s.b_blocks : s.a_blocks).push_back(side ? tb[static_cast<std::size_t>(v)] : ta[static_cast<std::size_t>(v)]);
    }
    if (lead_a) {
      s.a_blocks.push_back(lead_a);
      if (s.b_blocks.size() == s.a_blocks.size() - 1) s.b_blocks.push_back(0);
    }
    if (cycle) s.closed = true;
    while (s.a_blocks.size() < s.b_blocks.size()) s.a_blocks.push_back(0);
    while (s.b_blocks.size() < s.a_blocks.size()) s.b_blocks.push_back(0);
    // verify the block pattern on adjacency
    const std::size_t n = s.a_blocks.size();
    bool good = n > 0;
    for (std::size_t i = 0; i < n && good; ++i)
      for (std::size_t j = 0; j < n && good; ++j) {
        const bool want = i + 1 < n ? (j == i || j == i + 1) : (j == i || (s.closed && j == 0));
        for (int a : BipartiteGraph::bits_of(s.a_blocks[i]))
          for (int b : BipartiteGraph::bits_of(s.b_blocks[j]))
            if (g.adjacent(a, b) != (want != comp)) good = false;
      }
    for (std::size_t i = 0; i + 1 < n && good; ++i) good = s.a_blocks[i] && s.b_blocks[i];
    if (good) return s;
  }
  return std::nullopt;
}

namespace detail {

inline DecompositionNode decompose_masks(const BipartiteGraph& g, std::uint64_t ma, std::uint64_t mb) {
  DecompositionNode node;
  node.a = ma;
  node.b = mb;
  const auto s = split_once(g, ma, mb);
  if (!s) {
    node.graph = g.induced_masks(ma, mb);
    node.certificate = interval_structure(g, ma, mb);
    return node;
  }
  node.kind = s->kind;
  node.children.push_back(decompose_masks(g, s->a1, s->b1));
  node.children.push_back(decompose_masks(g, s->a2, s->b2));
  return node;
}

inline void recompose_into(const DecompositionNode& node, BipartiteGraph& out) {
  auto add_all = [&](std::uint64_t as, std::uint64_t bs) {
    for (int a : BipartiteGraph::bits_of(as))
      for (int b : BipartiteGraph::bits_of(bs)) out.add_edge(a, b);
  };
  if (node.kind == DecompKind::leaf) {
    const auto as = BipartiteGraph::bits_of(node.a);
    const auto bs = BipartiteGraph::bits_of(node.b);
    if (node.graph.size_a() != static_cast<int>(as.size()) || node.graph.size_b() != static_cast<int>(bs.size()))
      throw error("recompose: leaf graph does not match its vertex sets");
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (node.graph.adjacent(static_cast<int>(i), static_cast<int>(j))) out.add_edge(as[i], bs[j]);
    return;
  }
  if (node.children.size() != 2) throw error("recompose: internal node needs two children");
  const auto& c0 = node.children[0];
  const auto& c1 = node.children[1];
  if ((c0.a | c1.a) != node.a || (c0.b | c1.b) != node.b || (c0.a & c1.a) || (c0.b & c1.b))
    throw error("recompose: children do not partition the node");
  recompose_into(c0, out);
  recompose_into(c1, out);
  if (node.kind == DecompKind::join) {
    add_all(c0.a, c1.b);
    add_all(c1.a, c0.b);
  } else if (node.kind == DecompKind::skew_join) {
    add_all(c0.a, c1.b);
  }
}

}  // namespace detail

/// Applies the node operations bottom-up; parts have sizes na, nb.
inline BipartiteGraph recompose(const DecompositionNode& root, int na, int nb) {
  BipartiteGraph out(na, nb);
  detail::recompose_into(root, out);
  return out;
}

inline DecompositionNode canonical_decompose(const BipartiteGraph& g) {
  auto root = detail::decompose_masks(g, g.mask_a(), g.mask_b());
  if (recompose(root, g.size_a(), g.size_b()) != g) throw error("canonical_decompose: recomposition differs from the input");
  return root;
}

inline bool canonically_indecomposable(const BipartiteGraph& g) {
  return !split_once(g, g.mask_a(), g.mask_b());
}

}  // namespace linram
