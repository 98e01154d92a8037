#pragma once

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/catalog.hpp"
#include "linram/class_spec.hpp"
#include "linram/structure/homogeneous.hpp"

namespace linram {

/// Equivalence class of same-coloured vertices: type 1 = equal neighbourhoods, type 2 = pairwise incomparable.
struct EquivalenceClass {
  std::vector<int> vertices;
  int type = 1;
  int block = -1;  // index into BlockDecomposition::blocks for type 2
};

/// Paired type-2 classes inducing a perfect matching or co-matching.
struct Block {
  int black = 0;  // class index on the A side
  int white = 0;  // class index on the B side
  bool matching = true;
};

/**
 * Structure of a P2+P3-free bipartite graph with A black and B white.
 * Black classes are listed with shrinking neighbourhoods, white classes with
 * growing ones; the linear orders concatenate them, block sides aligned
 * along their bijection.
 */
struct BlockDecomposition {
  std::vector<EquivalenceClass> black;
  std::vector<EquivalenceClass> white;
  std::vector<Block> blocks;
  std::vector<int> black_order;
  std::vector<int> white_order;
  std::vector<int> black_class_of;
  std::vector<int> white_class_of;
};

namespace detail {

inline const ClassSpec& p2p3_class() {
  static const ClassSpec x({parse_graph_name("P2+P3")}, "P2+P3-free");
  return x;
}

inline void require_p2p3_free(const BipartiteGraph& g, const char* who) {
  if (auto v = p2p3_class().violation(g.to_graph()))
    throw class_violation(std::string(who) + ": graph contains an induced P2+P3", v->embedding);
}

inline bool related(std::uint64_t x, std::uint64_t y) {
  return x == y || ((x & ~y) && (y & ~x));
}

inline std::vector<EquivalenceClass> side_classes(const std::vector<std::uint64_t>& nbrs, bool shrinking) {
  const int n = static_cast<int>(nbrs.size());
  std::vector<EquivalenceClass> classes;
  for (int v = 0; v < n; ++v) {
    bool placed = false;
    for (auto& c : classes)
      if (related(nbrs[static_cast<std::size_t>(c.vertices.front())], nbrs[static_cast<std::size_t>(v)])) {
        c.vertices.push_back(v);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({{v}, 1, -1});
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& vs = classes[i].vertices;
    bool all_equal = true;
    for (std::size_t x = 0; x < vs.size(); ++x)
      for (std::size_t y = x + 1; y < vs.size(); ++y) {
        const auto nx = nbrs[static_cast<std::size_t>(vs[x])], ny = nbrs[static_cast<std::size_t>(vs[y])];
        if (!related(nx, ny)) throw error("p2p3_blocks: relation is not transitive");
        if (nx != ny) all_equal = false;
      }
    if (!all_equal) {
      for (std::size_t x = 0; x < vs.size(); ++x)
        for (std::size_t y = x + 1; y < vs.size(); ++y)
          if (nbrs[static_cast<std::size_t>(vs[x])] == nbrs[static_cast<std::size_t>(vs[y])])
            throw error("p2p3_blocks: class mixes equal and incomparable neighbourhoods");
      classes[i].type = 2;
    }
    for (std::size_t j = 0; j < i; ++j)
      for (int x : classes[j].vertices)
        for (int y : vs)
          if (related(nbrs[static_cast<std::size_t>(x)], nbrs[static_cast<std::size_t>(y)]))
            throw error("p2p3_blocks: related vertices in different classes");
  }
  auto deg = [&](const EquivalenceClass& c) { return std::popcount(nbrs[static_cast<std::size_t>(c.vertices.front())]); };
  std::stable_sort(classes.begin(), classes.end(), [&](const EquivalenceClass& x, const EquivalenceClass& y) {
    return shrinking ? deg(x) > deg(y) : deg(x) < deg(y);
  });
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      for (int x : classes[i].vertices)
        for (int y : classes[j].vertices) {
          const auto nx = nbrs[static_cast<std::size_t>(x)], ny = nbrs[static_cast<std::size_t>(y)];
          const auto big = shrinking ? nx : ny, small = shrinking ? ny : nx;
          if ((small & ~big) || small == big) throw error("p2p3_blocks: classes are not strictly nested");
        }
  return classes;
}

// 1 = matching, 0 = co-matching, -1 = neither
inline int block_kind(const BipartiteGraph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
  if (xs.size() != ys.size()) return -1;
  bool matching = true, comatching = true;
  for (int x : xs) {
    int nb = 0;
    for (int y : ys) nb += g.adjacent(x, y) ? 1 : 0;
    matching = matching && nb == 1;
    comatching = comatching && nb == static_cast<int>(ys.size()) - 1;
  }
  for (int y : ys) {
    int nb = 0;
    for (int x : xs) nb += g.adjacent(x, y) ? 1 : 0;
    matching = matching && nb == 1;
    comatching = comatching && nb == static_cast<int>(xs.size()) - 1;
  }
  if (matching) return 1;
  if (comatching) return 0;
  return -1;
}

inline void check_order_bullets(const BipartiteGraph& g, const BlockDecomposition& d) {
  const int na = g.size_a(), nb = g.size_b();
  std::vector<int> pos_b(static_cast<std::size_t>(nb));
  std::vector<int> pos_a(static_cast<std::size_t>(na));
  for (int i = 0; i < nb; ++i) pos_b[static_cast<std::size_t>(d.white_order[static_cast<std::size_t>(i)])] = i;
  for (int i = 0; i < na; ++i) pos_a[static_cast<std::size_t>(d.black_order[static_cast<std::size_t>(i)])] = i;
  auto fail = [](const char* which) { throw error(std::string("p2p3_blocks: order property failed: ") + which); };
  for (int x = 0; x < na; ++x) {
    const auto& cx = d.black[static_cast<std::size_t>(d.black_class_of[static_cast<std::size_t>(x)])];
    for (int y = 0; y < nb; ++y) {
      const auto& cy = d.white[static_cast<std::size_t>(d.white_class_of[static_cast<std::size_t>(y)])];
      if (cx.type == 1 && g.adjacent(x, y))
        for (int y2 = 0; y2 < nb; ++y2)
          if (pos_b[static_cast<std::size_t>(y2)] > pos_b[static_cast<std::size_t>(y)] && !g.adjacent(x, y2))
            fail("type-1 black");
      if (cy.type == 1 && g.adjacent(x, y))
        for (int x2 = 0; x2 < na; ++x2)
          if (pos_a[static_cast<std::size_t>(x2)] < pos_a[static_cast<std::size_t>(x)] && !g.adjacent(x2, y))
            fail("type-1 white");
    }
  }
  for (const auto& blk : d.blocks) {
    const auto& xb = d.black[static_cast<std::size_t>(blk.black)].vertices;
    const auto& xw = d.white[static_cast<std::size_t>(blk.white)].vertices;
    int wlo = nb, whi = -1, blo = na, bhi = -1;
    for (int y : xw) {
      wlo = std::min(wlo, pos_b[static_cast<std::size_t>(y)]);
      whi = std::max(whi, pos_b[static_cast<std::size_t>(y)]);
    }
    for (int x : xb) {
      blo = std::min(blo, pos_a[static_cast<std::size_t>(x)]);
      bhi = std::max(bhi, pos_a[static_cast<std::size_t>(x)]);
    }
    for (int x : xb)
      for (int y = 0; y < nb; ++y) {
        const int p = pos_b[static_cast<std::size_t>(y)];
        if (p > whi && !g.adjacent(x, y)) fail("block black vs later whites");
        if (p < wlo && g.adjacent(x, y)) fail("block black vs earlier whites");
      }
    for (int y : xw)
      for (int x = 0; x < na; ++x) {
        const int p = pos_a[static_cast<std::size_t>(x)];
        if (p < blo && !g.adjacent(x, y)) fail("block white vs earlier blacks");
        if (p > bhi && g.adjacent(x, y)) fail("block white vs later blacks");
      }
  }
}

}  // namespace detail

inline BlockDecomposition p2p3_blocks(const BipartiteGraph& g) {
  detail::require_p2p3_free(g, "p2p3_blocks");
  std::vector<std::uint64_t> rows, cols;
  for (int a = 0; a < g.size_a(); ++a) rows.push_back(g.row(a));
  for (int b = 0; b < g.size_b(); ++b) cols.push_back(g.column(b));
  BlockDecomposition d;
  d.black = detail::side_classes(rows, true);
  d.white = detail::side_classes(cols, false);
  std::vector<bool> white_used(d.white.size(), false);
  for (std::size_t i = 0; i < d.black.size(); ++i) {
    auto& xb = d.black[i];
    if (xb.type != 2) continue;
    int found = -1, kind = -1;
    for (std::size_t j = 0; j < d.white.size(); ++j) {
      if (d.white[j].type != 2) continue;
      const int k = detail::block_kind(g, xb.vertices, d.white[j].vertices);
      if (k < 0) continue;
      if (found >= 0) throw error("p2p3_blocks: type-2 class pairs with two classes");
      found = static_cast<int>(j);
      kind = k;
    }
    if (found < 0 || white_used[static_cast<std::size_t>(found)])
      throw error("p2p3_blocks: type-2 class without a partner");
    white_used[static_cast<std::size_t>(found)] = true;
    auto& xw = d.white[static_cast<std::size_t>(found)];
    // white side follows the bijection of the black side
    std::vector<int> aligned;
    for (int x : xb.vertices)
      for (int y : xw.vertices)
        if (g.adjacent(x, y) == (kind == 1)) aligned.push_back(y);
    xw.vertices = aligned;
    xb.block = xw.block = static_cast<int>(d.blocks.size());
    d.blocks.push_back({static_cast<int>(i), found, kind == 1});
  }
  for (std::size_t j = 0; j < d.white.size(); ++j)
    if (d.white[j].type == 2 && !white_used[j]) throw error("p2p3_blocks: white type-2 class without a partner");
  d.black_class_of.assign(static_cast<std::size_t>(g.size_a()), -1);
  d.white_class_of.assign(static_cast<std::size_t>(g.size_b()), -1);
  for (std::size_t i = 0; i < d.black.size(); ++i)
    for (int x : d.black[i].vertices) {
      d.black_order.push_back(x);
      d.black_class_of[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
  for (std::size_t j = 0; j < d.white.size(); ++j)
    for (int y : d.white[j].vertices) {
      d.white_order.push_back(y);
      d.white_class_of[static_cast<std::size_t>(y)] = static_cast<int>(j);
    }
  detail::check_order_bullets(g, d);
  return d;
}

/**
 * K_{p,p} or co-K_{q,q} in a P2+P3-free bipartite graph with at least
 * max(p,q) + p + q - 2 vertices per part, found by windowing the block
 * order. Works on the first threshold-many vertices of each part.
 */
inline HomogeneousWitness p2p3_find_homogeneous(const BipartiteGraph& g, int p, int q) {
  detail::require_p2p3_free(g, "p2p3_find_homogeneous");
  if (p < 2 || q < 2) throw precondition_error("p2p3_find_homogeneous needs p, q >= 2");
  const int m = std::max(p, q) + p + q - 2;
  if (g.size_a() < m || g.size_b() < m)
    throw precondition_error("p2p3_find_homogeneous: each part needs at least " + std::to_string(m) + " vertices");
  std::vector<int> first(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) first[static_cast<std::size_t>(i)] = i;
  const BipartiteGraph h = g.induced(first, first);
  const BlockDecomposition d = p2p3_blocks(h);
  const auto& bo = d.black_order;
  const auto& wo = d.white_order;
  std::vector<int> pos_a(static_cast<std::size_t>(m)), pos_b(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    pos_a[static_cast<std::size_t>(bo[static_cast<std::size_t>(i)])] = i;
    pos_b[static_cast<std::size_t>(wo[static_cast<std::size_t>(i)])] = i;
  }
  auto slice = [](const std::vector<int>& v, int lo, int hi, const char* what) {
    if (lo < 0 || hi > static_cast<int>(v.size()) || lo > hi)
      throw error(std::string("p2p3_find_homogeneous: not enough vertices for ") + what);
    return std::vector<int>(v.begin() + lo, v.begin() + hi);
  };
  auto done = [&](HomogeneousWitness w) {
    require_homogeneous(g, w, w.biclique ? p : q, "p2p3_find_homogeneous");
    return w;
  };
  auto join = [](std::vector<int> x, const std::vector<int>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };

  const auto b1 = slice(bo, 0, p, "B1"), b3 = slice(bo, m - q, m, "B3");
  const auto w1 = slice(wo, 0, q, "W1"), w3 = slice(wo, m - p, m, "W3");
  auto complete = [&](const std::vector<int>& xs, const std::vector<int>& ys, bool want) {
    for (int x : xs)
      for (int y : ys)
        if (h.adjacent(x, y) != want) return false;
    return true;
  };
  if (complete(b1, w3, true)) return done({true, b1, w3, "first p blacks complete to last p whites"});
  if (complete(b3, w1, false)) return done({false, b3, w1, "last q blacks anticomplete to first q whites"});

  int eb = -1, ew = -1, nb_ = -1, nw = -1;
  for (int y : w1)
    for (int x : b3)
      if (eb < 0 && h.adjacent(x, y)) {
        eb = x;
        ew = y;
      }
  for (int x : b1)
    for (int y : w3)
      if (nb_ < 0 && !h.adjacent(x, y)) {
        nb_ = x;
        nw = y;
      }
  auto block_of_black = [&](int x) { return d.black[static_cast<std::size_t>(d.black_class_of[static_cast<std::size_t>(x)])].block; };
  auto block_of_white = [&](int y) { return d.white[static_cast<std::size_t>(d.white_class_of[static_cast<std::size_t>(y)])].block; };

  if (block_of_black(eb) < 0 || block_of_black(eb) != block_of_white(ew)) {
    const int pb = pos_a[static_cast<std::size_t>(eb)], pw = pos_b[static_cast<std::size_t>(ew)];
    return done({true, slice(bo, pb - p, pb, "blacks before b3"), slice(wo, pw + 1, pw + 1 + p, "whites after w1"),
                 "blacks before an edge complete to whites after it"});
  }
  if (block_of_black(nb_) < 0 || block_of_black(nb_) != block_of_white(nw)) {
    const int pb = pos_a[static_cast<std::size_t>(nb_)], pw = pos_b[static_cast<std::size_t>(nw)];
    return done({false, slice(bo, pb + 1, pb + 1 + q, "blacks after b1"), slice(wo, pw - q, pw, "whites before w3"),
                 "blacks after a non-edge anticomplete to whites before it"});
  }
  if (block_of_black(eb) != block_of_black(nb_)) throw error("p2p3_find_homogeneous: window pairs lie in different blocks");

  const Block& t = d.blocks[static_cast<std::size_t>(block_of_black(eb))];
  const auto& tb = d.black[static_cast<std::size_t>(t.black)].vertices;
  const auto& tw = d.white[static_cast<std::size_t>(t.white)].vertices;
  const int size = static_cast<int>(tb.size());
  const int first_b = pos_a[static_cast<std::size_t>(tb.front())], last_b = pos_a[static_cast<std::size_t>(tb.back())];
  const int first_w = pos_b[static_cast<std::size_t>(tw.front())], last_w = pos_b[static_cast<std::size_t>(tw.back())];

  if (t.matching) {
    if (size >= 2 * q) return done({false, slice(tb, 0, q, "block"), slice(tw, q, 2 * q, "block"), "large matching block"});
    if (last_b + 1 < m)
      return done({false, join({bo[static_cast<std::size_t>(last_b + 1)]}, slice(tb, size - (q - 1), size, "block")),
                   slice(tw, 0, q, "block"), "black after the matching block"});
    if (first_w > 0)
      return done({false, slice(tb, size - q, size, "block"),
                   join({wo[static_cast<std::size_t>(first_w - 1)]}, slice(tw, 0, q - 1, "block")),
                   "white before the matching block"});
    return done({true, join(slice(bo, first_b - (p - 1), first_b, "blacks before block"), {eb}),
                 join({ew}, slice(wo, last_w + 1, last_w + p, "whites after block")),
                 "blacks before and whites after the matching block with one block edge"});
  }
  if (size >= 2 * p) return done({true, slice(tb, 0, p, "block"), slice(tw, p, 2 * p, "block"), "large co-matching block"});
  if (first_b > 0)
    return done({true, join({bo[static_cast<std::size_t>(first_b - 1)]}, slice(tb, 0, p - 1, "block")),
                 slice(tw, size - p, size, "block"), "black before the co-matching block"});
  if (last_w + 1 < m)
    return done({true, slice(tb, 0, p, "block"),
                 join({wo[static_cast<std::size_t>(last_w + 1)]}, slice(tw, size - (p - 1), size, "block")),
                 "white after the co-matching block"});
  return done({false, join({nb_}, slice(bo, last_b + 1, last_b + q, "blacks after block")),
               join(slice(wo, first_w - (q - 1), first_w, "whites before block"), {nw}),
               "blacks after and whites before the co-matching block with one block non-edge"});
}

}  // namespace linram
