#pragma once

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/catalog.hpp"
#include "linram/class_spec.hpp"
#include "linram/invariants.hpp"
#include "linram/structure/decompose.hpp"
#include "linram/structure/homogeneous.hpp"

namespace linram {

namespace detail {

inline const ClassSpec& s123_class() {
  static const ClassSpec x({s123()}, "S123-free");
  return x;
}

inline std::vector<int> first_bits(std::uint64_t m, int n) {
  std::vector<int> out;
  for (int v : BipartiteGraph::bits_of(m)) {
    if (static_cast<int>(out.size()) == n) break;
    out.push_back(v);
  }
  return out;
}

class S123Finder {
 public:
  S123Finder(const BipartiteGraph& g, int n) : g_(g), n_(n) {}

  HomogeneousWitness run() {
    const std::uint64_t all_a = g_.mask_a(), all_b = g_.mask_b();
    std::uint64_t ca = all_a, cb = all_b;
    std::vector<std::uint64_t> pa, pb;    // A_k, B_k
    std::vector<std::uint64_t> ra, rb;    // A'_k, B'_k after step k
    while (auto s = split_once(g_, ca, cb)) {
      const bool first_small = std::popcount(s->a1) <= std::popcount(s->a2);
      pa.push_back(first_small ? s->a1 : s->a2);
      pb.push_back(first_small ? s->b1 : s->b2);
      ca = first_small ? s->a2 : s->a1;
      cb = first_small ? s->b2 : s->b1;
      ra.push_back(ca);
      rb.push_back(cb);
    }
    const int k = static_cast<int>(pa.size());
    if (std::popcount(ca) >= 4 * n_) {
      if (std::popcount(cb) >= 4 * n_) return leaf(ca, cb, k == 0 ? "indecomposable graph" : "large indecomposable leaf");
      std::uint64_t earlier_b = 0;
      for (auto m : pb) earlier_b |= m;
      return pigeon_b(earlier_b, ca, "earlier B vertices against the leaf's A side");
    }
    std::uint64_t acc = 0;
    for (int p = 0; p < k; ++p) {
      acc |= pa[static_cast<std::size_t>(p)];
      if (std::popcount(acc) < 2 * n_) continue;
      const std::uint64_t ap = ra[static_cast<std::size_t>(p)], bp = rb[static_cast<std::size_t>(p)];
      if (std::popcount(bp) >= n_) return pigeon_a(acc, bp, "earlier A vertices against a remainder's B side");
      std::uint64_t earlier_b = 0;
      for (int i = 0; i <= p; ++i) earlier_b |= pb[static_cast<std::size_t>(i)];
      return pigeon_b(earlier_b, ap, "earlier B vertices against a remainder's A side");
    }
    throw error("s123_find_homogeneous: peeled A sides never reach 2n");
  }

 private:
  HomogeneousWitness finish(HomogeneousWitness w) {
    require_homogeneous(g_, w, n_, "s123_find_homogeneous");
    return w;
  }

  std::vector<int> take(std::uint64_t m, const char* what) const {
    if (std::popcount(m) < n_) throw error(std::string("s123_find_homogeneous: too few vertices in ") + what);
    return first_bits(m, n_);
  }

  // each vertex of `as` is complete or anticomplete to `bs`
  HomogeneousWitness pigeon_a(std::uint64_t as, std::uint64_t bs, const char* method) {
    std::uint64_t joined = 0, cojoined = 0;
    for (int a : BipartiteGraph::bits_of(as)) {
      const std::uint64_t r = g_.row(a) & bs;
      if (r == bs) joined |= std::uint64_t{1} << a;
      else if (r == 0) cojoined |= std::uint64_t{1} << a;
      else throw error("s123_find_homogeneous: peeled vertex is mixed on a later piece");
    }
    const bool k = std::popcount(joined) >= n_;
    return finish({k, take(k ? joined : cojoined, "pigeonhole class"), take(bs, "opposite side"), method});
  }

  HomogeneousWitness pigeon_b(std::uint64_t bs, std::uint64_t as, const char* method) {
    std::uint64_t joined = 0, cojoined = 0;
    for (int b : BipartiteGraph::bits_of(bs)) {
      const std::uint64_t c = g_.column(b) & as;
      if (c == as) joined |= std::uint64_t{1} << b;
      else if (c == 0) cojoined |= std::uint64_t{1} << b;
      else throw error("s123_find_homogeneous: peeled vertex is mixed on a later piece");
    }
    const bool k = std::popcount(joined) >= n_;
    return finish({k, take(as, "opposite side"), take(k ? joined : cojoined, "pigeonhole class"), method});
  }

  HomogeneousWitness leaf(std::uint64_t ma, std::uint64_t mb, const std::string& where) {
    if (auto s = interval_structure(g_, ma, mb)) return interval(*s, ma, mb, where);
    return exact(ma, mb, where + ", no path or cycle structure");
  }

  HomogeneousWitness exact(std::uint64_t ma, std::uint64_t mb, const std::string& where) {
    BicliqueSets s;
    if (find_biclique(g_, n_, n_, s, ma, mb))
      return finish({true, BipartiteGraph::bits_of(s.a), BipartiteGraph::bits_of(s.b), "exact search: " + where});
    if (find_biclique(g_.bipartite_complement(), n_, n_, s, ma, mb))
      return finish({false, BipartiteGraph::bits_of(s.a), BipartiteGraph::bits_of(s.b), "exact search: " + where});
    if (ma != g_.mask_a() || mb != g_.mask_b()) return exact(g_.mask_a(), g_.mask_b(), where + ", whole graph");
    throw error("s123_find_homogeneous: no homogeneous subgraph of the requested order");
  }

  // path/cycle interval argument, run in the complement when the structure lives there
  HomogeneousWitness interval(const IntervalStructure& s, std::uint64_t ma, std::uint64_t mb, const std::string& where) {
    const bool comp = s.complemented;
    auto flip = [&](bool biclique) { return biclique != comp; };
    auto adj_row = [&](int a) { return (comp ? ~g_.row(a) : g_.row(a)) & mb; };
    auto adj_col = [&](int b) { return (comp ? ~g_.column(b) : g_.column(b)) & ma; };
    const std::string m = where + ", interval structure";
    for (auto blk : s.a_blocks)
      if (std::popcount(blk) >= n_) {
        const std::uint64_t nb = adj_row(std::countr_zero(blk));
        if (std::popcount(nb) >= n_) return finish({flip(true), take(blk, "A block"), take(nb, "joined B blocks"), m});
        return finish({flip(false), take(blk, "A block"), take(mb & ~nb, "co-joined B blocks"), m});
      }
    for (auto blk : s.b_blocks)
      if (std::popcount(blk) >= n_) {
        const std::uint64_t na = adj_col(std::countr_zero(blk));
        if (std::popcount(na) >= n_) return finish({flip(true), take(na, "joined A blocks"), take(blk, "B block"), m});
        return finish({flip(false), take(ma & ~na, "co-joined A blocks"), take(blk, "B block"), m});
      }
    const std::size_t sz = s.a_blocks.size();
    std::uint64_t prefix = 0;
    std::size_t k = 0;
    while (k < sz && std::popcount(prefix) < n_) prefix |= s.a_blocks[k++];
    if (std::popcount(prefix) < n_) throw error("s123_find_homogeneous: interval blocks too small");
    // blocks are 0-based: the prefix is A_0..A_{k-1}
    std::uint64_t tail_b = 0, mid_b = 0, tail_a = 0;
    for (std::size_t j = k + 1; j < sz; ++j) tail_b |= s.b_blocks[j];
    for (std::size_t j = 1; j + 1 <= k && j < sz; ++j) mid_b |= s.b_blocks[j];
    for (std::size_t j = k; j < sz; ++j) tail_a |= s.a_blocks[j];
    if (std::popcount(tail_b) >= n_) return finish({flip(false), take(prefix, "A prefix"), take(tail_b, "later B blocks"), m});
    return finish({flip(false), take(tail_a, "later A blocks"), take(mid_b, "middle B blocks"), m});
  }

  const BipartiteGraph& g_;
  int n_;
};

}  // namespace detail

/**
 * K_{n,n} or co-K_{n,n} in an S123-free bipartite graph with at least 6n
 * vertices per part. Peels the canonical decomposition keeping the piece
 * with the larger A side, then pigeonholes the peeled vertices or runs the
 * interval argument on the final leaf. Uses the first 6n vertices of each part.
 */
inline HomogeneousWitness s123_find_homogeneous(const BipartiteGraph& g, int n) {
  if (auto v = detail::s123_class().violation(g.to_graph()))
    throw class_violation("s123_find_homogeneous: graph contains an induced S123", v->embedding);
  if (n < 1) throw precondition_error("s123_find_homogeneous needs n >= 1");
  const int m = 6 * n;
  if (g.size_a() < m || g.size_b() < m)
    throw precondition_error("s123_find_homogeneous: each part needs at least " + std::to_string(m) + " vertices");
  std::vector<int> first(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) first[static_cast<std::size_t>(i)] = i;
  const BipartiteGraph h = g.induced(first, first);
  auto w = detail::S123Finder(h, n).run();
  require_homogeneous(g, w, n, "s123_find_homogeneous");
  return w;
}

}  // namespace linram
