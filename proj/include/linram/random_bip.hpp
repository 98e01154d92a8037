#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/error.hpp"
#include "linram/invariants.hpp"

namespace linram {

struct RandomParams {
  int n = 8;
  int k = 4;
  std::uint64_t seed = 1;

  int big_n() const { return 2 * n; }
  double delta() const { return 1.0 / (2.0 * k); }
  double p() const { return std::pow(2.0 * big_n(), delta() - 1.0); }
};

/// A cycle as vertex masks over part A and part B.
struct CycleSet {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

struct GirthReport {
  std::size_t short_cycles = 0;  // in the sampled graph
  int deletions_a = 0;
  int deletions_b = 0;
  int final_a = 0;
  int final_b = 0;
  int co_biclique = 0;  // a(G)
  bool co_biclique_exact = false;
  std::size_t cycles_after = 0;  // always 0 on success
  int attempts = 0;
  std::uint64_t seed_used = 0;
  double p = 0;
};

struct GirthSample {
  BipartiteGraph graph;
  GirthReport report;
};

inline constexpr int girth_retry_cap = 16;

namespace detail {

// vertices 0..na-1 are A, na.. are B
class CycleWalker {
 public:
  CycleWalker(const BipartiteGraph& g, int k) : g_(g), k_(k), na_(g.size_a()) {}

  template <class F>
  void each(F&& f) {
    const int total = g_.order();
    for (int s = 0; s < total; ++s) {
      start_ = s;
      path_.assign(1, s);
      on_a_ = s < na_ ? std::uint64_t{1} << s : 0;
      on_b_ = s < na_ ? 0 : std::uint64_t{1} << (s - na_);
      extend(f);
    }
  }

 private:
  std::uint64_t nbrs(int v) const { return v < na_ ? g_.row(v) : g_.column(v - na_); }

  template <class F>
  void extend(F& f) {
    const int v = path_.back();
    const bool in_a = v < na_;
    const int offset = in_a ? na_ : 0;
    std::uint64_t cand = nbrs(v);
    while (cand) {
      const int u = std::countr_zero(cand) + offset;
      cand &= cand - 1;
      if (u == start_) {
        // each cycle once: length >= 4 and second vertex below the last
        if (path_.size() >= 4 && path_[1] < path_.back()) f(CycleSet{on_a_, on_b_});
        continue;
      }
      if (u < start_ || static_cast<int>(path_.size()) >= k_) continue;
      const std::uint64_t bit = std::uint64_t{1} << (u < na_ ? u : u - na_);
      std::uint64_t& on = u < na_ ? on_a_ : on_b_;
      if (on & bit) continue;
      on |= bit;
      path_.push_back(u);
      extend(f);
      path_.pop_back();
      on &= ~bit;
    }
  }

  const BipartiteGraph& g_;
  int k_;
  int na_;
  int start_ = 0;
  std::vector<int> path_;
  std::uint64_t on_a_ = 0, on_b_ = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// uniform in [0, 1) from the top 53 bits, identical on every platform
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline int greedy_co_biclique(const BipartiteGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.size_a()));
  for (int a = 0; a < g.size_a(); ++a) order[static_cast<std::size_t>(a)] = a;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return std::popcount(g.row(x)) < std::popcount(g.row(y)); });
  std::uint64_t common = g.mask_b();
  int best = 0, taken = 0;
  for (int a : order) {
    common &= ~g.row(a);
    ++taken;
    best = std::max(best, std::min(taken, std::popcount(common)));
  }
  return best;
}

}  // namespace detail

/// Cycles of length at most k (bipartite graphs only have even ones), each counted once.
inline std::size_t count_short_cycles(const BipartiteGraph& g, int k) {
  if (k < 4) throw precondition_error("count_short_cycles needs k >= 4");
  std::size_t c = 0;
  detail::CycleWalker(g, k).each([&](const CycleSet&) { ++c; });
  return c;
}

inline std::vector<CycleSet> short_cycles(const BipartiteGraph& g, int k) {
  if (k < 4) throw precondition_error("short_cycles needs k >= 4");
  std::vector<CycleSet> out;
  detail::CycleWalker(g, k).each([&](const CycleSet& c) { out.push_back(c); });
  return out;
}

/// G(N, N, p): every cross pair independently with probability p.
inline BipartiteGraph sample_random_bipartite(int na, int nb, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BipartiteGraph g(na, nb);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      if (detail::unit(rng) < p) g.add_edge(a, b);
  return g;
}

/**
 * Samples G(2n, 2n, p), deletes a vertex from every cycle of length <= k
 * (greedily by cycle coverage, alternating parts) and keeps the first n
 * survivors per part. Resamples with a derived seed when a part runs short.
 */
inline GirthSample sample_girth_construction(const RandomParams& params) {
  if (params.n < 4) throw precondition_error("sample_girth_construction needs n >= 4");
  if (params.k < 4) throw precondition_error("sample_girth_construction needs k >= 4");
  if (params.big_n() > BipartiteGraph::max_part)
    throw size_limit_error("sample_girth_construction: 2n must not exceed " + std::to_string(BipartiteGraph::max_part));
  const int big = params.big_n();
  const double p = params.p();
  for (int attempt = 0; attempt < girth_retry_cap; ++attempt) {
    const std::uint64_t seed = attempt == 0 ? params.seed : detail::splitmix64(params.seed + static_cast<std::uint64_t>(attempt));
    const BipartiteGraph g = sample_random_bipartite(big, big, p, seed);
    auto cycles = short_cycles(g, params.k);
    GirthReport rep;
    rep.short_cycles = cycles.size();
    rep.attempts = attempt + 1;
    rep.seed_used = seed;
    rep.p = p;
    std::uint64_t dead_a = 0, dead_b = 0;
    bool from_a = true;
    while (!cycles.empty()) {
      std::array<int, 64> cover{};
      for (const auto& c : cycles)
        for (int v : BipartiteGraph::bits_of(from_a ? c.a : c.b)) ++cover[static_cast<std::size_t>(v)];
      int pick = 0;
      for (int v = 1; v < big; ++v)
        if (cover[static_cast<std::size_t>(v)] > cover[static_cast<std::size_t>(pick)]) pick = v;
      const std::uint64_t bit = std::uint64_t{1} << pick;
      (from_a ? dead_a : dead_b) |= bit;
      (from_a ? rep.deletions_a : rep.deletions_b) += 1;
      std::erase_if(cycles, [&](const CycleSet& c) { return ((from_a ? c.a : c.b) & bit) != 0; });
      from_a = !from_a;
    }
    std::vector<int> keep_a, keep_b;
    for (int v = 0; v < big; ++v) {
      if (!((dead_a >> v) & 1U) && static_cast<int>(keep_a.size()) < params.n) keep_a.push_back(v);
      if (!((dead_b >> v) & 1U) && static_cast<int>(keep_b.size()) < params.n) keep_b.push_back(v);
    }
    if (static_cast<int>(keep_a.size()) < params.n || static_cast<int>(keep_b.size()) < params.n) continue;
    GirthSample out;
    out.graph = g.induced(keep_a, keep_b);
    rep.final_a = out.graph.size_a();
    rep.final_b = out.graph.size_b();
    rep.cycles_after = count_short_cycles(out.graph, params.k);
    if (rep.cycles_after != 0) throw error("sample_girth_construction: short cycle survived the deletions");
    if (params.n <= biclique_exact_cap) {
      rep.co_biclique = co_biclique_number(out.graph);
      rep.co_biclique_exact = true;
    } else {
      rep.co_biclique = detail::greedy_co_biclique(out.graph);
    }
    out.report = rep;
    return out;
  }
  throw error("sample_girth_construction: deletions exhausted a part in " + std::to_string(girth_retry_cap) + " attempts");
}

}  // namespace linram
