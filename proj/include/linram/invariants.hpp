#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/error.hpp"
#include "linram/graph.hpp"

namespace linram {

inline constexpr int chromatic_exact_cap = 24;
inline constexpr int cochromatic_exact_cap = 16;
inline constexpr int biclique_exact_cap = 32;

namespace detail {

// Branch and bound with greedy colouring bounds (Tomita-style).
template <std::size_t W>
class CliqueSearch {
 public:
  using Row = BitSet<W>;

  explicit CliqueSearch(const BasicGraph<W>& g) : g_(g) {}

  Row run(const Row& candidates, int stop_at) {
    stop_at_ = stop_at;
    best_size_ = 0;
    best_ = Row{};
    Row current;
    expand(candidates, current, 0);
    return best_;
  }

 private:
  void expand(Row cand, Row& current, int size) {
    if (cand.none()) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    colour_sort(cand, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[static_cast<std::size_t>(i)] <= best_size_) return;
      if (best_size_ >= stop_at_) return;
      const int v = order[static_cast<std::size_t>(i)];
      current.set(v);
      expand(cand & g_.neighbours(v), current, size + 1);
      current.reset(v);
      cand.reset(v);
    }
  }

  void colour_sort(const Row& cand, std::vector<int>& order, std::vector<int>& bound) const {
    Row uncoloured = cand;
    int colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Row q = uncoloured;
      while (q.any()) {
        const int v = q.first();
        q.reset(v);
        q.subtract(g_.neighbours(v));
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  const BasicGraph<W>& g_;
  Row best_;
  int best_size_ = 0;
  int stop_at_ = 0;
};

}  // namespace detail

/// A maximum clique inside `within` (defaults to all vertices).
template <std::size_t W>
typename BasicGraph<W>::Row maximum_clique(const BasicGraph<W>& g,
                                           typename BasicGraph<W>::Row within) {
  return detail::CliqueSearch<W>(g).run(within & g.vertices(), g.order() + 1);
}

template <std::size_t W>
typename BasicGraph<W>::Row maximum_clique(const BasicGraph<W>& g) {
  return maximum_clique(g, g.vertices());
}

template <std::size_t W>
int clique_number(const BasicGraph<W>& g, typename BasicGraph<W>::Row within) {
  return maximum_clique(g, within).count();
}

template <std::size_t W>
int clique_number(const BasicGraph<W>& g) {
  return maximum_clique(g).count();
}

/// True when some clique inside `within` has at least k vertices.
template <std::size_t W>
bool has_clique(const BasicGraph<W>& g, typename BasicGraph<W>::Row within, int k) {
  if (k <= 0) return true;
  return detail::CliqueSearch<W>(g).run(within & g.vertices(), k).count() >= k;
}

template <std::size_t W>
typename BasicGraph<W>::Row maximum_independent_set(const BasicGraph<W>& g) {
  return maximum_clique(complement(g));
}

template <std::size_t W>
int independence_number(const BasicGraph<W>& g) {
  return clique_number(complement(g));
}

namespace detail {

template <std::size_t W>
class DsaturSearch {
 public:
  explicit DsaturSearch(const BasicGraph<W>& g)
      : g_(g), n_(g.order()), colour_(static_cast<std::size_t>(g.order()), -1) {}

  int run(int lower) {
    best_ = greedy_upper();
    lower_ = lower;
    if (best_ > lower_) branch(0, 0);
    return best_;
  }

 private:
  int greedy_upper() {
    std::vector<int> c(static_cast<std::size_t>(n_), -1);
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      const int v = pick(c);
      int k = 0;
      while (conflicts(c, v, k)) ++k;
      c[static_cast<std::size_t>(v)] = k;
      used = std::max(used, k + 1);
    }
    return used;
  }

  bool conflicts(const std::vector<int>& c, int v, int k) const {
    bool bad = false;
    g_.neighbours(v).for_each([&](int u) {
      if (c[static_cast<std::size_t>(u)] == k) bad = true;
    });
    return bad;
  }

  int saturation(const std::vector<int>& c, int v) const {
    std::uint64_t seen = 0;
    g_.neighbours(v).for_each([&](int u) {
      const int cu = c[static_cast<std::size_t>(u)];
      if (cu >= 0) seen |= std::uint64_t{1} << cu;
    });
    return std::popcount(seen);
  }

  int pick(const std::vector<int>& c) const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (c[static_cast<std::size_t>(v)] >= 0) continue;
      const int s = saturation(c, v), d = g_.degree(v);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    return best;
  }

  void branch(int coloured, int used) {
    if (best_ <= lower_) return;
    if (coloured == n_) {
      best_ = used;
      return;
    }
    const int v = pick(colour_);
    const int limit = std::min(used + 1, best_ - 1);
    for (int k = 0; k < limit; ++k) {
      if (conflicts(colour_, v, k)) continue;
      colour_[static_cast<std::size_t>(v)] = k;
      branch(coloured + 1, std::max(used, k + 1));
      colour_[static_cast<std::size_t>(v)] = -1;
      if (best_ <= lower_) return;
    }
  }

  const BasicGraph<W>& g_;
  int n_;
  std::vector<int> colour_;
  int best_ = 0;
  int lower_ = 0;
};

}  // namespace detail

/// Exact chromatic number by DSATUR branch and bound, clique number as the lower bound.
template <std::size_t W>
int chromatic_number(const BasicGraph<W>& g) {
  if (g.order() > chromatic_exact_cap)
    throw size_limit_error("chromatic_number: exact mode is capped at " +
                           std::to_string(chromatic_exact_cap) + " vertices");
  if (g.order() == 0) return 0;
  return detail::DsaturSearch<W>(g).run(clique_number(g));
}

namespace detail {

class CochromaticSearch {
 public:
  explicit CochromaticSearch(const Graph& g) : g_(g) {
    order_.resize(static_cast<std::size_t>(g.order()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  bool feasible(int k) {
    k_ = k;
    parts_.clear();
    return place(0);
  }

 private:
  enum class Kind { open, clique, independent };
  struct Part {
    Graph::Row members;
    Kind kind = Kind::open;
  };

  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    const int v = order_[i];
    const auto& nv = g_.neighbours(v);
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      const Part saved = parts_[j];
      const bool to_clique = saved.members.is_subset_of(nv);
      const bool to_indep = (saved.members & nv).none();
      auto attempt = [&](Kind kind) {
        parts_[j].members.set(v);
        parts_[j].kind = kind;
        if (place(i + 1)) return true;
        parts_[j] = saved;
        return false;
      };
      if (saved.kind == Kind::open) {
        if (to_clique && attempt(Kind::clique)) return true;
        if (to_indep && attempt(Kind::independent)) return true;
      } else if (saved.kind == Kind::clique && to_clique) {
        if (attempt(Kind::clique)) return true;
      } else if (saved.kind == Kind::independent && to_indep) {
        if (attempt(Kind::independent)) return true;
      }
    }
    if (static_cast<int>(parts_.size()) < k_) {
      Part p;
      p.members.set(v);
      parts_.push_back(p);
      if (place(i + 1)) return true;
      parts_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> order_;
  std::vector<Part> parts_;
  int k_ = 0;
};

}  // namespace detail

/// Minimum number of parts in a partition into cliques and independent sets.
inline int cochromatic_number(const Graph& g) {
  if (g.order() > cochromatic_exact_cap)
    throw size_limit_error("cochromatic_number: exact mode is capped at " +
                           std::to_string(cochromatic_exact_cap) + " vertices");
  if (g.order() == 0) return 0;
  detail::CochromaticSearch search(g);
  for (int k = 1;; ++k)
    if (search.feasible(k)) return k;
}

struct Invariants {
  int alpha = 0;
  int omega = 0;
  int chi = 0;
  int z = 0;
};

inline Invariants compute_invariants(const Graph& g) {
  return {independence_number(g), clique_number(g), chromatic_number(g), cochromatic_number(g)};
}

struct Rational {
  long long num = 0;
  long long den = 1;

  bool operator==(const Rational&) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline Rational make_rational(long long num, long long den) {
  const long long d = std::gcd(num, den);
  return {num / d, den / d};
}

/// max{alpha, omega} / |V| in lowest terms.
template <std::size_t W>
Rational homogeneous_ratio(const BasicGraph<W>& g) {
  if (g.order() == 0) throw precondition_error("homogeneous_ratio of the empty graph");
  const int best = std::max(independence_number(g), clique_number(g));
  return make_rational(best, g.order());
}

// ---------------------------------------------------------------------------
// Bicliques

struct BicliqueSets {
  std::uint64_t a = 0;  // mask over part A
  std::uint64_t b = 0;  // mask over part B
};

namespace detail {

// Search over A-subsets keeping the common B-neighbourhood. `rows[a]` is the
// B-neighbourhood of A-vertex a restricted to the candidate B set.
class BicliqueSearch {
 public:
  explicit BicliqueSearch(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}

  /// Some S (|S| >= s) x T (|T| >= t) complete; returns it trimmed to exactly s x t.
  bool find(int s, int t, std::uint64_t cand_a, std::uint64_t common, BicliqueSets& out) {
    s_ = s;
    t_ = t;
    return find_rec(0, cand_a, common, 0, out);
  }

  /// Largest k with some k x k complete pair.
  int maximum(std::uint64_t cand_a, std::uint64_t common, BicliqueSets& out) {
    best_ = 0;
    best_sets_ = {};
    max_rec(0, cand_a, common, 0);
    out = best_sets_;
    return best_;
  }

 private:
  bool find_rec(int size, std::uint64_t cand, std::uint64_t common, std::uint64_t chosen,
                BicliqueSets& out) {
    if (std::popcount(common) < t_) return false;
    if (size >= s_) {
      out.a = chosen;
      out.b = trim(common, t_);
      return true;
    }
    // Keep only A-vertices that preserve enough common neighbours.
    std::uint64_t viable = 0;
    for (std::uint64_t c = cand; c; c &= c - 1) {
      const int a = std::countr_zero(c);
      if (std::popcount(rows_[static_cast<std::size_t>(a)] & common) >= t_)
        viable |= std::uint64_t{1} << a;
    }
    if (size + std::popcount(viable) < s_) return false;
    while (viable) {
      const int a = std::countr_zero(viable);
      viable &= viable - 1;
      if (find_rec(size + 1, viable, common & rows_[static_cast<std::size_t>(a)],
                   chosen | (std::uint64_t{1} << a), out))
        return true;
      if (size + std::popcount(viable) < s_) return false;
    }
    return false;
  }

  void max_rec(int size, std::uint64_t cand, std::uint64_t common, std::uint64_t chosen) {
    const int value = std::min(size, std::popcount(common));
    if (value > best_) {
      best_ = value;
      best_sets_ = {chosen, trim(common, value)};
      best_sets_.a = trim(chosen, value);
    }
    std::uint64_t viable = 0;
    for (std::uint64_t c = cand; c; c &= c - 1) {
      const int a = std::countr_zero(c);
      if (std::popcount(rows_[static_cast<std::size_t>(a)] & common) > best_)
        viable |= std::uint64_t{1} << a;
    }
    while (viable) {
      if (std::min(size + std::popcount(viable), std::popcount(common)) <= best_) return;
      const int a = std::countr_zero(viable);
      viable &= viable - 1;
      const std::uint64_t next = common & rows_[static_cast<std::size_t>(a)];
      if (std::popcount(next) > best_)
        max_rec(size + 1, viable, next, chosen | (std::uint64_t{1} << a));
      std::uint64_t still = 0;
      for (std::uint64_t c = viable; c; c &= c - 1) {
        const int x = std::countr_zero(c);
        if (std::popcount(rows_[static_cast<std::size_t>(x)] & common) > best_)
          still |= std::uint64_t{1} << x;
      }
      viable = still;
    }
  }

  static std::uint64_t trim(std::uint64_t m, int k) {
    std::uint64_t out = 0;
    for (int i = 0; i < k && m; ++i) {
      const std::uint64_t low = m & (~m + 1);
      out |= low;
      m ^= low;
    }
    return out;
  }

  std::vector<std::uint64_t> rows_;
  int s_ = 0, t_ = 0;
  int best_ = 0;
  BicliqueSets best_sets_;
};

inline std::vector<std::uint64_t> rows_of(const BipartiteGraph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.size_a()));
  for (int a = 0; a < g.size_a(); ++a) rows[static_cast<std::size_t>(a)] = g.row(a);
  return rows;
}

}  // namespace detail

/// Some s x t complete bipartite pair (S in cand_a, T in cand_b); exactly s and t vertices.
inline bool find_biclique(const BipartiteGraph& g, int s, int t, BicliqueSets& out,
                          std::uint64_t cand_a = ~std::uint64_t{0},
                          std::uint64_t cand_b = ~std::uint64_t{0}) {
  detail::BicliqueSearch search(detail::rows_of(g));
  return search.find(s, t, cand_a & g.mask_a(), cand_b & g.mask_b(), out);
}

/// A maximum balanced biclique (b(G)).
inline int maximum_biclique(const BipartiteGraph& g, BicliqueSets& out) {
  if (g.size_a() > biclique_exact_cap || g.size_b() > biclique_exact_cap)
    throw size_limit_error("biclique_number: exact mode is capped at 32 vertices per part");
  detail::BicliqueSearch search(detail::rows_of(g));
  return search.maximum(g.mask_a(), g.mask_b(), out);
}

inline int biclique_number(const BipartiteGraph& g) {
  BicliqueSets s;
  return maximum_biclique(g, s);
}

/// a(G): biclique number of the bipartite complement.
inline int co_biclique_number(const BipartiteGraph& g) {
  return biclique_number(g.bipartite_complement());
}

}  // namespace linram
