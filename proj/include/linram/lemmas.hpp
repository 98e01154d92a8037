#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/canonical.hpp"
#include "linram/catalog.hpp"
#include "linram/class_spec.hpp"
#include "linram/enumerate.hpp"
#include "linram/graph6.hpp"
#include "linram/subgraph.hpp"

namespace linram {

enum class LemmaKind { per_graph, finiteness, bipartite };

using Verdict = std::optional<std::string>;  // reason when the conclusion fails

/**
 * A structural statement checked over an enumerated class: every member (on
 * up to `cap` vertices) satisfying `hypothesis` must satisfy `conclusion`.
 * Finiteness entries instead require no member on `bound + 1` vertices and
 * `extremal` among the members on `bound` vertices.
 */
struct LemmaSpec {
  std::string id;
  std::string title;
  LemmaKind kind = LemmaKind::per_graph;
  std::vector<std::string> forbidden;
  GraphFilter filter;  // extra hereditary restriction on the enumeration
  std::function<bool(const Graph&)> hypothesis;
  std::function<Verdict(const Graph&)> conclusion;
  BipartiteFilter bipartite_filter;
  std::function<Verdict(const BipartiteGraph&)> bipartite_conclusion;
  int bound = 0;
  std::function<Graph()> extremal;
  int default_cap = 8;

  ClassSpec spec() const {
    std::vector<Graph> hs;
    for (const auto& f : forbidden) hs.push_back(parse_graph_name(f));
    return ClassSpec(hs, title);
  }
};

struct LemmaCounterexample {
  std::string graph;  // graph6 or bipartite line
  std::string reason;
};

struct LemmaReport {
  std::string lemma;
  int cap = 0;
  std::vector<std::size_t> counts;   // class members per order (total order for bipartite)
  std::vector<std::size_t> checked;  // members satisfying the hypothesis
  std::size_t failures = 0;
  std::vector<LemmaCounterexample> counterexamples;  // first few
  std::vector<std::string> notes;
  bool passed = true;
};

inline constexpr int lemma_cap_limit = 11;
inline constexpr int bipartite_lemma_cap_limit = 12;
inline constexpr std::size_t max_reported_counterexamples = 20;

namespace detail::lemma {

using Mask = std::uint64_t;

inline Mask nb(const Graph& g, int v) { return g.neighbours(v).word(0); }
inline Mask all(const Graph& g) { return BipartiteGraph::low_bits(g.order()); }

inline bool clique(const Graph& g, Mask s) {
  for (int v : BipartiteGraph::bits_of(s))
    if ((s & ~(Mask{1} << v) & ~nb(g, v)) != 0) return false;
  return true;
}

inline bool independent(const Graph& g, Mask s) {
  for (int v : BipartiteGraph::bits_of(s))
    if (nb(g, v) & s) return false;
  return true;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline std::vector<Mask> triangles(const Graph& g) {
  std::vector<Mask> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      for (int w = v + 1; w < g.order(); ++w)
        if (g.adjacent(u, v) && g.adjacent(u, w) && g.adjacent(v, w))
          out.push_back((Mask{1} << u) | (Mask{1} << v) | (Mask{1} << w));
  return out;
}

inline bool has_independent_of_size(const Graph& g, int k) {
  const int n = g.order();
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (std::popcount(s) == k && independent(g, s)) return true;
  return false;
}

inline bool has_clique_of_size(const Graph& g, int k) {
  const int n = g.order();
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (std::popcount(s) == k && clique(g, s)) return true;
  return false;
}

inline std::vector<Mask> component_masks(const Graph& g, Mask within) {
  std::vector<Mask> out;
  Mask left = within;
  while (left) {
    Mask comp = left & (~left + 1), frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (int v : BipartiteGraph::bits_of(frontier)) next |= nb(g, v) & within;
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

// every proper 2-colouring of G[within], as the mask of colour-0 vertices
inline std::vector<Mask> bipartitions(const Graph& g, Mask within) {
  std::vector<Mask> sides{0};
  for (Mask comp : component_masks(g, within)) {
    Mask zero = 0, coloured = 0;
    std::vector<int> stack{std::countr_zero(comp)};
    zero |= Mask{1} << stack.back();
    coloured |= Mask{1} << stack.back();
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const bool vz = (zero >> v) & 1U;
      for (int u : BipartiteGraph::bits_of(nb(g, v) & within)) {
        if ((coloured >> u) & 1U) {
          if (((zero >> u) & 1U) == vz) return {};
          continue;
        }
        coloured |= Mask{1} << u;
        if (!vz) zero |= Mask{1} << u;
        stack.push_back(u);
      }
    }
    std::vector<Mask> grown;
    for (Mask s : sides) {
      grown.push_back(s | zero);
      grown.push_back(s | (comp & ~zero));
    }
    sides = std::move(grown);
  }
  return sides;
}

inline bool bipartite(const Graph& g) { return !bipartitions(g, all(g)).empty(); }

inline bool complement_degree_le1(const Graph& g, Mask within) {
  for (int v : BipartiteGraph::bits_of(within))
    if (std::popcount(within & ~nb(g, v) & ~(Mask{1} << v)) > 1) return false;
  return true;
}

inline bool has_induced_c5(const Graph& g, Mask within) {
  const auto vs = BipartiteGraph::bits_of(within);
  return contains_induced(g.induced(std::span<const int>(vs)), cycle(5)).has_value();
}

inline Verdict fail(std::string s) { return s; }

// ---- conclusions -------------------------------------------------------

inline Verdict triangle_free(const Graph& g) {
  if (!triangles(g).empty()) return fail("contains a triangle");
  return std::nullopt;
}

inline Verdict is_bipartite_verdict(const Graph& g) {
  if (!bipartite(g)) return fail("not bipartite");
  return std::nullopt;
}

inline Verdict simplex_or_kst_k1(const Graph& g) {
  Mask iso = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) iso |= Mask{1} << v;
  if (std::popcount(iso) == 1) {
    const Mask rest = all(g) & ~iso;
    for (Mask side : bipartitions(g, rest)) {
      bool complete_bip = true;
      for (int u : BipartiteGraph::bits_of(side))
        if ((nb(g, u) & rest) != (rest & ~side)) complete_bip = false;
      if (complete_bip) return std::nullopt;
    }
  }
  for (Mask side : bipartitions(g, all(g))) {
    const Mask other = all(g) & ~side;
    for (int v = 0; v < g.order(); ++v) {
      const Mask opposite = ((side >> v) & 1U) ? other : side;
      if (std::popcount(opposite & ~nb(g, v)) > 1)
        return fail("vertex " + std::to_string(v) + " has two non-neighbours across a bipartition and G is not K_{s,t}+K1");
    }
  }
  return std::nullopt;
}

inline Verdict split_one_neighbour(const Graph& g) {
  const Mask full = all(g);
  for (Mask c = 0; c <= full; ++c) {
    if (!clique(g, c) || !independent(g, full & ~c)) continue;
    bool ok = true;
    for (int v : BipartiteGraph::bits_of(full & ~c)) ok = ok && std::popcount(nb(g, v) & c) <= 1;
    if (ok) return std::nullopt;
  }
  return fail("no split partition whose independent side sees at most one clique vertex each");
}

inline Verdict bipartite_or_extended_c5(const Graph& g) {
  if (bipartite(g)) return std::nullopt;
  std::vector<Mask> hoods;
  std::vector<int> reps;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    if (std::find(hoods.begin(), hoods.end(), nb(g, v)) == hoods.end()) {
      hoods.push_back(nb(g, v));
      reps.push_back(v);
    }
  }
  if (reps.size() != 5) return fail("non-isolated twin quotient has " + std::to_string(reps.size()) + " classes");
  // quotient must be a 5-cycle
  std::vector<int> deg(5, 0);
  Graph q(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (g.adjacent(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)])) q.add_edge(i, j);
  for (int i = 0; i < 5; ++i)
    if (q.degree(i) != 2) return fail("twin quotient is not a 5-cycle");
  if (!is_connected(q)) return fail("twin quotient is not a 5-cycle");
  return std::nullopt;
}

inline Verdict claim_disjoint_triangles(const Graph& g) {
  const auto ts = triangles(g);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (ts[i] & ts[j]) return fail("two triangles share a vertex");
  return std::nullopt;
}

inline Verdict claim_edge_sees_triangle(const Graph& g) {
  for (Mask t : triangles(g))
    for (auto [x, y] : g.edges()) {
      if (((t >> x) & 1U) || ((t >> y) & 1U)) continue;
      const Mask nx = nb(g, x) & t, ny = nb(g, y) & t;
      if (std::popcount(nx) != 1 || std::popcount(ny) != 1)
        return fail("edge " + std::to_string(x) + "-" + std::to_string(y) + " does not see a triangle exactly once per end");
      if (nx == ny) return fail("edge ends share their triangle neighbour");
    }
  return std::nullopt;
}

inline Verdict claim_no_disjoint_c5(const Graph& g) {
  for (Mask t : triangles(g))
    if (has_induced_c5(g, all(g) & ~t)) return fail("induced C5 disjoint from a triangle");
  return std::nullopt;
}

inline Verdict claim_three_triangles(const Graph& g) {
  const auto ts = triangles(g);
  if (ts.size() > 3) return fail("more than three triangles");
  Mask cover = 0;
  for (Mask t : ts) cover |= t;
  for (int v : BipartiteGraph::bits_of(all(g) & ~cover))
    if (g.degree(v) != 0) return fail("vertex outside the triangles is not isolated");
  return std::nullopt;
}

inline Verdict claim_two_triangles(const Graph& g) {
  const auto ts = triangles(g);
  const Mask rest = all(g) & ~(ts[0] | ts[1]);
  for (Mask side : bipartitions(g, rest)) {
    const Mask x = side, y = rest & ~side;
    for (int z1 : BipartiteGraph::bits_of(ts[0]))
      for (int z2 : BipartiteGraph::bits_of(ts[1])) {
        const Mask z = (Mask{1} << z1) | (Mask{1} << z2);
        if (independent(g, x | z) && independent(g, y | z)) return std::nullopt;
      }
  }
  return fail("no bipartition of the rest extends by one vertex of each triangle");
}

inline Verdict bipartite_plus_dominating(const Graph& g) {
  if (!is_connected(g)) return is_bipartite_verdict(g);
  Mask rest = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != g.order() - 1) rest |= Mask{1} << v;
  if (bipartitions(g, rest).empty()) return fail("connected and not bipartite after removing dominating vertices");
  return std::nullopt;
}

inline Verdict cdpawclaw_shape(const Graph& g) {
  const int n = g.order();
  const auto comps = component_masks(g, all(g));
  const int e = static_cast<int>(g.edge_count());
  if (comps.size() <= 1) {
    const int d = max_degree(g);
    if (d <= 2 && e == n - 1 && n <= 5) return std::nullopt;
    if (d <= 2 && e == n && n >= 3 && n <= 6) return std::nullopt;
    if (complement_degree_le1(g, all(g))) return std::nullopt;
    return fail("connected but not a short path, a short cycle or co-(degree <= 1)");
  }
  if (comps.size() == 2) {
    if (clique(g, comps[0]) && clique(g, comps[1])) return std::nullopt;
    for (int i = 0; i < 2; ++i)
      if (std::popcount(comps[static_cast<std::size_t>(i)]) == 1 && complement_degree_le1(g, comps[static_cast<std::size_t>(1 - i)]))
        return std::nullopt;
    return fail("two components of the wrong shape");
  }
  if (e != 0) return fail("three or more components and an edge");
  return std::nullopt;
}

// ---- coloured: forest and co-forest ------------------------------------

inline bool bipartite_forest(const BipartiteGraph& h) { return is_forest(h.to_graph()); }

inline bool forest_and_coforest(const BipartiteGraph& h) {
  return bipartite_forest(h) && bipartite_forest(h.bipartite_complement());
}

inline const std::vector<std::pair<std::string, BipartiteGraph>>& acyclic_targets() {
  static const std::vector<std::pair<std::string, BipartiteGraph>> t{
      {"P7", bipartite_path(7)}, {"S123", bipartite_s123()}, {"F(8,8)", bipartite_f(8, 8)}};
  return t;
}

inline Verdict embeds_in_acyclic_target(const BipartiteGraph& h) {
  for (const auto& [name, t] : acyclic_targets())
    if (contains_colored_induced(t, h) || contains_colored_induced(t, h.swapped())) return std::nullopt;
  return fail("not an induced subgraph of P7, S123 or F(8,8), in either orientation");
}

inline Graph named(std::string_view s) { return parse_graph_name(s); }

}  // namespace detail::lemma

inline const std::vector<LemmaSpec>& lemma_registry() {
  namespace L = detail::lemma;
  auto has_k3 = [](const Graph& g) { return !L::triangles(g).empty(); };
  static const std::vector<LemmaSpec> reg = [&] {
    std::vector<LemmaSpec> r;
    auto per_graph = [&](std::string id, std::string title, std::vector<std::string> forbid,
                         std::function<bool(const Graph&)> hyp, std::function<Verdict(const Graph&)> concl) {
      LemmaSpec s;
      s.id = std::move(id);
      s.title = std::move(title);
      s.forbidden = std::move(forbid);
      s.hypothesis = std::move(hyp);
      s.conclusion = std::move(concl);
      r.push_back(std::move(s));
    };
    auto finiteness = [&](std::string id, std::string title, std::vector<std::string> forbid) {
      LemmaSpec s;
      s.id = std::move(id);
      s.title = std::move(title);
      s.kind = LemmaKind::finiteness;
      s.forbidden = std::move(forbid);
      s.bound = 9;
      s.extremal = [] { return rook3(); };
      s.default_cap = 10;
      r.push_back(std::move(s));
    };
    per_graph("lem_k4", "(claw, co-claw)-free with an independent 4-set is triangle-free", {"claw", "co-claw"},
              [](const Graph& g) { return L::has_independent_of_size(g, 4); }, L::triangle_free);
    finiteness("lem_finite", "(claw, co-claw, K4, co-K4)-free graphs have at most 9 vertices",
               {"claw", "co-claw", "K4", "co-K4"});
    per_graph("lem_k4_d", "(diamond, co-diamond)-free with an independent 4-set is bipartite", {"diamond", "co-diamond"},
              [](const Graph& g) { return L::has_independent_of_size(g, 4); }, L::is_bipartite_verdict);
    per_graph("lem_cd_bipartite", "co-diamond-free bipartite graph with an edge is a simplex or K_{s,t}+K1",
              {"co-diamond"}, [](const Graph& g) { return g.edge_count() > 0; }, L::simplex_or_kst_k1);
    r.back().filter = [](const Graph& g) { return is_bipartite(g); };
    finiteness("lem_finite_d", "(diamond, co-diamond, K4, co-K4)-free graphs have at most 9 vertices",
               {"diamond", "co-diamond", "K4", "co-K4"});
    per_graph("lem_split_k4", "(2K2, diamond)-free with a K4 is split, each independent vertex seeing <= 1 clique vertex",
              {"2K2", "diamond"}, [](const Graph& g) { return L::has_clique_of_size(g, 4); }, L::split_one_neighbour);
    per_graph("lem_2k2_k3", "(2K2, K3)-free graph is bipartite or an extended C5 plus isolated vertices", {"2K2", "K3"},
              [](const Graph&) { return true; }, L::bipartite_or_extended_c5);
    const std::vector<std::string> y{"2K2", "diamond", "K4"};
    per_graph("claim_y1", "(2K2, diamond, K4)-free: triangles are vertex disjoint", y, has_k3, L::claim_disjoint_triangles);
    per_graph("claim_y2", "(2K2, diamond, K4)-free: an edge off a triangle sees it once at each end, at distinct vertices",
              y, has_k3, L::claim_edge_sees_triangle);
    per_graph("claim_y3", "(2K2, diamond, K4)-free: no induced C5 disjoint from a triangle", y, has_k3,
              L::claim_no_disjoint_c5);
    per_graph("claim_y4", "(2K2, diamond, K4)-free with three triangles: at most three, everything else isolated", y,
              [](const Graph& g) { return L::triangles(g).size() >= 3; }, L::claim_three_triangles);
    per_graph("claim_y5", "(2K2, diamond, K4)-free with exactly two triangles and an edge elsewhere: bipartition extends by z1, z2",
              y,
              [](const Graph& g) {
                const auto ts = L::triangles(g);
                if (ts.size() != 2) return false;
                const L::Mask rest = L::all(g) & ~(ts[0] | ts[1]);
                for (int v : BipartiteGraph::bits_of(rest))
                  if (L::nb(g, v) & rest) return true;
                return false;
              },
              L::claim_two_triangles);
    per_graph("lem_p4c4coclaw", "(P4, C4, co-claw)-free: disconnected is bipartite, connected is bipartite plus dominating vertices",
              {"P4", "C4", "co-claw"}, [](const Graph&) { return true; }, L::bipartite_plus_dominating);
    per_graph("lem_cdpawclaw", "(co-diamond, paw, claw)-free: shape by number of components", {"co-diamond", "paw", "claw"},
              [](const Graph&) { return true; }, L::cdpawclaw_shape);
    {
      LemmaSpec s;
      s.id = "thm_acyclic";
      s.title = "forest with forest bipartite complement embeds in P7, S123 or F(p,q)";
      s.kind = LemmaKind::bipartite;
      s.bipartite_filter = L::forest_and_coforest;
      s.bipartite_conclusion = L::embeds_in_acyclic_target;
      r.push_back(std::move(s));
    }
    return r;
  }();
  return reg;
}

inline std::vector<std::string> lemma_ids() {
  std::vector<std::string> out;
  for (const auto& s : lemma_registry()) out.push_back(s.id);
  return out;
}

inline const LemmaSpec& lemma_spec(std::string_view id) {
  for (const auto& s : lemma_registry())
    if (s.id == id) return s;
  throw precondition_error("unknown lemma id '" + std::string(id) + "'");
}

namespace detail {

inline void record(LemmaReport& rep, std::string graph, std::string reason) {
  ++rep.failures;
  rep.passed = false;
  if (rep.counterexamples.size() < max_reported_counterexamples)
    rep.counterexamples.push_back({std::move(graph), std::move(reason)});
}

}  // namespace detail

/**
 * Enumerates the lemma's class up to `cap` vertices (total over both parts
 * for coloured statements) and checks the conclusion on each member.
 */
inline LemmaReport verify_structure_lemma(std::string_view id, int cap) {
  const LemmaSpec& s = lemma_spec(id);
  const int limit = s.kind == LemmaKind::bipartite ? bipartite_lemma_cap_limit : lemma_cap_limit;
  if (cap < 1 || cap > limit)
    throw size_limit_error("lemma cap must lie in 1.." + std::to_string(limit) + " for " + s.id);
  LemmaReport rep;
  rep.lemma = s.id;
  rep.cap = cap;
  if (s.kind == LemmaKind::bipartite) {
    BipartiteEnumerator e(ClassSpec{}, BipartiteCaps{}, s.bipartite_filter);
    for (const auto& [name, t] : detail::lemma::acyclic_targets())
      if (!s.bipartite_filter(t)) detail::record(rep, to_line(t), name + " is not a forest with forest bipartite complement");
    for (int n = 0; n <= cap; ++n) {
      std::size_t count = 0;
      for (int na = std::max(0, n - bipartite_enumeration_cap); na <= std::min(n, bipartite_enumeration_cap); ++na) {
        for (const auto& h : e.level(na, n - na)) {
          ++count;
          if (auto why = s.bipartite_conclusion(h)) detail::record(rep, to_line(h), *why);
        }
      }
      rep.counts.push_back(count);
      rep.checked.push_back(count);
    }
    return rep;
  }
  ClassEnumerator e(s.spec(), Caps{}, s.filter);
  for (int n = 0; n <= cap; ++n) {
    const auto& level = e.level(n);
    rep.counts.push_back(level.size());
    std::size_t checked = 0;
    if (s.kind == LemmaKind::per_graph) {
      for (const auto& g : level) {
        if (!s.hypothesis(g)) continue;
        ++checked;
        if (auto why = s.conclusion(g)) detail::record(rep, to_graph6(g), *why);
      }
    }
    rep.checked.push_back(checked);
  }
  if (s.kind == LemmaKind::finiteness) {
    if (cap > s.bound) {
      if (rep.counts[static_cast<std::size_t>(s.bound + 1)] != 0)
        for (const auto& g : e.level(s.bound + 1)) detail::record(rep, to_graph6(g), "member above the bound");
    } else {
      rep.notes.push_back("cap does not exceed the bound " + std::to_string(s.bound) + "; emptiness above it not checked");
    }
    if (cap >= s.bound) {
      const auto& top = e.level(s.bound);
      const Graph x = canonical_label(s.extremal());
      if (top.empty()) detail::record(rep, "", "no member on " + std::to_string(s.bound) + " vertices");
      else if (std::find(top.begin(), top.end(), x) == top.end())
        detail::record(rep, to_graph6(x), "extremal graph missing at the bound");
      else
        rep.notes.push_back(std::to_string(top.size()) + " member(s) at the bound, including " + to_graph6(x));
    }
  }
  return rep;
}

}  // namespace linram
