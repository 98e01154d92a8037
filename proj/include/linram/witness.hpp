#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/catalog.hpp"
#include "linram/formulas.hpp"
#include "linram/invariants.hpp"

namespace linram {

/**
 * A lower-bound construction for one theorem at one parameter pair. The
 * graph is checked on construction: class membership, omega < a and
 * alpha < b (or b(G) < p and a(G) < q). `verified` is false, with the reason
 * in `problem`, when no known construction attains the formula
 * value minus one.
 */
struct WitnessRecipe {
  std::string theorem;
  int a = 0;
  int b = 0;
  std::string construction;
  bool bipartite = false;
  Graph graph;
  BipartiteGraph bip;
  bool verified = false;
  std::string problem;

  /// Vertices for graphs, vertices per part for bipartite witnesses.
  int size() const { return bipartite ? bip.size_a() : graph.order(); }
};

namespace witness {

inline Graph c5_blowup(int b) {
  std::vector<int> sizes(5, (b - 1) / 2);
  if (b % 2 == 0) {
    sizes.assign(5, b / 2 - 1);
    sizes[0] = sizes[1] = b / 2;
  }
  return blowup(cycle(5), sizes);
}

/// Clique of size c and independent set of size i with a matching between them.
inline Graph split_matching(int c, int i) {
  Graph g(c + i);
  for (int u = 0; u < c; ++u)
    for (int v = u + 1; v < c; ++v) g.add_edge(u, v);
  for (int k = 0; k < std::min(c, i); ++k) g.add_edge(k, c + k);
  return g;
}

/// Three disjoint triangles a_i b_i c_i with a_i b_j, b_i c_j, c_i a_j for i < j, plus isolated vertices.
inline Graph three_triangles(int isolated) {
  Graph g(9 + isolated);
  for (int t = 0; t < 3; ++t) {
    g.add_edge(3 * t, 3 * t + 1);
    g.add_edge(3 * t + 1, 3 * t + 2);
    g.add_edge(3 * t, 3 * t + 2);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      g.add_edge(3 * i, 3 * j + 1);
      g.add_edge(3 * i + 1, 3 * j + 2);
      g.add_edge(3 * i + 2, 3 * j);
    }
  return g;
}

/// Two triangles joined by a matching, plus K_{m,m} whose sides attach to one vertex of each triangle.
inline Graph two_triangles(int m) {
  // T1 = x1 y1 z1 (0..2), T2 = x2 y2 z2 (3..5)
  Graph g(6 + 2 * m);
  for (int t = 0; t < 2; ++t) {
    g.add_edge(3 * t, 3 * t + 1);
    g.add_edge(3 * t + 1, 3 * t + 2);
    g.add_edge(3 * t, 3 * t + 2);
  }
  g.add_edge(0, 4);
  g.add_edge(1, 5);
  g.add_edge(2, 3);
  for (int i = 0; i < m; ++i) {
    const int x = 6 + i;
    g.add_edge(x, 1);
    g.add_edge(x, 4);
    for (int j = 0; j < m; ++j) g.add_edge(x, 6 + m + j);
    const int y = 6 + m + i;
    g.add_edge(y, 0);
    g.add_edge(y, 3);
  }
  return g;
}

/// Odd b: (b-1)/2 copies of C5; even b: (b-2)/2 copies of C5 and a K2.
inline Graph claw_triangle_free(int b) {
  Graph g = multiple(cycle(5), (b - 1) / 2);
  if (b % 2 == 0) g = disjoint_union(g, complete(2));
  return g;
}

inline Graph dominated(const Graph& g, int k) { return k == 0 ? g : graph_join(g, complete(k)); }

struct Candidate {
  std::string name;
  Graph graph;
};

}  // namespace witness

namespace detail {

inline void verify_recipe(WitnessRecipe& r, const TheoremFormula& f) {
  const ClassSpec x = f.spec();
  r.verified = false;
  if (r.bipartite) {
    if (auto v = x.violation(r.bip.to_graph())) {
      r.problem = "contains forbidden " + to_graph6(x.forbidden()[v->index]);
      return;
    }
    if (biclique_number(r.bip) >= r.a) {
      r.problem = "biclique number reaches p";
      return;
    }
    if (co_biclique_number(r.bip) >= r.b) {
      r.problem = "co-biclique number reaches q";
      return;
    }
  } else {
    if (auto v = x.violation(r.graph)) {
      r.problem = "contains forbidden " + to_graph6(x.forbidden()[v->index]);
      return;
    }
    if (clique_number(r.graph) >= r.a) {
      r.problem = "clique number reaches a";
      return;
    }
    if (independence_number(r.graph) >= r.b) {
      r.problem = "independence number reaches b";
      return;
    }
  }
  const int want = f.value(r.a, r.b) - 1;
  if (r.size() != want) {
    r.problem = "size " + std::to_string(r.size()) + " differs from value - 1 = " + std::to_string(want);
    return;
  }
  r.problem.clear();
  r.verified = true;
}

inline std::vector<witness::Candidate> candidates_2k2_diamond(int a, int b) {
  using namespace witness;
  const int five_halves = floor_div(5 * (b - 1), 2) + 1;
  std::vector<Candidate> named;
  std::vector<Candidate> rest;
  auto split = [&] { return Candidate{"split clique a-1 matched to independent b-1", split_matching(a - 1, b - 1)}; };
  auto blow = [&] { return Candidate{"C5 blowup", c5_blowup(b)}; };
  auto three = [&] { return Candidate{"three-triangle configuration", three_triangles(std::max(0, b - 4))}; };
  auto two = [&] { return Candidate{"two triangles with K_{b-3,b-3}", two_triangles(b - 3)}; };
  if (a == 3) {
    named.push_back(blow());
  } else if (a == 4) {
    if (b == 3) named.push_back(two());
    else if (b == 4) named.push_back(three());
    else named.push_back(blow());
  } else if (a == 5 && b == 4) {
    named.push_back(three());
  } else if (a + b - 1 >= five_halves) {
    named.push_back(split());
  } else {
    named.push_back(blow());
  }
  if (a >= 4 && b >= 4) rest.push_back(three());
  if (a >= 4) rest.push_back(two());
  rest.push_back(blow());
  if (a >= 5) rest.push_back(split());
  named.insert(named.end(), rest.begin(), rest.end());
  return named;
}

inline std::vector<witness::Candidate> candidates_graph(const std::string& id, int a, int b) {
  using namespace witness;
  if (id == "thm_claw_coclaw") {
    if (a == 4 && b == 4) return {{"rook3", rook3()}};
    if (b > a) return {{"disjoint C5s (claw, K3)-free", claw_triangle_free(b)}};
    return {{"complement of disjoint C5s", complement(claw_triangle_free(a))}};
  }
  if (id == "thm_diamond") {
    if (a == 3 && b == 3) return {{"C5", cycle(5)}};
    if ((a == 4 || a == 5) && (b == 4 || b == 5)) return {{"rook3", rook3()}};
    if (b > a) return {{"K_{b-1,b-1}", complete_bipartite(b - 1, b - 1)}};
    return {{"2K_{a-1}", multiple(complete(a - 1), 2)}};
  }
  if (id == "thm_2k2_c4") {
    // C5 on 0..4, W independent anticomplete to it, U clique complete to both
    const int nw = b - 3, nu = a - 3;
    const Graph g = dominated(disjoint_union(cycle(5), edgeless(nw)), nu);
    return {{"C5 with clique U and independent W", g}};
  }
  if (id == "thm_2k2_diamond") return candidates_2k2_diamond(a, b);
  if (id == "thm_p4c4coclaw")
    return {{"(b-1)K2 with a-3 dominating vertices", dominated(multiple(complete(2), b - 1), a - 3)}};
  if (id == "thm_cdpawclaw") {
    if (a == 3 && b == 3) return {{"C5", cycle(5)}};
    if (a == 3 && b >= 4 && b <= 6) return {{"C6", cycle(6)}};
    if (b == 3) return {{"2K_{a-1}", multiple(complete(a - 1), 2)}};
    if (2 * a >= b)
      return {{"co-((a-1)K2) + K1", disjoint_union(complement(multiple(complete(2), a - 1)), edgeless(1))}};
    return {{"edgeless on b-1 vertices", edgeless(b - 1)}};
  }
  if (id == "thm_p3free") return {{"(b-1)K_{a-1}", multiple(complete(a - 1), b - 1)}};
  if (id == "thm_cop3free") return {{"complement of (b-1)K_{a-1}", complement(multiple(complete(b - 1), a - 1))}};
  throw precondition_error("no witness construction for '" + id + "'");
}

/// B0 complete to W, W2 complete to B, B1 W1 an induced matching of size 2q - 1 (q >= p).
inline BipartiteGraph p2p3_extremal(int p, int q) {
  const int side = 2 * q + p - 3;
  const int m = 2 * q - 1;
  BipartiteGraph g(side, side);
  // A = B0 (0..p-3) then B1; B = W1 (0..m-1) then W2
  for (int i = 0; i < p - 2; ++i)
    for (int w = 0; w < side; ++w) g.add_edge(i, w);
  for (int w = m; w < side; ++w)
    for (int i = 0; i < side; ++i) g.add_edge(i, w);
  for (int k = 0; k < m; ++k) g.add_edge(p - 2 + k, k);
  return g;
}

}  // namespace detail

/// The extremal construction for theorem `id` at (a, b), or (p, q) for bipartite theorems.
inline WitnessRecipe witness_lower(std::string_view id, int a, int b) {
  const auto& f = theorem_formula(id);
  formula_value(id, a, b);  // range check
  WitnessRecipe r;
  r.theorem = f.id;
  r.a = a;
  r.b = b;
  r.bipartite = f.bipartite;
  if (f.bipartite) {
    if (b >= a) {
      r.construction = "B0/W2 dominating with induced matching of size 2q-1";
      r.bip = detail::p2p3_extremal(a, b);
    } else {
      r.construction = "bipartite complement of the swapped construction";
      r.bip = detail::p2p3_extremal(b, a).bipartite_complement();
    }
    detail::verify_recipe(r, f);
    return r;
  }
  const auto cands = detail::candidates_graph(f.id, a, b);
  std::string first_problem;
  for (const auto& c : cands) {
    if (c.graph.order() > Graph::max_order) continue;
    r.construction = c.name;
    r.graph = c.graph;
    detail::verify_recipe(r, f);
    if (r.verified) return r;
    if (first_problem.empty()) first_problem = c.name + ": " + r.problem;
  }
  r.construction = cands.front().name;
  r.graph = cands.front().graph;
  detail::verify_recipe(r, f);
  r.problem = "no construction attains value - 1; " + first_problem;
  return r;
}

}  // namespace linram
