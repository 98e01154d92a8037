#pragma once

#include <cctype>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linram/bipartite.hpp"
#include "linram/error.hpp"
#include "linram/graph.hpp"
#include "linram/graph6.hpp"

namespace linram {

inline Graph edgeless(int n) { return Graph(n); }

inline Graph complete(int n) {
  if (n < 1) throw precondition_error("K_n needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  if (n < 1) throw precondition_error("P_n needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw precondition_error("C_n needs n >= 3");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

/// K_{s,t}: the s-side first.
inline Graph complete_bipartite(int s, int t) {
  if (s < 0 || t < 0 || s + t < 1) throw precondition_error("K_{s,t} needs s, t >= 0, s + t >= 1");
  Graph g(s + t);
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
  return g;
}

inline Graph claw() { return complete_bipartite(1, 3); }
inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

/// Claw with one edge subdivided once and another twice; vertex 0 is the centre.
inline Graph s123() { return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 5}, {2, 4}, {4, 6}}); }

/**
 * F_{p,q}: white centres c1, c2 and black vertices x_1..x_p, y_1..y_q, z.
 * c1 sees every x_i; c2 sees x_p and every y_j; z is isolated.
 * Vertex order: x_1..x_p, y_1..y_q, z, c1, c2.
 */
inline Graph f_graph(int p, int q) {
  if (p < 1 || q < 0) throw precondition_error("F_{p,q} needs p >= 1, q >= 0");
  const int c1 = p + q + 1, c2 = p + q + 2;
  Graph g(p + q + 3);
  for (int i = 0; i < p; ++i) g.add_edge(i, c1);
  g.add_edge(p - 1, c2);
  for (int j = 0; j < q; ++j) g.add_edge(p + j, c2);
  return g;
}

/// K3 x K3: vertex 3r + c, adjacent when sharing a row or a column.
inline Graph rook3() {
  Graph g(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 == v / 3 || u % 3 == v % 3) g.add_edge(u, v);
  return g;
}

/// k disjoint copies.
inline Graph multiple(const Graph& g, int k) {
  Graph out(0);
  for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Kneser graph with the b-subset (elements 0..a-1) of every vertex.
struct KneserGraph {
  WideGraph graph;
  std::vector<std::vector<int>> subsets;
};

inline KneserGraph kneser(int a, int b) {
  if (b < 1 || a < b) throw precondition_error("kneser(a, b) needs a >= b >= 1");
  if (binomial(a, b) > WideGraph::max_order)
    throw size_limit_error("kneser(" + std::to_string(a) + ", " + std::to_string(b) +
                           ") has more than 128 vertices");
  KneserGraph k;
  std::vector<int> s(static_cast<std::size_t>(b));
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    k.subsets.push_back(s);
    int i = b - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == a - b + i) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < b; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::vector<std::uint64_t> masks;
  for (const auto& sub : k.subsets) {
    std::uint64_t m = 0;
    for (int e : sub) m |= std::uint64_t{1} << e;
    masks.push_back(m);
  }
  k.graph = WideGraph(static_cast<int>(masks.size()));
  for (std::size_t u = 0; u < masks.size(); ++u)
    for (std::size_t v = u + 1; v < masks.size(); ++v)
      if (!(masks[u] & masks[v])) k.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
  return k;
}

inline Graph petersen() { return resize_words<1>(kneser(5, 2).graph); }

/// Replaces vertex v by an independent set of sizes[v] vertices (in vertex order).
template <std::size_t W>
BasicGraph<W> blowup(const BasicGraph<W>& g, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != g.order())
    throw precondition_error("blowup: one size per vertex required");
  std::vector<int> start;
  int total = 0;
  for (int s : sizes) {
    if (s < 0) throw precondition_error("blowup: sizes must be non-negative");
    start.push_back(total);
    total += s;
  }
  if (total > BasicGraph<W>::max_order) throw size_limit_error("blowup exceeds the vertex cap");
  BasicGraph<W> out(total);
  for (auto [u, v] : g.edges())
    for (int i = 0; i < sizes[static_cast<std::size_t>(u)]; ++i)
      for (int j = 0; j < sizes[static_cast<std::size_t>(v)]; ++j)
        out.add_edge(start[static_cast<std::size_t>(u)] + i, start[static_cast<std::size_t>(v)] + j);
  return out;
}

/// The eleven graphs on four vertices with their conventional names.
inline std::vector<std::pair<std::string, Graph>> four_vertex_graphs() {
  return {
      {"K4", complete(4)},          {"co-K4", edgeless(4)},
      {"diamond", diamond()},       {"co-diamond", complement(diamond())},
      {"C4", cycle(4)},             {"2K2", complement(cycle(4))},
      {"paw", paw()},               {"co-paw", complement(paw())},
      {"claw", claw()},             {"co-claw", complement(claw())},
      {"P4", path(4)},
  };
}

Graph parse_graph_name(std::string_view name);

namespace detail {

inline int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 4) throw parse_error("bad number in graph name '" + std::string(whole) + "'");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("bad number in graph name '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

inline Graph parse_atom(std::string_view atom, std::string_view whole) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const std::string l = lower(atom);
  if (l == "claw") return claw();
  if (l == "paw") return paw();
  if (l == "diamond") return diamond();
  if (l == "s123") return s123();
  if (l == "rook3") return rook3();
  if (l == "petersen") return petersen();
  if (l == "bull") return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}});
  if (l == "house") return complement(path(5));

  std::size_t i = 0;
  while (i < atom.size() && std::isalpha(static_cast<unsigned char>(atom[i]))) ++i;
  const std::string family(atom.substr(0, i));
  std::string_view rest = atom.substr(i);
  const auto us = rest.find('_');
  const bool two = us != std::string_view::npos;
  try {
    const int x = parse_int(two ? rest.substr(0, us) : rest, whole);
    if (!two) {
      if (family == "K") return complete(x);
      if (family == "P") return path(x);
      if (family == "C") return cycle(x);
      if (family == "E") return edgeless(x);
    } else {
      const int y = parse_int(rest.substr(us + 1), whole);
      if (family == "K") return complete_bipartite(x, y);
      if (family == "F") return f_graph(x, y);
      if (family == "KG") {
        auto k = kneser(x, y);
        if (k.graph.order() > Graph::max_order) throw size_limit_error("Kneser graph exceeds 64 vertices");
        return resize_words<1>(k.graph);
      }
    }
  } catch (const precondition_error& e) {
    throw parse_error("invalid parameters in graph name '" + std::string(whole) + "': " + e.what());
  }
  throw parse_error("unknown graph name '" + std::string(whole) + "'");
}

inline Graph parse_term(std::string_view term, std::string_view whole) {
  bool co = false;
  if (term.starts_with("co-")) {
    co = true;
    term.remove_prefix(3);
  }
  std::size_t i = 0;
  while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
  const int mult = i == 0 ? 1 : parse_int(term.substr(0, i), whole);
  term.remove_prefix(i);
  if (term.empty() || mult < 1) throw parse_error("malformed graph name '" + std::string(whole) + "'");
  Graph atom = (term.starts_with("(") && term.ends_with(")"))
                   ? parse_graph_name(term.substr(1, term.size() - 2))
                   : parse_atom(term, whole);
  if (static_cast<long long>(atom.order()) * mult > Graph::max_order)
    throw parse_error("graph name '" + std::string(whole) + "' exceeds 64 vertices");
  Graph g = multiple(atom, mult);
  return co ? complement(g) : g;
}

}  // namespace detail

/**
 * Graph from a catalog name. Grammar: terms joined by '+', each term is an
 * optional "co-" prefix, an optional multiplicity and an atom, e.g. 2K2,
 * co-claw, P2+P3, co-(3K2). Atoms: K<n>, P<n>, C<n>, E<n> (edgeless),
 * K<s>_<t>, F<p>_<q>, KG<a>_<b>, S123, rook3, petersen, claw, paw, diamond,
 * bull, house.
 */
inline Graph parse_graph_name(std::string_view name) {
  if (name.empty()) throw parse_error("empty graph name");
  // Split on top-level '+' only.
  std::vector<std::string_view> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '(') ++depth;
    if (name[i] == ')') --depth;
    if (depth < 0) throw parse_error("unbalanced parentheses in '" + std::string(name) + "'");
    if (name[i] == '+' && depth == 0) {
      terms.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw parse_error("unbalanced parentheses in '" + std::string(name) + "'");
  terms.push_back(name.substr(start));
  Graph g(0);
  for (auto t : terms) {
    if (t.empty()) throw parse_error("malformed graph name '" + std::string(name) + "'");
    g = disjoint_union(g, detail::parse_term(t, name));
    if (g.order() > Graph::max_order) throw parse_error("graph exceeds 64 vertices");
  }
  return g;
}

/// Family plus integer parameters, e.g. ("P", {4}), ("K", {3, 3}), ("S123", {}).
inline Graph named_graph(std::string_view family, const std::vector<int>& params = {}) {
  std::string name(family);
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i] < 0) throw parse_error("negative parameter for '" + std::string(family) + "'");
    name += (i ? "_" : "") + std::to_string(params[i]);
  }
  return parse_graph_name(name);
}

/// Catalog name first, then graph6 (an optional "g6:" prefix forces graph6).
inline Graph resolve_graph(std::string_view text) {
  if (text.starts_with("g6:")) return from_graph6<1>(text.substr(3));
  try {
    return parse_graph_name(text);
  } catch (const parse_error& name_error) {
    try {
      return from_graph6<1>(text);
    } catch (const error&) {
      throw parse_error(std::string(name_error.what()) + " (and not valid graph6)");
    }
  }
}

// ---------------------------------------------------------------------------
// Coloured bipartite members of the catalog (A = black, B = white).

inline BipartiteGraph bipartite_path(int n) { return BipartiteGraph::from_two_colourable(path(n)); }

inline BipartiteGraph bipartite_s123() { return BipartiteGraph::from_two_colourable(s123()); }

/// F_{p,q} with the p + q + 1 black vertices as part A and the two centres as part B.
inline BipartiteGraph bipartite_f(int p, int q) {
  const Graph g = f_graph(p, q);
  return BipartiteGraph::from_graph(g, BipartiteGraph::low_bits(p + q + 1));
}

inline BipartiteGraph bipartite_matching(int k) {
  BipartiteGraph g(k, k);
  for (int i = 0; i < k; ++i) g.add_edge(i, i);
  return g;
}

inline BipartiteGraph bipartite_complete(int s, int t) {
  return BipartiteGraph(s, t).bipartite_complement();
}

/// P2 + P3 with the centre of the P3 in part A (2 black, 3 white).
inline BipartiteGraph bipartite_p2p3() { return BipartiteGraph(2, 3, {{0, 0}, {1, 1}, {1, 2}}); }

}  // namespace linram
