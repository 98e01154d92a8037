#pragma once

#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "linram/error.hpp"
#include "linram/graph.hpp"

namespace linram {

/**
 * Bipartite graph with an explicit ordered split (A, B). Only cross edges
 * exist; row a holds the B-neighbourhood of A-vertex a (bit j = B-vertex j).
 * Part order is significant: swapping A and B gives a different object.
 */
class BipartiteGraph {
 public:
  static constexpr int max_part = 64;

  BipartiteGraph() = default;

  BipartiteGraph(int na, int nb) : nb_(nb) {
    if (na < 0 || nb < 0 || na > max_part || nb > max_part)
      throw size_limit_error("bipartite part sizes exceed 64");
    rows_.assign(static_cast<std::size_t>(na), 0);
  }

  BipartiteGraph(int na, int nb, std::initializer_list<std::pair<int, int>> edges)
      : BipartiteGraph(na, nb) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  int size_a() const { return static_cast<int>(rows_.size()); }
  int size_b() const { return nb_; }
  int order() const { return size_a() + size_b(); }

  std::uint64_t mask_a() const { return low_bits(size_a()); }
  std::uint64_t mask_b() const { return low_bits(size_b()); }

  /// B-neighbourhood of A-vertex a.
  std::uint64_t row(int a) const { return rows_[static_cast<std::size_t>(a)]; }

  /// A-neighbourhood of B-vertex b.
  std::uint64_t column(int b) const {
    std::uint64_t c = 0;
    for (int a = 0; a < size_a(); ++a)
      if ((rows_[static_cast<std::size_t>(a)] >> b) & 1U) c |= std::uint64_t{1} << a;
    return c;
  }

  bool adjacent(int a, int b) const { return (row(a) >> b) & 1U; }

  void add_edge(int a, int b) {
    check(a, b);
    rows_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
  }
  void remove_edge(int a, int b) {
    check(a, b);
    rows_[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b);
  }
  void set_edge(int a, int b, bool on) { on ? add_edge(a, b) : remove_edge(a, b); }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto r : rows_) c += static_cast<std::size_t>(std::popcount(r));
    return c;
  }

  /// Appends an A-vertex with B-neighbourhood `nbrs`.
  BipartiteGraph with_a(std::uint64_t nbrs) const {
    if (size_a() >= max_part) throw size_limit_error("part A exceeds 64");
    BipartiteGraph g = *this;
    g.rows_.push_back(nbrs & mask_b());
    return g;
  }

  /// Appends a B-vertex with A-neighbourhood `nbrs`.
  BipartiteGraph with_b(std::uint64_t nbrs) const {
    if (size_b() >= max_part) throw size_limit_error("part B exceeds 64");
    BipartiteGraph g = *this;
    const int b = g.nb_++;
    for (int a = 0; a < size_a(); ++a)
      if ((nbrs >> a) & 1U) g.rows_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    return g;
  }

  /// Same vertices, a joined to b exactly when they are not joined here.
  BipartiteGraph bipartite_complement() const {
    BipartiteGraph g = *this;
    for (auto& r : g.rows_) r = ~r & mask_b();
    return g;
  }

  /// Parts exchanged: B becomes the first part.
  BipartiteGraph swapped() const {
    BipartiteGraph g(size_b(), size_a());
    for (int b = 0; b < size_b(); ++b) g.rows_[static_cast<std::size_t>(b)] = column(b);
    return g;
  }

  /// Induced subgraph on the listed A- and B-vertices, in the given order.
  BipartiteGraph induced(const std::vector<int>& as, const std::vector<int>& bs) const {
    BipartiteGraph g(static_cast<int>(as.size()), static_cast<int>(bs.size()));
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (adjacent(as[i], bs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }

  BipartiteGraph induced_masks(std::uint64_t ma, std::uint64_t mb) const {
    return induced(bits_of(ma), bits_of(mb));
  }

  /// Relabelled copy: A-vertex a becomes perm_a[a], B-vertex b becomes perm_b[b].
  BipartiteGraph relabeled(const std::vector<int>& perm_a, const std::vector<int>& perm_b) const {
    BipartiteGraph g(size_a(), size_b());
    for (int a = 0; a < size_a(); ++a)
      for (int b = 0; b < size_b(); ++b)
        if (adjacent(a, b))
          g.add_edge(perm_a[static_cast<std::size_t>(a)], perm_b[static_cast<std::size_t>(b)]);
    return g;
  }

  /// Underlying graph: A-vertex a is vertex a, B-vertex b is vertex size_a() + b.
  Graph to_graph() const {
    if (order() > Graph::max_order) throw size_limit_error("bipartite graph too large for Graph");
    Graph g(order());
    for (int a = 0; a < size_a(); ++a)
      for (int b = 0; b < size_b(); ++b)
        if (adjacent(a, b)) g.add_edge(a, size_a() + b);
    return g;
  }

  /// Bipartite graph from `g` with A = vertices whose bit is set in `part_a`.
  static BipartiteGraph from_graph(const Graph& g, std::uint64_t part_a) {
    std::vector<int> as, bs;
    for (int v = 0; v < g.order(); ++v) ((part_a >> v) & 1U ? as : bs).push_back(v);
    BipartiteGraph out(static_cast<int>(as.size()), static_cast<int>(bs.size()));
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = 0; j < as.size(); ++j)
        if (g.adjacent(as[i], as[j])) throw precondition_error("part A is not independent");
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (g.adjacent(bs[i], bs[j])) throw precondition_error("part B is not independent");
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (g.adjacent(as[i], bs[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
  }

  /// Bipartite graph from a two-colourable graph; A is the colour class of vertex 0
  /// in each component.
  static BipartiteGraph from_two_colourable(const Graph& g) {
    auto colour = two_colouring(g);
    if (g.order() > 0 && colour.empty()) throw precondition_error("graph is not bipartite");
    std::uint64_t part_a = 0;
    for (int v = 0; v < g.order(); ++v)
      if (colour[static_cast<std::size_t>(v)] == 0) part_a |= std::uint64_t{1} << v;
    return from_graph(g, part_a);
  }

  bool operator==(const BipartiteGraph&) const = default;
  auto operator<=>(const BipartiteGraph& o) const {
    if (auto c = size_a() <=> o.size_a(); c != 0) return c;
    if (auto c = size_b() <=> o.size_b(); c != 0) return c;
    return rows_ <=> o.rows_;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ (static_cast<std::uint64_t>(size_a()) << 8) ^
                      static_cast<std::uint64_t>(size_b());
    for (auto r : rows_) {
      h ^= r;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  static std::vector<int> bits_of(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  }

  static std::uint64_t low_bits(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }

 private:
  void check(int a, int b) const {
    if (a < 0 || a >= size_a() || b < 0 || b >= size_b())
      throw precondition_error("bipartite vertex out of range");
  }

  int nb_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct BipartiteHash {
  std::size_t operator()(const BipartiteGraph& g) const { return g.hash(); }
};

/**
 * Text form `B <nA> <nB> <hex>`: each A-row is written as a fixed-width hex
 * number of ceil(nB/4) digits (bit j = B-vertex j, most significant digit
 * first), rows concatenated in A order. The hex field is omitted when there
 * are no cross pairs.
 */
inline std::string to_line(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "B " << g.size_a() << ' ' << g.size_b();
  const int width = (g.size_b() + 3) / 4;
  if (g.size_a() > 0 && width > 0) {
    out << ' ';
    static constexpr char digits[] = "0123456789abcdef";
    for (int a = 0; a < g.size_a(); ++a)
      for (int d = width - 1; d >= 0; --d) out << digits[(g.row(a) >> (4 * d)) & 0xF];
  }
  return out.str();
}

inline BipartiteGraph from_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string tag;
  long na = -1, nb = -1;
  std::string hex;
  if (!(in >> tag) || tag != "B" || !(in >> na >> nb))
    throw parse_error("bipartite line must start with 'B <nA> <nB>'");
  in >> hex;
  std::string extra;
  if (in >> extra) throw parse_error("trailing data in bipartite line");
  if (na < 0 || nb < 0 || na > BipartiteGraph::max_part || nb > BipartiteGraph::max_part)
    throw parse_error("bipartite part sizes out of range");
  BipartiteGraph g(static_cast<int>(na), static_cast<int>(nb));
  const std::size_t width = static_cast<std::size_t>((nb + 3) / 4);
  const std::size_t expected = width * static_cast<std::size_t>(na);
  if (hex.size() != expected)
    throw parse_error("bipartite hex payload has " + std::to_string(hex.size()) +
                      " digits, expected " + std::to_string(expected));
  for (long a = 0; a < na; ++a) {
    std::uint64_t r = 0;
    for (std::size_t d = 0; d < width; ++d) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(
          hex[static_cast<std::size_t>(a) * width + d])));
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else throw parse_error("invalid hex digit in bipartite line");
      r = (r << 4) | static_cast<std::uint64_t>(v);
    }
    if (r & ~g.mask_b()) throw parse_error("bipartite row has bits beyond part B");
    for (int b = 0; b < nb; ++b)
      if ((r >> b) & 1U) g.add_edge(static_cast<int>(a), b);
  }
  return g;
}

/// Every pair in as x bs adjacent (complete) or every pair non-adjacent.
inline bool is_complete_to(const BipartiteGraph& g, std::uint64_t as, std::uint64_t bs) {
  for (int a : BipartiteGraph::bits_of(as))
    if ((g.row(a) & bs) != bs) return false;
  return true;
}
inline bool is_anticomplete_to(const BipartiteGraph& g, std::uint64_t as, std::uint64_t bs) {
  for (int a : BipartiteGraph::bits_of(as))
    if (g.row(a) & bs) return false;
  return true;
}

}  // namespace linram
