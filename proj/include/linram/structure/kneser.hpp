#pragma once

#include <algorithm>
#include <vector>

#include "linram/catalog.hpp"
#include "linram/error.hpp"
#include "linram/graph.hpp"

namespace linram {

/**
 * Largest element class V_i = {vertices whose subset contains i} of an
 * induced subgraph of KG(3n, n). `labels[v]` is the subset of vertex v.
 * Returns vertex indices of `h`; ties go to the smallest element.
 */
template <std::size_t W>
std::vector<int> pigeonhole_independent_set(const BasicGraph<W>& h, const std::vector<std::vector<int>>& labels) {
  if (static_cast<int>(labels.size()) != h.order())
    throw precondition_error("pigeonhole_independent_set: every vertex needs a subset label");
  if (h.empty()) return {};
  const std::size_t n = labels.front().size();
  if (n == 0) throw precondition_error("pigeonhole_independent_set: labels must be non-empty");
  const int ground = static_cast<int>(3 * n);
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(ground));
  for (int v = 0; v < h.order(); ++v) {
    const auto& s = labels[static_cast<std::size_t>(v)];
    if (s.size() != n) throw precondition_error("pigeonhole_independent_set: labels differ in size");
    for (int e : s) {
      if (e < 0 || e >= ground) throw precondition_error("pigeonhole_independent_set: label element out of range");
      classes[static_cast<std::size_t>(e)].push_back(v);
    }
  }
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v) {
      const auto& a = labels[static_cast<std::size_t>(u)];
      const auto& b = labels[static_cast<std::size_t>(v)];
      const bool disjoint = std::none_of(a.begin(), a.end(), [&](int e) { return std::find(b.begin(), b.end(), e) != b.end(); });
      if (disjoint != h.adjacent(u, v))
        throw precondition_error("pigeonhole_independent_set: adjacency does not match the labels");
    }
  std::size_t best = 0;
  for (std::size_t i = 1; i < classes.size(); ++i)
    if (classes[i].size() > classes[best].size()) best = i;
  auto& out = classes[best];
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (h.adjacent(out[i], out[j])) throw error("pigeonhole_independent_set: element class is not independent");
  if (3 * out.size() < static_cast<std::size_t>(h.order()))
    throw error("pigeonhole_independent_set: element class below |V|/3");
  return out;
}

inline std::vector<int> pigeonhole_independent_set(const KneserGraph& k) {
  return pigeonhole_independent_set(k.graph, k.subsets);
}

/// The subgraph of `k` induced by `vertices`, with labels carried along.
inline KneserGraph induced_kneser(const KneserGraph& k, const std::vector<int>& vertices) {
  KneserGraph out;
  out.graph = k.graph.induced(vertices);
  for (int v : vertices) out.subsets.push_back(k.subsets[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace linram
