#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "linram/graph.hpp"

namespace linram {

/// Canonical labelling: `graph` is the input relabelled by `labeling`
/// (old vertex v becomes labeling[v]). Isomorphic inputs (with equal colour
/// multisets, colour-preserving) give identical `graph`.
template <std::size_t W>
struct CanonicalForm {
  BasicGraph<W> graph;
  std::vector<int> labeling;
};

namespace detail {

template <std::size_t W>
class Canonizer {
 public:
  using Row = BitSet<W>;
  using Cells = std::vector<Row>;

  Canonizer(const BasicGraph<W>& g, const std::vector<int>* colours) : g_(g), n_(g.order()) {
    Cells start;
    if (colours && !colours->empty()) {
      std::vector<int> values(colours->begin(), colours->end());
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      for (int c : values) {
        Row cell;
        for (int v = 0; v < n_; ++v)
          if ((*colours)[static_cast<std::size_t>(v)] == c) cell.set(v);
        start.push_back(cell);
      }
    } else if (n_ > 0) {
      start.push_back(g.vertices());
    }
    start_ = std::move(start);
  }

  CanonicalForm<W> run() {
    if (n_ == 0) return {g_, {}};
    Cells cells = start_;
    refine(cells);
    std::vector<int> path;
    search(cells, path);
    CanonicalForm<W> out;
    out.labeling = best_perm_;
    out.graph = g_.relabeled(best_perm_);
    return out;
  }

 private:
  void refine(Cells& cells) const {
    std::size_t s = 0;
    while (s < cells.size()) {
      bool split = false;
      const Row splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].count() <= 1) continue;
        int counts[Row::capacity + 1];
        int lo = Row::capacity, hi = -1;
        std::vector<int> members;
        cells[c].for_each([&](int v) {
          const int k = (g_.neighbours(v) & splitter).count();
          counts[v] = k;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
          members.push_back(v);
        });
        if (lo == hi) continue;
        Cells parts;
        for (int k = lo; k <= hi; ++k) {
          Row part;
          for (int v : members)
            if (counts[v] == k) part.set(v);
          if (part.any()) parts.push_back(part);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
        split = true;
        break;
      }
      s = split ? 0 : s + 1;
    }
  }

  std::vector<std::uint64_t> key_of(const std::vector<int>& perm) const {
    std::vector<std::uint64_t> key(static_cast<std::size_t>(n_) * W, 0);
    for (int v = 0; v < n_; ++v) {
      Row r;
      g_.neighbours(v).for_each([&](int u) { r.set(perm[static_cast<std::size_t>(u)]); });
      const auto base = static_cast<std::size_t>(perm[static_cast<std::size_t>(v)]) * W;
      for (std::size_t i = 0; i < W; ++i) key[base + i] = r.word(i);
    }
    return key;
  }

  // Returns the depth to unwind to; a node at depth d keeps going when the result is >= d.
  int search(const Cells& cells, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    std::size_t target = cells.size();
    int smallest = Row::capacity + 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const int k = cells[c].count();
      if (k > 1 && k < smallest) {
        smallest = k;
        target = c;
      }
    }
    if (target == cells.size()) return leaf(cells, path);

    std::vector<int> tried;
    std::vector<int> children;
    cells[target].for_each([&](int v) { children.push_back(v); });
    for (int v : children) {
      if (!tried.empty() && equivalent_to_tried(v, tried, path)) continue;
      tried.push_back(v);
      Cells next = cells;
      Row rest = cells[target];
      rest.reset(v);
      Row single;
      single.set(v);
      next[target] = single;
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
      refine(next);
      path.push_back(v);
      const int r = search(next, path);
      path.pop_back();
      if (r < depth) return r;
    }
    return depth;
  }

  int leaf(const Cells& cells, const std::vector<int>& path) {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i)
      perm[static_cast<std::size_t>(cells[i].first())] = static_cast<int>(i);
    auto key = key_of(perm);
    if (best_perm_.empty()) {
      first_key_ = best_key_ = std::move(key);
      first_perm_ = best_perm_ = perm;
      first_path_ = best_path_ = path;
      return static_cast<int>(path.size());
    }
    if (key == first_key_) return record(perm, first_perm_, first_path_, path);
    if (key == best_key_) return record(perm, best_perm_, best_path_, path);
    if (key > best_key_) {
      best_key_ = std::move(key);
      best_perm_ = perm;
      best_path_ = path;
    }
    return static_cast<int>(path.size());
  }

  int record(const std::vector<int>& perm, const std::vector<int>& other_perm,
             const std::vector<int>& other_path, const std::vector<int>& path) {
    std::vector<int> inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(other_perm[static_cast<std::size_t>(v)])] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      gamma[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
    automorphisms_.push_back(std::move(gamma));
    std::size_t common = 0;
    while (common < path.size() && common < other_path.size() && path[common] == other_path[common])
      ++common;
    return static_cast<int>(common);
  }

  bool equivalent_to_tried(int v, const std::vector<int>& tried, const std::vector<int>& path) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int p : path)
        if (gamma[static_cast<std::size_t>(p)] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x), b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (int t : tried)
      if (find(t) == root) return true;
    return false;
  }

  const BasicGraph<W>& g_;
  int n_;
  Cells start_;
  std::vector<std::uint64_t> first_key_, best_key_;
  std::vector<int> first_perm_, best_perm_, first_path_, best_path_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

template <std::size_t W>
CanonicalForm<W> canonical_form(const BasicGraph<W>& g) {
  return detail::Canonizer<W>(g, nullptr).run();
}

/// Colour-preserving canonical form; colour classes occupy consecutive label
/// ranges in increasing colour order.
template <std::size_t W>
CanonicalForm<W> canonical_form(const BasicGraph<W>& g, const std::vector<int>& colours) {
  if (static_cast<int>(colours.size()) != g.order())
    throw precondition_error("canonical_form: one colour per vertex required");
  return detail::Canonizer<W>(g, &colours).run();
}

/// The canonical representative alone; equal iff isomorphic.
template <std::size_t W>
BasicGraph<W> canonical_label(const BasicGraph<W>& g) {
  return canonical_form(g).graph;
}

template <std::size_t W>
bool isomorphic(const BasicGraph<W>& g, const BasicGraph<W>& h) {
  return g.order() == h.order() && g.edge_count() == h.edge_count() &&
         canonical_label(g) == canonical_label(h);
}

}  // namespace linram
