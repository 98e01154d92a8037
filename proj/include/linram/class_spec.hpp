#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "linram/canonical.hpp"
#include "linram/graph6.hpp"
#include "linram/subgraph.hpp"

namespace linram {

/// Evidence that a graph lies outside a class: which forbidden graph, and where.
struct Violation {
  std::size_t index = 0;
  Embedding embedding;
};

/**
 * Hereditary class given by forbidden induced subgraphs. The list is stored
 * in canonical form, deduplicated up to isomorphism, and sorted, so equal
 * classes have equal keys.
 */
class ClassSpec {
 public:
  ClassSpec() = default;

  explicit ClassSpec(const std::vector<Graph>& forbidden, std::string name = {})
      : name_(std::move(name)) {
    for (const auto& h : forbidden) {
      if (h.order() > 10)
        throw precondition_error("forbidden graphs are limited to 10 vertices");
      if (h.order() == 0) throw precondition_error("the empty graph cannot be forbidden");
      forbidden_.push_back(canonical_label(h));
    }
    std::sort(forbidden_.begin(), forbidden_.end());
    forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());
    for (const auto& h : forbidden_) matchers_.emplace_back(h);
  }

  const std::vector<Graph>& forbidden() const { return forbidden_; }
  const std::string& name() const { return name_; }
  bool unrestricted() const { return forbidden_.empty(); }

  /// Order-independent identity of the class: sorted canonical graph6 strings.
  std::string key() const {
    std::string k;
    for (const auto& h : forbidden_) {
      if (!k.empty()) k += ',';
      k += to_graph6(h);
    }
    return k.empty() ? "-" : k;
  }

  template <std::size_t W>
  std::optional<Violation> violation(const BasicGraph<W>& g) const {
    for (std::size_t i = 0; i < matchers_.size(); ++i)
      if (auto e = matchers_[i].find(g)) return Violation{i, *e};
    return std::nullopt;
  }

  /// A violation whose embedding uses vertex v; graphs built by adding v to a
  /// member of the class only need this check.
  template <std::size_t W>
  std::optional<Violation> violation_through(const BasicGraph<W>& g, int v) const {
    for (std::size_t i = 0; i < matchers_.size(); ++i)
      if (auto e = matchers_[i].find_through(g, v)) return Violation{i, *e};
    return std::nullopt;
  }

  template <std::size_t W>
  bool contains(const BasicGraph<W>& g) const {
    return !violation(g).has_value();
  }

  /// Class of complements: G is in it iff complement(G) is in this class.
  ClassSpec complemented() const {
    std::vector<Graph> hs;
    for (const auto& h : forbidden_) hs.push_back(complement(h));
    return ClassSpec(hs, name_.empty() ? std::string{} : "co-(" + name_ + ")");
  }

 private:
  std::string name_;
  std::vector<Graph> forbidden_;
  std::vector<InducedMatcher> matchers_;
};

template <std::size_t W>
bool in_class(const BasicGraph<W>& g, const ClassSpec& x) {
  return x.contains(g);
}

}  // namespace linram
