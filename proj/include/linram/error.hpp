#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace linram {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input exceeds the cap of an exact solver or of a fixed-width representation.
class size_limit_error : public error {
 public:
  using error::error;
};

/// An operation was called on an input outside its documented domain.
class precondition_error : public error {
 public:
  using error::error;
};

/// The input contains a forbidden induced subgraph; `embedding` maps the
/// forbidden graph's vertices into the input.
class class_violation : public precondition_error {
 public:
  class_violation(const std::string& what, std::vector<int> embedding)
      : precondition_error(what), embedding_(std::move(embedding)) {}

  const std::vector<int>& embedding() const noexcept { return embedding_; }

 private:
  std::vector<int> embedding_;
};

/// Malformed textual input (graph6, bipartite line, graph names).
class parse_error : public error {
 public:
  using error::error;
};

/// Theorem parameters outside the range the formula is stated for.
class domain_error : public error {
 public:
  using error::error;
};

}  // namespace linram
