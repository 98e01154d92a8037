#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "linram/catalog.hpp"
#include "linram/class_spec.hpp"
#include "linram/error.hpp"

namespace linram {

/// A closed-form exact Ramsey value together with the class it applies to.
struct TheoremFormula {
  std::string id;
  std::string title;
  std::vector<std::string> forbidden;  // catalog names
  bool bipartite = false;
  int min_param = 3;
  /// Parameter pairs that are stated as exceptions to the general case.
  std::vector<std::pair<int, int>> exceptions;
  int (*value)(int, int) = nullptr;

  ClassSpec spec() const {
    std::vector<Graph> hs;
    for (const auto& n : forbidden) hs.push_back(parse_graph_name(n));
    return ClassSpec(hs, title);
  }
};

namespace detail {

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

inline int value_claw_coclaw(int a, int b) {
  if (a == 4 && b == 4) return 10;
  return std::max(floor_div(5 * a - 3, 2), floor_div(5 * b - 3, 2));
}

inline int value_diamond(int a, int b) {
  if ((a == 4 || a == 5) && (b == 4 || b == 5)) return 10;
  if (a == 3 && b == 3) return 6;
  return std::max(2 * a - 1, 2 * b - 1);
}

inline int value_2k2_c4(int a, int b) { return a + b; }

inline int value_2k2_diamond(int a, int b) {
  const int five_halves = floor_div(5 * (b - 1), 2) + 1;
  if (a == 3) return five_halves;
  if (a == 4) {
    if (b == 3) return 7;
    if (b == 4) return 10;
    return five_halves;
  }
  if (a == 5 && b == 4) return 10;
  return std::max(five_halves, a + b - 1);
}

inline int value_p4c4coclaw(int a, int b) { return a + 2 * b - 4; }

inline int value_cdpawclaw(int a, int b) {
  if (a == 3 && b == 3) return 6;
  if (a == 3 && b >= 4 && b <= 6) return 7;
  if (b == 3) return 2 * a - 1;
  return std::max(2 * a, b);
}

inline int value_p2p3(int p, int q) { return std::max(p, q) + p + q - 2; }

inline int value_p3(int a, int b) { return (a - 1) * (b - 1) + 1; }

}  // namespace detail

/// Every formula the library can evaluate, in a fixed order.
inline const std::vector<TheoremFormula>& theorem_formulas() {
  static const std::vector<TheoremFormula> all = {
      {"thm_claw_coclaw", "(claw, co-claw)-free", {"claw", "co-claw"}, false, 3, {{4, 4}},
       detail::value_claw_coclaw},
      {"thm_diamond", "(diamond, co-diamond)-free", {"diamond", "co-diamond"}, false, 3,
       {{3, 3}, {4, 4}, {4, 5}, {5, 4}, {5, 5}}, detail::value_diamond},
      {"thm_2k2_c4", "(2K2, C4)-free", {"2K2", "C4"}, false, 3, {}, detail::value_2k2_c4},
      {"thm_2k2_diamond", "(2K2, diamond)-free", {"2K2", "diamond"}, false, 3, {{4, 3}, {4, 4}, {5, 4}},
       detail::value_2k2_diamond},
      {"thm_p4c4coclaw", "(P4, C4, co-claw)-free", {"P4", "C4", "co-claw"}, false, 3, {},
       detail::value_p4c4coclaw},
      {"thm_cdpawclaw", "(co-diamond, paw, claw)-free", {"co-diamond", "paw", "claw"}, false, 3,
       {{3, 3}, {3, 4}, {3, 5}, {3, 6}}, detail::value_cdpawclaw},
      {"thm_p2p3_bip", "P2+P3-free bipartite", {"P2+P3"}, true, 2, {}, detail::value_p2p3},
      {"thm_p3free", "P3-free", {"P3"}, false, 2, {}, detail::value_p3},
      {"thm_cop3free", "co-P3-free", {"co-P3"}, false, 2, {}, detail::value_p3},
  };
  return all;
}

inline const TheoremFormula& theorem_formula(std::string_view id) {
  for (const auto& f : theorem_formulas())
    if (f.id == id) return f;
  throw precondition_error("unknown theorem id '" + std::string(id) + "'");
}

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& f : theorem_formulas()) ids.push_back(f.id);
  return ids;
}

/// The closed-form value of R_X(a, b) (or R^b_X(p, q)). Parameters below the
/// stated range raise domain_error.
inline int formula_value(std::string_view id, int a, int b) {
  const auto& f = theorem_formula(id);
  if (a < f.min_param || b < f.min_param)
    throw domain_error(f.id + " is stated for parameters >= " + std::to_string(f.min_param));
  if (a > 1000 || b > 1000) throw domain_error(f.id + ": parameters above 1000 are not supported");
  return f.value(a, b);
}

}  // namespace linram
