#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "linram/enumerate.hpp"
#include "linram/formulas.hpp"
#include "linram/graph6.hpp"

namespace linram {

enum class CellStatus { agree, disagree, skipped };

inline const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::agree: return "agree";
    case CellStatus::disagree: return "disagree";
    case CellStatus::skipped: return "skipped";
  }
  return "?";
}

struct CrossCheckCell {
  int a = 0;
  int b = 0;
  int formula = 0;
  int engine = 0;  // exact when saturated, else a lower bound
  bool saturated = false;
  CellStatus status = CellStatus::skipped;
  std::vector<std::size_t> counts;
  std::vector<std::string> witnesses;  // graph6, or bipartite lines
};

struct CrossCheckReport {
  std::string theorem;
  int cap = 0;
  std::vector<CrossCheckCell> cells;

  int count(CellStatus s) const {
    int c = 0;
    for (const auto& cell : cells) c += cell.status == s ? 1 : 0;
    return c;
  }
  bool all_agree() const { return count(CellStatus::disagree) == 0 && count(CellStatus::skipped) == 0; }
};

/// Engine output in serialisable form: graph6 witnesses, or bipartite lines.
struct EngineResult {
  int value = 0;
  bool saturated = false;
  std::vector<std::size_t> counts;
  std::vector<std::string> witnesses;
};

inline EngineResult run_engine(const ClassSpec& x, bool bipartite, int p, int q, int cap) {
  EngineResult e;
  if (bipartite) {
    const auto r = bipartite_ramsey_exact(x, p, q, cap);
    e.value = r.value;
    e.saturated = r.saturated;
    e.counts = r.counts;
    for (const auto& w : r.witnesses) e.witnesses.push_back(to_line(w));
  } else {
    const auto r = ramsey_exact(x, p, q, cap);
    e.value = r.value;
    e.saturated = r.saturated;
    e.counts = r.counts;
    for (const auto& w : r.witnesses) e.witnesses.push_back(to_graph6(w));
  }
  return e;
}

using Engine = std::function<EngineResult(const ClassSpec&, bool, int, int, int)>;

struct Range {
  int lo = 0;
  int hi = 0;
};

/**
 * Compares the closed-form value with the exhaustive engine on every cell. An
 * unsaturated run is a disagreement when the engine already found good graphs
 * on at least `formula` vertices, and a skip otherwise.
 */
inline CrossCheckReport cross_check(std::string_view id, Range as, Range bs, int cap, const Engine& engine = run_engine) {
  const auto& f = theorem_formula(id);
  const ClassSpec x = f.spec();
  CrossCheckReport rep;
  rep.theorem = f.id;
  rep.cap = cap;
  for (int a = as.lo; a <= as.hi; ++a)
    for (int b = bs.lo; b <= bs.hi; ++b) {
      CrossCheckCell cell;
      cell.a = a;
      cell.b = b;
      cell.formula = formula_value(id, a, b);
      auto r = engine(x, f.bipartite, a, b, cap);
      cell.engine = r.value;
      cell.saturated = r.saturated;
      cell.counts = std::move(r.counts);
      cell.witnesses = std::move(r.witnesses);
      if (cell.saturated)
        cell.status = cell.engine == cell.formula ? CellStatus::agree : CellStatus::disagree;
      else
        cell.status = cell.formula <= cap ? CellStatus::disagree : CellStatus::skipped;
      rep.cells.push_back(std::move(cell));
    }
  return rep;
}

}  // namespace linram
