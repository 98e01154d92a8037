#include <gtest/gtest.h>

#include "linram/crosscheck.hpp"
#include "linram/formulas.hpp"
#include "linram/witness.hpp"

using namespace linram;

TEST(Formula, Examples) {
  EXPECT_EQ(formula_value("thm_claw_coclaw", 3, 5), 11);
  EXPECT_EQ(formula_value("thm_claw_coclaw", 4, 4), 10);
  EXPECT_EQ(formula_value("thm_claw_coclaw", 3, 3), 6);
  EXPECT_EQ(formula_value("thm_diamond", 3, 3), 6);
  EXPECT_EQ(formula_value("thm_diamond", 4, 5), 10);
  EXPECT_EQ(formula_value("thm_diamond", 3, 6), 11);
  EXPECT_EQ(formula_value("thm_2k2_c4", 4, 7), 11);
  EXPECT_EQ(formula_value("thm_2k2_diamond", 3, 4), 8);
  EXPECT_EQ(formula_value("thm_2k2_diamond", 4, 4), 10);
  EXPECT_EQ(formula_value("thm_2k2_diamond", 5, 4), 10);
  EXPECT_EQ(formula_value("thm_2k2_diamond", 4, 3), 7);
  EXPECT_EQ(formula_value("thm_p4c4coclaw", 4, 5), 10);
  EXPECT_EQ(formula_value("thm_cdpawclaw", 3, 5), 7);
  EXPECT_EQ(formula_value("thm_cdpawclaw", 3, 3), 6);
  EXPECT_EQ(formula_value("thm_cdpawclaw", 5, 3), 9);
  EXPECT_EQ(formula_value("thm_cdpawclaw", 4, 9), 9);
  EXPECT_EQ(formula_value("thm_p2p3_bip", 2, 2), 4);
  EXPECT_EQ(formula_value("thm_p2p3_bip", 2, 3), 6);
}

TEST(Formula, Errors) {
  EXPECT_THROW(formula_value("thm_nope", 3, 3), precondition_error);
  EXPECT_THROW(formula_value("thm_diamond", 2, 3), domain_error);
  EXPECT_THROW(formula_value("thm_2k2_c4", 3, 0), domain_error);
  EXPECT_THROW(formula_value("thm_p2p3_bip", 1, 2), domain_error);
  EXPECT_NO_THROW(formula_value("thm_p2p3_bip", 2, 2));
}

TEST(Formula, Symmetry) {
  for (const char* id : {"thm_claw_coclaw", "thm_diamond", "thm_2k2_c4", "thm_p2p3_bip"})
    for (int a = 3; a <= 30; ++a)
      for (int b = 3; b <= 30; ++b) ASSERT_EQ(formula_value(id, a, b), formula_value(id, b, a)) << id << " " << a << "," << b;
  // these two are not symmetric
  EXPECT_NE(formula_value("thm_p4c4coclaw", 3, 4), formula_value("thm_p4c4coclaw", 4, 3));
  EXPECT_NE(formula_value("thm_cdpawclaw", 3, 6), formula_value("thm_cdpawclaw", 6, 3));
}

TEST(Formula, AtLeastTheSmallerParameter) {
  for (const auto& f : theorem_formulas())
    for (int a = f.min_param; a <= 40; ++a)
      for (int b = f.min_param; b <= 40; ++b) ASSERT_GE(formula_value(f.id, a, b), std::min(a, b)) << f.id;
}

TEST(Formula, ExceptionsDifferFromTheGeneralCase) {
  // every listed exception changes the value the neighbouring general rule would give
  EXPECT_NE(formula_value("thm_claw_coclaw", 4, 4), std::max((5 * 4 - 3) / 2, (5 * 4 - 3) / 2));
  EXPECT_NE(formula_value("thm_diamond", 3, 3), 2 * 3 - 1);
  EXPECT_NE(formula_value("thm_cdpawclaw", 3, 4), std::max(2 * 3, 4));
  EXPECT_NE(formula_value("thm_2k2_diamond", 5, 4), std::max((5 * 3) / 2 + 1, 5 + 4 - 1));
  for (const auto& f : theorem_formulas())
    for (const auto& [a, b] : f.exceptions) {
      EXPECT_GE(a, f.min_param) << f.id;
      EXPECT_GE(b, f.min_param) << f.id;
    }
}

TEST(Formula, Registry) {
  const auto ids = theorem_ids();
  EXPECT_EQ(ids.size(), theorem_formulas().size());
  EXPECT_EQ(theorem_formula("thm_p2p3_bip").bipartite, true);
  EXPECT_EQ(theorem_formula("thm_diamond").spec().forbidden().size(), 2U);
  EXPECT_THROW(theorem_formula("x"), precondition_error);
}

TEST(Formula, WitnessSizeIsValueMinusOne) {
  for (const auto& f : theorem_formulas())
    for (int a = f.min_param; a <= 7; ++a)
      for (int b = f.min_param; b <= 7; ++b) {
        const auto w = witness_lower(f.id, a, b);
        if (!w.verified) continue;
        ASSERT_EQ(w.size(), formula_value(f.id, a, b) - 1) << f.id << " " << a << "," << b;
      }
}

TEST(CrossCheck, SmallAgreement) {
  const auto r = cross_check("thm_2k2_c4", {3, 4}, {3, 4}, 9);
  ASSERT_EQ(r.cells.size(), 4U);
  EXPECT_EQ(r.count(CellStatus::agree), 4);
  EXPECT_TRUE(r.all_agree());
  for (const auto& c : r.cells) {
    EXPECT_TRUE(c.saturated);
    EXPECT_EQ(c.engine, c.a + c.b);
    EXPECT_FALSE(c.witnesses.empty());
  }
  const auto bip = cross_check("thm_p2p3_bip", {2, 2}, {2, 3}, 6);
  ASSERT_EQ(bip.cells.size(), 2U);
  EXPECT_TRUE(bip.all_agree());
  EXPECT_EQ(bip.cells[0].engine, 4);
  EXPECT_EQ(bip.cells[1].engine, 6);
}

TEST(CrossCheck, StatusRules) {
  // a scripted engine: saturated answers off by one, unsaturated by cap
  const Engine fake = [](const ClassSpec&, bool, int a, int b, int cap) {
    EngineResult e;
    if (a == 3) {
      e.value = a + b + (b == 4 ? 1 : 0);
      e.saturated = true;
    } else {
      e.value = cap + 1;
      e.saturated = false;
    }
    return e;
  };
  const auto r = cross_check("thm_2k2_c4", {3, 4}, {3, 4}, 7, fake);
  ASSERT_EQ(r.cells.size(), 4U);
  EXPECT_EQ(r.cells[0].status, CellStatus::agree);     // (3,3)
  EXPECT_EQ(r.cells[1].status, CellStatus::disagree);  // (3,4)
  EXPECT_EQ(r.cells[2].status, CellStatus::disagree);  // (4,3): formula 7 fits under the cap
  EXPECT_EQ(r.cells[3].status, CellStatus::skipped);   // (4,4): formula 8 beyond the cap
  EXPECT_FALSE(r.all_agree());
  EXPECT_EQ(r.count(CellStatus::skipped), 1);
  EXPECT_STREQ(to_string(CellStatus::skipped), "skipped");
}

TEST(CrossCheck, UnreachedLowerBoundsAreSkips) {
  const auto r = cross_check("thm_2k2_c4", {4, 4}, {5, 5}, 8);
  ASSERT_EQ(r.cells.size(), 1U);
  EXPECT_FALSE(r.cells[0].saturated);
  EXPECT_EQ(r.cells[0].status, CellStatus::skipped);
}

// the engine finds no (2K2, diamond)-free graph on 7 vertices with omega < 6, alpha < 3,
// while the piecewise table gives 8 there
TEST(CrossCheck, TwoK2DiamondRowBelowFour) {
  const auto r = cross_check("thm_2k2_diamond", {6, 6}, {3, 3}, 10);
  ASSERT_EQ(r.cells.size(), 1U);
  EXPECT_TRUE(r.cells[0].saturated);
  EXPECT_EQ(r.cells[0].formula, 8);
  EXPECT_EQ(r.cells[0].engine, 7);
  EXPECT_EQ(r.cells[0].status, CellStatus::disagree);
}
