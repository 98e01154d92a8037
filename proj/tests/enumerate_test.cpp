#include <gtest/gtest.h>

#include <algorithm>

#include "linram/catalog.hpp"
#include "linram/enumerate.hpp"
#include "linram/graph6.hpp"
#include "linram/lemmas.hpp"
#include "linram/witness.hpp"
#include "oracles.hpp"

using namespace linram;

TEST(Enumerate, AllGraphCountsAgainstNaiveDedup) {
  const std::vector<std::size_t> known{1, 1, 2, 4, 11, 34, 156};
  ClassEnumerator e(ClassSpec{}, Caps{});
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(e.count(n), known[static_cast<std::size_t>(n)]) << n;
    if (n >= 1) { EXPECT_EQ(oracle::naive_classes(n, [](const oracle::Adj&) { return true; }).size(), e.count(n)) << n; }
  }
  EXPECT_EQ(e.count(7), 1044U);
  EXPECT_EQ(e.count(8), 12346U);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_class(ClassSpec{}, 4).size(), 11U);
  EXPECT_EQ(enumerate_class(ClassSpec({complete(3)}), 3).size(), 3U);
  EXPECT_EQ(enumerate_class(ClassSpec({path(3)}), 4).size(), 5U);
  EXPECT_THROW(enumerate_class(ClassSpec{}, enumeration_cap + 1), size_limit_error);
}

TEST(Enumerate, RestrictedCountsAgainstNaiveDedup) {
  const std::vector<std::vector<Graph>> classes{
      {complete(3)}, {path(3)}, {claw(), complement(claw())}, {parse_graph_name("2K2"), cycle(4)}, {diamond(), paw()}};
  for (const auto& hs : classes) {
    ClassEnumerator e(ClassSpec(hs), Caps{});
    for (int n = 1; n <= 6; ++n) {
      const auto want = oracle::naive_classes(n, [&](const oracle::Adj& m) { return oracle::in_class(oracle::to_graph(m), hs); });
      ASSERT_EQ(e.count(n), want.size()) << to_graph6(hs.front()) << " n=" << n;
    }
  }
}

TEST(Enumerate, CapsAgainstNaiveDedup) {
  ClassEnumerator e(ClassSpec({claw()}), Caps{2, 3});
  for (int n = 1; n <= 6; ++n) {
    const auto want = oracle::naive_classes(n, [](const oracle::Adj& m) {
      return oracle::clique_number(m) <= 2 && oracle::independence_number(m) <= 3 && oracle::in_class(oracle::to_graph(m), {claw()});
    });
    ASSERT_EQ(e.count(n), want.size()) << n;
  }
}

TEST(Enumerate, SoundnessUpTo8) {
  const std::vector<Graph> hs{claw(), complement(claw())};
  ClassEnumerator e(ClassSpec(hs), Caps{3, 3});
  for (int n = 1; n <= 8; ++n) {
    std::set<std::uint64_t> seen;
    for (const auto& g : e.level(n)) {
      ASSERT_EQ(g.order(), n);
      ASSERT_TRUE(oracle::in_class(g, hs)) << to_graph6(g);
      ASSERT_LE(oracle::clique_number(g), 3);
      ASSERT_LE(oracle::independence_number(g), 3);
      ASSERT_EQ(canonical_label(g), g);
      if (n <= 7) { ASSERT_TRUE(seen.insert(oracle::canonical_code(oracle::adjacency(g))).second) << "duplicate " << to_graph6(g); }
    }
  }
}

TEST(Ramsey, Examples) {
  const auto r = ramsey_exact(ClassSpec({parse_graph_name("2K2"), cycle(4)}), 3, 3, 10);
  EXPECT_TRUE(r.saturated);
  EXPECT_EQ(r.value, 6);
  ASSERT_EQ(r.witnesses.size(), 1U);
  EXPECT_TRUE(isomorphic(r.witnesses[0], cycle(5)));

  const auto all = ramsey_exact(ClassSpec{}, 3, 3, 10);
  EXPECT_EQ(all.value, 6);
  ASSERT_EQ(all.witnesses.size(), 1U);
  EXPECT_TRUE(isomorphic(all.witnesses[0], cycle(5)));

  const auto cc = ramsey_exact(ClassSpec({claw(), complement(claw())}), 4, 4, 10);
  EXPECT_EQ(cc.value, 10);
  const Graph rook = canonical_label(rook3());
  EXPECT_NE(std::find(cc.witnesses.begin(), cc.witnesses.end(), rook), cc.witnesses.end());
}

TEST(Ramsey, Unsaturated) {
  const auto r = ramsey_exact(ClassSpec{}, 4, 4, 8);
  EXPECT_FALSE(r.saturated);
  EXPECT_EQ(r.value, 9);
  EXPECT_FALSE(r.witnesses.empty());
  EXPECT_THROW(ramsey_exact(ClassSpec{}, 1, 3, 8), precondition_error);
  EXPECT_THROW(ramsey_exact(ClassSpec{}, 3, 3, enumeration_cap + 1), size_limit_error);
}

TEST(Ramsey, MonotoneInBothParameters) {
  for (const auto& hs : std::vector<std::vector<Graph>>{{claw(), complement(claw())}, {parse_graph_name("2K2"), cycle(4)}, {diamond()}}) {
    const ClassSpec x(hs);
    int table[3][3];
    for (int p = 3; p <= 5; ++p)
      for (int q = 3; q <= 5; ++q) {
        // unsaturated cells are lower bounds; only exact cells take part
        const auto r = ramsey_exact(x, p, q, 10);
        table[p - 3][q - 3] = r.saturated ? r.value : -1;
      }
    int compared = 0;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) {
        if (table[p][q] < 0) continue;
        if (p + 1 < 3 && table[p + 1][q] >= 0) {
          EXPECT_LE(table[p][q], table[p + 1][q]);
          ++compared;
        }
        if (q + 1 < 3 && table[p][q + 1] >= 0) {
          EXPECT_LE(table[p][q], table[p][q + 1]);
          ++compared;
        }
      }
    EXPECT_GE(compared, 2);
  }
}

TEST(Ramsey, AtLeastOneMoreThanEveryWitness) {
  for (const auto& f : theorem_formulas()) {
    if (f.bipartite) continue;
    const ClassSpec x = f.spec();
    for (int a = 3; a <= 4; ++a)
      for (int b = 3; b <= 4; ++b) {
        const auto w = witness_lower(f.id, a, b);
        if (!w.verified) continue;
        const auto r = ramsey_exact(x, a, b, 10);
        EXPECT_GE(r.value, 1 + w.graph.order()) << f.id << " " << a << "," << b;
      }
  }
}

TEST(BipartiteRamsey, Examples) {
  const ClassSpec p2p3({parse_graph_name("P2+P3")});
  const auto r = bipartite_ramsey_exact(p2p3, 2, 2, 6);
  EXPECT_EQ(r.value, 4);
  EXPECT_TRUE(r.saturated);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), canonical_bipartite(bipartite_matching(3))), r.witnesses.end());
  EXPECT_EQ(bipartite_ramsey_exact(ClassSpec{}, 1, 1, 4).value, 1);
  EXPECT_EQ(bipartite_ramsey_exact(p2p3, 2, 3, 6).value, 6);
  EXPECT_THROW(bipartite_ramsey_exact(ClassSpec{}, 2, 2, bipartite_enumeration_cap + 1), size_limit_error);
}

// the unrestricted bipartite Ramsey levels, checked against all labelled graphs
TEST(BipartiteRamsey, GoodLevelsMatchLabelledSearch) {
  for (int p = 2; p <= 3; ++p)
    for (int q = 2; q <= 3; ++q) {
      BipartiteEnumerator e(ClassSpec{}, BipartiteCaps{p - 1, q - 1});
      for (int n = 1; n <= 4; ++n) {
        bool any = false;
        const int cells = n * n;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells) && !any; ++code) {
          BipartiteGraph g(n, n);
          for (int c = 0; c < cells; ++c)
            if ((code >> c) & 1U) g.add_edge(c / n, c % n);
          any = oracle::biclique_number(g) < p && oracle::co_biclique_number(g) < q;
        }
        EXPECT_EQ(!e.level(n, n).empty(), any) << p << "," << q << " n=" << n;
      }
    }
}

TEST(BipartiteEnumerate, CountsAgainstColouredDedup) {
  // coloured isomorphism classes by brute force: minimise over both part permutations
  for (int na = 1; na <= 3; ++na)
    for (int nb = 1; nb <= 3; ++nb) {
      std::set<std::uint64_t> classes;
      const int cells = na * nb;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
        std::vector<int> pa(static_cast<std::size_t>(na)), pb(static_cast<std::size_t>(nb));
        std::iota(pa.begin(), pa.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
          std::iota(pb.begin(), pb.end(), 0);
          do {
            std::uint64_t c = 0;
            for (int a = 0; a < na; ++a)
              for (int b = 0; b < nb; ++b)
                if ((code >> (pa[static_cast<std::size_t>(a)] * nb + pb[static_cast<std::size_t>(b)])) & 1U) c |= std::uint64_t{1} << (a * nb + b);
            best = std::min(best, c);
          } while (std::next_permutation(pb.begin(), pb.end()));
        } while (std::next_permutation(pa.begin(), pa.end()));
        classes.insert(best);
      }
      BipartiteEnumerator e(ClassSpec{}, BipartiteCaps{});
      EXPECT_EQ(e.level(na, nb).size(), classes.size()) << na << "x" << nb;
    }
}

// ---------------------------------------------------------------------------
// lemma harness

TEST(Lemmas, RegistryIsComplete) {
  const auto ids = lemma_ids();
  for (const char* id : {"lem_k4", "lem_finite", "lem_k4_d", "lem_cd_bipartite", "lem_finite_d", "lem_split_k4", "lem_2k2_k3",
                         "claim_y1", "claim_y2", "claim_y3", "claim_y4", "claim_y5", "lem_p4c4coclaw", "lem_cdpawclaw", "thm_acyclic"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  EXPECT_THROW(lemma_spec("lem_nope"), precondition_error);
}

TEST(Lemmas, K4LemmaAt8) {
  const auto r = verify_structure_lemma("lem_k4", 8);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.failures, 0U);
  std::size_t checked = 0;
  for (auto c : r.checked) checked += c;
  EXPECT_GT(checked, 0U);
}

TEST(Lemmas, FinitenessAt10) {
  for (const char* id : {"lem_finite", "lem_finite_d"}) {
    const auto r = verify_structure_lemma(id, 10);
    EXPECT_TRUE(r.passed) << id;
    ASSERT_EQ(r.counts.size(), 11U);
    EXPECT_GE(r.counts[9], 1U) << id;
    EXPECT_EQ(r.counts[10], 0U) << id;
  }
}

TEST(Lemmas, FinitenessBelowBoundOnlyNotes) {
  const auto r = verify_structure_lemma("lem_finite", 8);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Lemmas, AcyclicAt8) {
  const auto r = verify_structure_lemma("thm_acyclic", 8);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.failures, 0U);
}

TEST(Lemmas, EveryLemmaAt8) {
  for (const auto& id : lemma_ids()) {
    const auto r = verify_structure_lemma(id, 8);
    EXPECT_TRUE(r.passed) << id;
    EXPECT_EQ(r.counterexamples.size(), 0U) << id;
  }
}

TEST(Lemmas, CapLimits) {
  EXPECT_THROW(verify_structure_lemma("lem_k4", 0), size_limit_error);
  EXPECT_THROW(verify_structure_lemma("lem_k4", lemma_cap_limit + 1), size_limit_error);
}

// the conclusions must be able to fail: feed graphs outside the hypothesis
TEST(Lemmas, ConclusionsRejectBadGraphs) {
  const auto& k4 = lemma_spec("lem_k4");
  EXPECT_TRUE(k4.conclusion(complete(3)).has_value());
  const auto& cd = lemma_spec("lem_cd_bipartite");
  EXPECT_TRUE(cd.conclusion(path(6)).has_value());
  EXPECT_FALSE(cd.conclusion(disjoint_union(complete_bipartite(2, 3), Graph(1))).has_value());
  const auto& acyclic = lemma_spec("thm_acyclic");
  EXPECT_TRUE(acyclic.bipartite_conclusion(BipartiteGraph::from_two_colourable(path(9))).has_value());
}

TEST(Lemmas, AcyclicTargetsAreForestsBothWays) {
  for (const auto& [name, t] : detail::lemma::acyclic_targets()) {
    EXPECT_TRUE(is_forest(t.to_graph())) << name;
    EXPECT_TRUE(is_forest(t.bipartite_complement().to_graph())) << name;
  }
}
