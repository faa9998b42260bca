#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "degbound/audit.hpp"
#include "degbound/catalog.hpp"
#include "degbound/enumerate.hpp"
#include "degbound/graph6.hpp"

using namespace degbound;

namespace {

const BoundSpec& bound(const char* id) {
  const BoundSpec* b = find_bound(id);
  if (!b) throw std::runtime_error(std::string("missing bound ") + id);
  return *b;
}

const std::vector<GraphProfile>& small_population() {
  static const std::vector<GraphProfile> pop = [] {
    const auto graphs = enumerate_connected_range(2, 7, {}, false, 4);
    return make_profiles(graphs, 4);
  }();
  return pop;
}

std::string canon(const Graph& g) { return to_graph6(canonical_graph(g)); }

}  // namespace

TEST(Catalog, IdsAreUniqueAndWellFormed) {
  std::set<std::string> ids;
  for (const auto& b : builtin_catalog()) {
    EXPECT_TRUE(ids.insert(b.id).second) << b.id;
    EXPECT_FALSE(b.citation.empty()) << b.id;
    EXPECT_FALSE(b.statement.empty()) << b.id;
    if (!b.is_chain() && !b.lhs.is_chromatic()) EXPECT_NE(b.lhs.index(), b.rhs) << b.id;
    if (!b.is_chain()) {
      // Corollaries in the minimum degree must require delta >= 2.
      if (b.coeff.uses_min_degree()) EXPECT_GE(b.pre.delta_min, 2) << b.id;
    }
  }
  for (const char* id : {"T1L", "T1U", "C3L", "C3U", "C4", "EXT-3(i)", "EXT-4", "C6", "T5-(9)U",
                         "C7-(14)", "T6L", "C8", "T7-(21)U", "C9-(26)"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Catalog, Selection) {
  EXPECT_EQ(select_bounds("all").size(), builtin_catalog().size());
  const auto pair = select_bounds("T1");
  ASSERT_EQ(pair.size(), 2u);
  EXPECT_EQ(pair[0].id, "T1L");
  EXPECT_EQ(pair[1].id, "T1U");
  EXPECT_EQ(select_bounds("T6L, C8").size(), 2u);
  EXPECT_THROW(select_bounds("T99"), std::invalid_argument);
}

TEST(EvaluateBound, PaperEqualityCases) {
  const auto t1 = evaluate_bound(bound("T1L"), make_family(FamilyId::path(2)));
  EXPECT_EQ(t1.verdict, Verdict::equality);
  EXPECT_NEAR(t1.lhs_value, 1.0, 1e-15);
  EXPECT_NEAR(t1.rhs_side_value, 1.0, 1e-15);

  const auto t4 = evaluate_bound(bound("T4U"), make_family(FamilyId::cycle(3)));
  EXPECT_EQ(t4.verdict, Verdict::equality);
  EXPECT_NEAR(t4.lhs_value, 3.0 / std::sqrt(2.0), 1e-14);
  EXPECT_LE(std::abs(t4.margin), 1e-9);

  const auto t6 = evaluate_bound(bound("T6L"), make_family(FamilyId::star(8)));
  EXPECT_EQ(t6.verdict, Verdict::equality);
  EXPECT_NEAR(t6.lhs_value, 4096.0 / 343.0, 1e-12);
  EXPECT_NEAR(t6.rhs_side_value, 4096.0 / 343.0, 1e-12);
}

TEST(EvaluateBound, AziOverM2StarUpperFailsOnTriangle) {
  const auto c = evaluate_bound(bound("T7-(21)U"), make_family(FamilyId::complete(3)));
  EXPECT_EQ(c.verdict, Verdict::violated);
  EXPECT_NEAR(c.lhs_value, 24.0, 1e-12);
  EXPECT_NEAR(c.rhs_side_value, 6.0, 1e-12);
}

TEST(EvaluateBound, SkipsAndDomain) {
  // P2 has n = 2 and an undefined AZI.
  const Graph p2 = make_family(FamilyId::path(2));
  EXPECT_EQ(evaluate_bound(bound("T6L"), p2).verdict, Verdict::precondition_skipped);
  EXPECT_EQ(evaluate_bound(bound("C1"), make_family(FamilyId::path(4))).verdict,
            Verdict::precondition_skipped);
  EXPECT_EQ(evaluate_bound(bound("T1L"), Graph(4, {{0, 1}, {2, 3}})).verdict,
            Verdict::precondition_skipped);
  // AZI is undefined on K2 components; the bound is skipped, not failed.
  BoundSpec loose = bound("T6L");
  loose.pre.n_min = 2;
  EXPECT_EQ(evaluate_bound(loose, p2).verdict, Verdict::domain_skipped);
}

TEST(EvaluateBound, MolecularExclusions) {
  const Graph k14 = make_family(FamilyId::star(4));
  const Graph t = make_family(FamilyId::double_star_t());
  EXPECT_EQ(evaluate_bound(bound("EXT-3(i)"), k14).verdict, Verdict::precondition_skipped);
  EXPECT_EQ(evaluate_bound(bound("EXT-3(i)"), t).verdict, Verdict::precondition_skipped);
  // With the exclusions removed both are genuine counterexamples.
  BoundSpec bare = bound("EXT-3(i)");
  bare.pre.exclusions.clear();
  EXPECT_EQ(evaluate_bound(bare, k14).verdict, Verdict::violated);
  EXPECT_EQ(evaluate_bound(bare, t).verdict, Verdict::violated);
}

TEST(EvaluateBound, StrictEqualityIsFlagged) {
  BoundSpec s = bound("T4U");
  s.strict = true;
  const auto c = evaluate_bound(s, make_family(FamilyId::cycle(3)));
  EXPECT_EQ(c.verdict, Verdict::equality);
  EXPECT_TRUE(c.strictness_conflict);
}

TEST(EqualityFamily, Membership) {
  EXPECT_TRUE(check_equality_family(bound("C1"), make_family(FamilyId::cycle(6))));
  EXPECT_TRUE(check_equality_family(bound("T1U"), make_family(FamilyId::complete(5))));
  EXPECT_FALSE(check_equality_family(bound("T6L"), make_family(FamilyId::star(7))));
  EXPECT_TRUE(check_equality_family(bound("T6L"), make_family(FamilyId::star(8))));
}

TEST(Audit, LowerGaOverRandicOnSmallGraphs) {
  const auto r = audit(bound("T2L"), small_population());
  EXPECT_EQ(r.verdict, AuditVerdict::confirmed_sharp);
  EXPECT_EQ(r.equality_witnesses, std::vector<std::string>{canon(make_family(FamilyId::path(2)))});
  EXPECT_TRUE(r.family_consistent());
  EXPECT_EQ(r.counts.checked + r.counts.skipped, static_cast<int>(small_population().size()));
}

TEST(Audit, PinnedDiscrepancies) {
  const auto up = audit(bound("T7-(21)U"), small_population());
  EXPECT_EQ(up.verdict, AuditVerdict::violated);
  const auto& v = up.violation_witnesses;
  EXPECT_NE(std::find(v.begin(), v.end(), "Bw"), v.end());

  const auto c9 = audit(bound("C9-(26)"), small_population());
  EXPECT_EQ(c9.verdict, AuditVerdict::holds_not_sharp_in_population);
  // On C_n: AZI = 8n against 8 * n/4.
  for (int n = 3; n <= 7; ++n) {
    const auto c = evaluate_bound(bound("C9-(26)"), make_family(FamilyId::cycle(n)));
    EXPECT_EQ(c.verdict, Verdict::holds);
    EXPECT_NEAR(c.lhs_value, 8.0 * n, 1e-12);
    EXPECT_NEAR(c.rhs_side_value, 2.0 * n, 1e-12);
  }
}

TEST(Audit, ChainTakesTightestLink) {
  const auto r = audit(bound("C4"), small_population());
  EXPECT_EQ(r.counts.violated, 0);
  EXPECT_NE(r.verdict, AuditVerdict::violated);
}

TEST(Audit, VacuousPopulation) {
  const std::vector<GraphProfile> none;
  EXPECT_EQ(audit(bound("T1L"), none).verdict, AuditVerdict::vacuous);
}

TEST(Audit, ReportIsOrderIndependent) {
  auto shuffled = small_population();
  std::reverse(shuffled.begin(), shuffled.end());
  for (const char* id : {"T1U", "C9-(24)", "T7-(21)U"}) {
    const auto a = audit(bound(id), small_population());
    const auto b = audit(bound(id), shuffled);
    EXPECT_EQ(a.equality_witnesses, b.equality_witnesses) << id;
    EXPECT_EQ(a.violation_witnesses, b.violation_witnesses) << id;
    ASSERT_EQ(a.min_margin.has_value(), b.min_margin.has_value());
    if (a.min_margin) EXPECT_EQ(a.min_margin->witness_graph6, b.min_margin->witness_graph6);
  }
}
