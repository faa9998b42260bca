#include <gtest/gtest.h>

#include <cmath>

#include "degbound/closed_forms.hpp"

using namespace degbound;

TEST(ClosedForms, FamilyTableAgreesEverywhere) {
  const auto rows = family_table(2, 200);
  EXPECT_EQ(rows.size(), 199u * 3u + 198u);
  for (const auto& r : rows) EXPECT_LE(r.max_relative_error, 1e-12) << r.family << r.order;
}

TEST(ClosedForms, CycleAziIsEightTimesGa) {
  for (const auto& r : family_table(3, 200)) {
    if (r.family != "C") continue;
    EXPECT_NEAR(r.evaluated.at(IndexId::AZI), 8.0 * r.order, 1e-12 * 8.0 * r.order);
    EXPECT_NEAR(r.evaluated.at(IndexId::GA), r.order, 1e-12 * r.order);
  }
}

TEST(ClosedForms, CompleteAndStarRows) {
  for (int n = 3; n <= 50; ++n) {
    const auto k = complete_closed_form(n);
    EXPECT_NEAR(k.at(IndexId::GA), n * (n - 1) / 2.0, 1e-12);
    EXPECT_NEAR(k.at(IndexId::X), n * (n - 1) / (2.0 * std::sqrt(2.0 * (n - 1))), 1e-12 * n * n);
    const int leaves = n - 1;
    const auto s = star_closed_form(leaves);
    EXPECT_NEAR(s.at(IndexId::ABC), leaves * std::sqrt((leaves - 1.0) / leaves), 1e-12 * n);
  }
}

TEST(ClosedForms, EdgeIsHandled) {
  const auto p2 = path_closed_form(2);
  EXPECT_FALSE(p2.defined(IndexId::AZI));
  EXPECT_DOUBLE_EQ(p2.at(IndexId::GA), 1.0);
  EXPECT_THROW(family_table(1, 5), std::invalid_argument);
  EXPECT_THROW(family_table(3, 201), std::invalid_argument);
}
