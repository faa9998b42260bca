#include <gtest/gtest.h>

#include "support/property_checks.hpp"

namespace {

void expect_ok(const props::Outcome& o) {
  EXPECT_EQ(o.cases, props::kCases);
  EXPECT_EQ(o.failures, 0) << o.name << ": " << o.first_failure;
}

}  // namespace

TEST(Properties, Linearity) { expect_ok(props::linearity()); }
TEST(Properties, IsomorphismInvariance) { expect_ok(props::isomorphism_invariance()); }
TEST(Properties, RegularClosedForms) { expect_ok(props::regular_closed_forms()); }
TEST(Properties, Graph6RoundTrip) { expect_ok(props::graph6_round_trip()); }
TEST(Properties, EnumerationDeterminism) { expect_ok(props::enumeration_determinism()); }

TEST(Properties, SeedsAreReproducible) {
  const auto a = props::linearity(99), b = props::linearity(99);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.cases, b.cases);
}
