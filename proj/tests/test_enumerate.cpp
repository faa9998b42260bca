#include <gtest/gtest.h>

#include <random>
#include <set>

#include "degbound/canonical.hpp"
#include "degbound/enumerate.hpp"
#include "degbound/graph6.hpp"
#include "support/oracles.hpp"

using namespace degbound;

TEST(Canonical, SmallCases) {
  const Graph a(3, {{0, 1}, {1, 2}});
  const Graph b(3, {{0, 2}, {2, 1}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_EQ(canonical_form(make_family(FamilyId::complete(3))).graph6, "Bw");
  EXPECT_EQ(canonical_form(a), canonical_form(make_family(FamilyId::star(2))));
  EXPECT_FALSE(isomorphic(a, make_family(FamilyId::complete(3))));
  EXPECT_THROW(canonical_form(make_family(FamilyId::path(11))), SizeLimitError);
}

TEST(Canonical, IsTheLexicographicMinimumOverRelabelings) {
  std::mt19937_64 rng(11);
  for (int c = 0; c < 400; ++c) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    const Graph cg = canonical_graph(g);
    EXPECT_EQ(oracle::bits(n, oracle::matrix(cg)), oracle::canonical_bits(g)) << to_graph6(g);
  }
}

TEST(Canonical, KeyRoundTrip) {
  std::mt19937_64 rng(12);
  for (int c = 0; c < 200; ++c) {
    const int n = std::uniform_int_distribution<int>(1, kCanonicalMaxOrder)(rng);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const Graph cg = canonical_graph(g);
    std::vector<std::uint64_t> rows(n, 0);
    for (auto [u, v] : cg.edges()) {
      rows[u] |= std::uint64_t{1} << v;
      rows[v] |= std::uint64_t{1} << u;
    }
    EXPECT_EQ(detail::graph_from_key(n, detail::canonical_key(n, rows.data())), cg);
  }
}

TEST(Enumerate, CountsMatchBurnside) {
  const auto expected = oracle::burnside_connected_counts(7);
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(static_cast<long long>(enumerate_connected({n, {}, false}, 4).size()), expected[n])
        << "order " << n;
  EXPECT_EQ(expected[4], 6);
  EXPECT_EQ(expected[6], 112);
  EXPECT_EQ(expected[7], 853);
}

TEST(Enumerate, ClassesMatchNaiveCanonicalization) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::string> got;
    for (const Graph& g : enumerate_connected({n, {}, false})) {
      EXPECT_TRUE(is_connected(g));
      got.push_back(oracle::canonical_bits(g));
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::naive_connected_classes(n)) << "order " << n;
  }
}

TEST(Enumerate, MinimumDegreeFilter) {
  EnumerationSpec spec{5, {}, false};
  spec.filters.delta_min = 2;
  const auto filtered = enumerate_connected(spec);
  int expected = 0;
  for (const Graph& g : enumerate_connected({5, {}, false}))
    if (min_degree(g) >= 2) ++expected;
  EXPECT_EQ(static_cast<int>(filtered.size()), expected);
  for (const Graph& g : filtered) EXPECT_GE(min_degree(g), 2);
  EXPECT_EQ(expected, 11);
}

TEST(Enumerate, MolecularAndRegularFilters) {
  EnumerationSpec spec{6, {}, false};
  spec.filters.molecular = true;
  for (const Graph& g : enumerate_connected(spec)) EXPECT_LE(max_degree(g), 4);
  spec.filters = {};
  spec.filters.regular_only = true;
  // Connected regular graphs of order 6: C6, K3,3, the prism, the octahedron, K6.
  EXPECT_EQ(enumerate_connected(spec).size(), 5u);
}

TEST(Enumerate, OutputIsSortedAndStableAcrossJobs) {
  const auto one = enumerate_connected({7, {}, false}, 1);
  const auto many = enumerate_connected({7, {}, false}, 7);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i], many[i]);
  for (std::size_t i = 1; i < one.size(); ++i) EXPECT_LT(to_graph6(one[i - 1]), to_graph6(one[i]));
}

TEST(Enumerate, Caps) {
  EXPECT_THROW(enumerate_connected({8, {}, false}), SizeLimitError);
  EXPECT_THROW(enumerate_connected({9, {}, true}), SizeLimitError);
  EXPECT_THROW(enumerate_connected({0, {}, false}), std::invalid_argument);
  const auto range = enumerate_connected_range(2, 5, {}, false, 2);
  EXPECT_EQ(range.size(), 1u + 2u + 6u + 21u);
}
