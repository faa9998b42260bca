#pragma once

// Seeded randomized property checks. Each returns how many cases ran and
// the first failure, so both the unit suite and the acceptance runner can
// report them.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "degbound/degbound.hpp"
#include "oracles.hpp"

namespace props {

using namespace degbound;

inline constexpr int kCases = 1000;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

inline bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline bool tables_close(const IndexTable& a, const IndexTable& b, double rel) {
  for (IndexId id : kAllIndices) {
    if (a.defined(id) != b.defined(id)) return false;
    if (a.defined(id) && !close(*a.get(id), *b.get(id), rel)) return false;
  }
  return true;
}

// Every index of a disjoint union is the sum over its components.
inline Outcome linearity(std::uint64_t seed = 20240601) {
  Outcome out{"linearity"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < kCases; ++c, ++out.cases) {
    const int n1 = std::uniform_int_distribution<int>(2, 20)(rng);
    const int n2 = std::uniform_int_distribution<int>(2, 20)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    Graph a = oracle::random_graph(rng, n1, p), b = oracle::random_graph(rng, n2, p);
    std::vector<Edge> e(a.edges().begin(), a.edges().end());
    for (auto [u, v] : b.edges()) e.emplace_back(u + n1, v + n1);
    const Graph u(n1 + n2, e);
    const auto ta = all_indices(a), tb = all_indices(b), tu = all_indices(u);
    for (IndexId id : kAllIndices) {
      const bool defined = ta.defined(id) && tb.defined(id);
      if (tu.defined(id) != defined) {
        out.fail("definedness of " + std::string(index_name(id)) + " at case " + std::to_string(c));
        break;
      }
      if (defined && !close(*tu.get(id), *ta.get(id) + *tb.get(id), 1e-12)) {
        out.fail(std::string(index_name(id)) + " not additive at case " + std::to_string(c));
        break;
      }
    }
  }
  return out;
}

// Relabeling changes neither index values nor the canonical form.
inline Outcome isomorphism_invariance(std::uint64_t seed = 20240602) {
  Outcome out{"isomorphism_invariance"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < kCases; ++c, ++out.cases) {
    const int n = std::uniform_int_distribution<int>(1, kCanonicalMaxOrder)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Graph g = oracle::random_graph(rng, n, p);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabeled(perm);
    if (!tables_close(all_indices(g), all_indices(h), 1e-12)) {
      out.fail("index values differ at case " + std::to_string(c) + " (" + to_graph6(g) + ")");
      continue;
    }
    if (canonical_form(g) != canonical_form(h))
      out.fail("canonical forms differ at case " + std::to_string(c) + " (" + to_graph6(g) + ")");
  }
  return out;
}

// d-regular graphs with m edges match the closed forms and the direct sums.
inline Outcome regular_closed_forms(std::uint64_t seed = 20240603) {
  Outcome out{"regular_closed_forms"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < kCases; ++c, ++out.cases) {
    int n = std::uniform_int_distribution<int>(3, 60)(rng);
    int d = std::uniform_int_distribution<int>(2, n - 1)(rng);
    if (n % 2 == 1 && d % 2 == 1) --d;
    const Graph g = make_family(FamilyId::regular(n, d));
    if (!is_regular(g, d) || g.size() != n * d / 2) {
      out.fail("construction of " + std::to_string(d) + "-regular order " + std::to_string(n));
      continue;
    }
    const auto closed = regular_closed_form(g.size(), d);
    const auto direct = oracle::indices(g);
    const IndexTable eval = all_indices(g);
    if (!tables_close(eval, closed, 1e-12)) {
      out.fail("closed form mismatch for n=" + std::to_string(n) + " d=" + std::to_string(d));
      continue;
    }
    if (!close(*eval.get(IndexId::ABC), direct.ABC, 1e-12) ||
        !close(*eval.get(IndexId::AZI), *direct.AZI, 1e-12) ||
        !close(*eval.get(IndexId::M2STAR), direct.M2STAR, 1e-12))
      out.fail("direct sum mismatch for n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
  return out;
}

inline Outcome graph6_round_trip(std::uint64_t seed = 20240604) {
  Outcome out{"graph6_round_trip"};
  std::mt19937_64 rng(seed);
  for (int c = 0; c < kCases; ++c, ++out.cases) {
    const int n = std::uniform_int_distribution<int>(1, kGraph6MaxOrder)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Graph g = oracle::random_graph(rng, n, p);
    const std::string s = to_graph6(g);
    const Graph back = parse_graph6(s);
    if (!(back == g) || to_graph6(back) != s) out.fail("round trip failed for " + s);
  }
  return out;
}

// Repeated enumeration with any worker count gives the same sorted list.
inline Outcome enumeration_determinism(std::uint64_t seed = 20240605) {
  Outcome out{"enumeration_determinism"};
  std::mt19937_64 rng(seed);
  std::map<std::tuple<int, int, bool, bool>, std::vector<std::string>> reference;
  for (int c = 0; c < kCases; ++c, ++out.cases) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const int dmin = std::uniform_int_distribution<int>(0, 3)(rng);
    const bool mol = std::bernoulli_distribution(0.3)(rng);
    const bool reg = std::bernoulli_distribution(0.2)(rng);
    const int jobs = std::uniform_int_distribution<int>(1, 8)(rng);
    EnumerationSpec spec{n, {}, false};
    if (dmin > 0) spec.filters.delta_min = dmin;
    spec.filters.molecular = mol;
    spec.filters.regular_only = reg;
    std::vector<std::string> got;
    for (const auto& g : enumerate_connected(spec, jobs)) got.push_back(to_graph6(g));
    auto key = std::make_tuple(n, dmin, mol, reg);
    auto it = reference.find(key);
    if (it == reference.end()) {
      std::vector<std::string> ref;
      for (const auto& g : enumerate_connected(spec, 1)) ref.push_back(to_graph6(g));
      it = reference.emplace(key, std::move(ref)).first;
    }
    if (got != it->second || !std::is_sorted(got.begin(), got.end()))
      out.fail("order " + std::to_string(n) + " with " + std::to_string(jobs) + " jobs differs");
  }
  return out;
}

inline std::vector<Outcome> run_all() {
  return {linearity(), isomorphism_invariance(), regular_closed_forms(), graph6_round_trip(),
          enumeration_determinism()};
}

}  // namespace props
