#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "degbound/graph.hpp"
#include "degbound/indices.hpp"

namespace degbound {

// Index values of the extremal families written out in closed form. These do
// not go through edge_term; they are the reference the graph evaluation is
// checked against.

/// d-regular graph with m edges.
inline IndexTable regular_closed_form(double m, double d) {
  IndexTable t;
  t.set(IndexId::R, m / d);
  t.set(IndexId::H, m / d);
  t.set(IndexId::X, m / std::sqrt(2.0 * d));
  t.set(IndexId::ABC, m * std::sqrt(2.0 * d - 2.0) / d);
  t.set(IndexId::GA, m);
  if (d > 1.0) t.set(IndexId::AZI, m * std::pow(d, 6) / (8.0 * std::pow(d - 1.0, 3)));
  t.set(IndexId::M2STAR, m / (d * d));
  return t;
}

/// Star with k >= 1 leaves.
inline IndexTable star_closed_form(int leaves) {
  const double k = leaves;
  if (leaves == 1) return regular_closed_form(1.0, 1.0);
  IndexTable t;
  t.set(IndexId::R, std::sqrt(k));
  t.set(IndexId::H, 2.0 * k / (k + 1.0));
  t.set(IndexId::X, k / std::sqrt(k + 1.0));
  t.set(IndexId::ABC, std::sqrt(k * (k - 1.0)));
  t.set(IndexId::GA, 2.0 * k * std::sqrt(k) / (k + 1.0));
  t.set(IndexId::AZI, k * std::pow(k / (k - 1.0), 3));
  t.set(IndexId::M2STAR, 1.0);
  return t;
}

/// Path on n >= 2 vertices: two (1,2) edges and n-3 (2,2) edges for n >= 3.
inline IndexTable path_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("path closed form needs n >= 2");
  if (n == 2) return regular_closed_form(1.0, 1.0);
  const double inner = n - 3.0;
  IndexTable t;
  t.set(IndexId::R, std::sqrt(2.0) + inner / 2.0);
  t.set(IndexId::H, 4.0 / 3.0 + inner / 2.0);
  t.set(IndexId::X, 2.0 / std::sqrt(3.0) + inner / 2.0);
  t.set(IndexId::ABC, (n - 1.0) / std::sqrt(2.0));
  t.set(IndexId::GA, 4.0 * std::sqrt(2.0) / 3.0 + inner);
  t.set(IndexId::AZI, 8.0 * (n - 1.0));
  t.set(IndexId::M2STAR, 1.0 + inner / 4.0);
  return t;
}

inline IndexTable cycle_closed_form(int n) { return regular_closed_form(n, 2.0); }

inline IndexTable complete_closed_form(int n) {
  return regular_closed_form(n * (n - 1.0) / 2.0, n - 1.0);
}

struct FamilyRow {
  std::string family;  // "P", "C", "K" or "S"
  int order = 0;
  IndexTable formula;
  IndexTable evaluated;
  double max_relative_error = 0.0;
};

inline double relative_error(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

/// Rows for P_n, C_n, K_n and S_{1,n-1} for every order in [lo, hi]
/// (families skipped where undefined: C_n below 3).
inline std::vector<FamilyRow> family_table(int lo, int hi) {
  if (lo < 2 || hi > 200 || lo > hi) throw std::invalid_argument("family range must be within 2..200");
  std::vector<FamilyRow> rows;
  auto push = [&](std::string fam, int n, const Graph& g, IndexTable formula) {
    FamilyRow r;
    r.family = std::move(fam);
    r.order = n;
    r.formula = formula;
    r.evaluated = all_indices(g);
    for (IndexId id : kAllIndices) {
      const auto a = r.formula.get(id), b = r.evaluated.get(id);
      if (a.has_value() != b.has_value()) r.max_relative_error = INFINITY;
      else if (a) r.max_relative_error = std::max(r.max_relative_error, relative_error(*a, *b));
    }
    rows.push_back(std::move(r));
  };
  for (int n = lo; n <= hi; ++n) {
    push("P", n, make_family(FamilyId::path(n)), path_closed_form(n));
    if (n >= 3) push("C", n, make_family(FamilyId::cycle(n)), cycle_closed_form(n));
    push("K", n, make_family(FamilyId::complete(n)), complete_closed_form(n));
    push("S", n, make_family(FamilyId::star(n - 1)), star_closed_form(n - 1));
  }
  return rows;
}

}  // namespace degbound
