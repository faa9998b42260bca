#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degbound/catalog.hpp"
#include "degbound/errors.hpp"
#include "degbound/graph.hpp"
#include "degbound/indices.hpp"

namespace degbound {

/// Edge-level ratio f_num(a,b) / f_den(a,b), optionally squared. Evaluated
/// through `edge_term`, so it agrees with the index engine by construction.
struct RatioFn {
  IndexId numerator = IndexId::GA;
  IndexId denominator = IndexId::X;
  bool squared = false;

  std::string name() const {
    std::string s = std::string(index_name(numerator)) + "/" + std::string(index_name(denominator));
    return squared ? "(" + s + ")^2" : s;
  }
};

inline double ratio_at(const RatioFn& r, double a, double b) {
  const double den = edge_term(r.denominator, a, b);
  if (den == 0.0)
    throw DomainError(std::string(index_name(r.denominator)) + " edge term vanishes");
  const double q = edge_term(r.numerator, a, b) / den;
  return r.squared ? q * q : q;
}

inline double ratio_at(const RatioFn& r, DegreePair p) {
  return ratio_at(r, static_cast<double>(p.low), static_cast<double>(p.high));
}

/// Integer degree pairs low <= high with low >= low_min, high >= high_min and
/// high <= high_max.
struct DegreeGrid {
  int high_max = 1;
  int low_min = 1;
  int high_min = 1;

  /// 1 <= a <= b <= n-1.
  static DegreeGrid for_order(int n) {
    if (n < 2 || n > 62) throw std::invalid_argument("grid order must be in 2..62");
    return {n - 1, 1, 1};
  }
};

enum class ExtremumKind { min, max };

struct GridExtremum {
  DegreePair location;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::min;
};

/// Exhaustive scan. Undefined points are skipped; ties go to the
/// lexicographically smallest pair.
inline GridExtremum grid_extremum(const RatioFn& r, const DegreeGrid& grid, ExtremumKind kind) {
  std::optional<GridExtremum> best;
  for (int a = std::max(1, grid.low_min); a <= grid.high_max; ++a)
    for (int b = std::max(a, grid.high_min); b <= grid.high_max; ++b) {
      double v;
      try {
        v = ratio_at(r, DegreePair{a, b});
      } catch (const DomainError&) {
        continue;
      }
      const bool better = !best || (kind == ExtremumKind::min ? v < best->value : v > best->value);
      if (better) best = GridExtremum{DegreePair{a, b}, v, kind};
    }
  if (!best) throw DomainError("ratio " + r.name() + " is undefined on the whole grid");
  return *best;
}

inline GridExtremum grid_extremum(const RatioFn& r, int n, ExtremumKind kind) {
  return grid_extremum(r, DegreeGrid::for_order(n), kind);
}

/// An integer line through the grid: either one coordinate fixed and the
/// other running over [from, to], or the diagonal (t, t) for t in [from, to].
struct GridLine {
  bool diagonal = false;
  int fixed = 1;
  int from = 1;
  int to = 1;

  static GridLine with_fixed(int fixed, int from, int to) { return {false, fixed, from, to}; }
  static GridLine along_diagonal(int from, int to) { return {true, 0, from, to}; }

  DegreePair at(int t) const { return diagonal ? DegreePair{t, t} : DegreePair::of(fixed, t); }
};

enum class Monotonicity {
  strictly_increasing,
  nondecreasing,
  strictly_decreasing,
  nonincreasing,
  constant,
  not_monotone,
};

inline std::string_view monotonicity_name(Monotonicity m) {
  switch (m) {
    case Monotonicity::strictly_increasing: return "strictly_increasing";
    case Monotonicity::nondecreasing: return "nondecreasing";
    case Monotonicity::strictly_decreasing: return "strictly_decreasing";
    case Monotonicity::nonincreasing: return "nonincreasing";
    case Monotonicity::constant: return "constant";
    case Monotonicity::not_monotone: return "not_monotone";
  }
  return "?";
}

struct MonotonicityResult {
  Monotonicity verdict = Monotonicity::constant;
  /// For not_monotone: the t at which step t -> t+1 first runs against the
  /// direction established by the earlier steps.
  std::optional<int> first_violation;

  bool increasing() const {
    return verdict == Monotonicity::strictly_increasing || verdict == Monotonicity::nondecreasing;
  }
  bool decreasing() const {
    return verdict == Monotonicity::strictly_decreasing || verdict == Monotonicity::nonincreasing;
  }
};

/// Classifies successive differences along the line.
inline MonotonicityResult monotonicity_audit(const RatioFn& r, const GridLine& line) {
  if (line.from < 1 || line.to > 61 || line.from > line.to || (!line.diagonal && (line.fixed < 1 || line.fixed > 61)))
    throw std::invalid_argument("monotonicity line must lie within [1, 61]");
  int ups = 0, downs = 0, flats = 0;
  int direction = 0;
  MonotonicityResult res;
  double prev = ratio_at(r, line.at(line.from));
  for (int t = line.from; t < line.to; ++t) {
    const double cur = ratio_at(r, line.at(t + 1));
    const int sign = cur > prev ? 1 : (cur < prev ? -1 : 0);
    if (sign > 0) ++ups;
    if (sign < 0) ++downs;
    if (sign == 0) ++flats;
    if (sign != 0) {
      if (direction == 0) direction = sign;
      else if (sign != direction && !res.first_violation) res.first_violation = t;
    }
    prev = cur;
  }
  if (ups > 0 && downs > 0) res.verdict = Monotonicity::not_monotone;
  else if (ups > 0) res.verdict = flats ? Monotonicity::nondecreasing : Monotonicity::strictly_increasing;
  else if (downs > 0) res.verdict = flats ? Monotonicity::nonincreasing : Monotonicity::strictly_decreasing;
  else res.verdict = Monotonicity::constant;
  return res;
}

/// Continuous sampling of the ratio along a = fixed, b in [from, to] with the
/// given step. Returns the sampled argument of the extremum and its value.
inline std::pair<double, double> dense_line_extremum(const RatioFn& r, double fixed, double from,
                                                     double to, ExtremumKind kind,
                                                     double step = 1.0 / 64.0) {
  std::optional<std::pair<double, double>> best;
  const long steps = static_cast<long>(std::floor((to - from) / step + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    const double t = from + static_cast<double>(i) * step;
    double v;
    try {
      v = ratio_at(r, fixed, t);
    } catch (const DomainError&) {
      continue;
    }
    if (!best || (kind == ExtremumKind::min ? v < best->second : v > best->second)) best = {t, v};
  }
  if (!best) throw DomainError("ratio undefined along the sampled line");
  return *best;
}

// ---------------------------------------------------------------------------
// Coefficient concordance: does a catalog coefficient equal the extremum of
// the edge ratio over the degree grid its preconditions allow?

enum class Concordance { tight, slack, invalid };

inline std::string_view concordance_name(Concordance c) {
  switch (c) {
    case Concordance::tight: return "tight";
    case Concordance::slack: return "slack";
    case Concordance::invalid: return "invalid";
  }
  return "?";
}

struct ConcordanceResult {
  std::string bound_id;
  int n = 0;
  int delta = 0;
  double coefficient = 0.0;
  GridExtremum extremum;
  Concordance status = Concordance::tight;
};

/// Grid for a bound at order n and minimum degree delta: delta <= a <= b <= n-1,
/// b <= 4 for molecular-only bounds, and no (1,1) pair once n >= 3 (only K2
/// has such an edge).
inline DegreeGrid bound_grid(const BoundSpec& b, int n, int delta) {
  DegreeGrid g = DegreeGrid::for_order(n);
  g.low_min = std::max(delta, b.pre.delta_min);
  g.high_min = std::max(g.low_min, n >= 3 ? 2 : 1);
  if (b.pre.molecular_only) g.high_max = std::min(g.high_max, 4);
  return g;
}

inline ConcordanceResult coefficient_concordance(const BoundSpec& b, int n, int delta,
                                                 double tol = 1e-9) {
  if (!b.is_two_index())
    throw std::invalid_argument("concordance needs a two-index bound, got " + b.id);
  ConcordanceResult res;
  res.bound_id = b.id;
  res.n = n;
  res.delta = delta;
  res.coefficient = b.coeff.evaluate(n, delta);
  const RatioFn ratio{b.lhs.index(), b.rhs, false};
  const ExtremumKind kind = b.direction == Direction::lower ? ExtremumKind::min : ExtremumKind::max;
  res.extremum = grid_extremum(ratio, bound_grid(b, n, delta), kind);
  const double gap = kind == ExtremumKind::min ? res.extremum.value - res.coefficient
                                               : res.coefficient - res.extremum.value;
  const double scale = tol * std::max(1.0, std::abs(res.extremum.value));
  if (std::abs(gap) <= scale) res.status = Concordance::tight;
  else if (gap > 0) res.status = Concordance::slack;
  else res.status = Concordance::invalid;
  return res;
}

/// Orders scanned when deciding whether a bound is ever attained on the grid.
inline constexpr int kConcordanceScanMaxOrder = 16;

struct ConcordanceDiscrepancy {
  std::string bound_id;
  bool ever_tight = false;
  std::optional<ConcordanceResult> first_invalid;
  ConcordanceResult example;  // a slack or invalid instance
};

/// Non-strict two-index bounds whose coefficient is never the grid extremum
/// for any order n_min..16 (and every admissible delta when the coefficient
/// depends on it), or exceeds it somewhere.
inline std::vector<ConcordanceDiscrepancy> concordance_discrepancies(
    const std::vector<BoundSpec>& bounds, int max_order = kConcordanceScanMaxOrder) {
  std::vector<ConcordanceDiscrepancy> out;
  for (const auto& b : bounds) {
    if (!b.is_two_index() || b.strict) continue;
    ConcordanceDiscrepancy d;
    d.bound_id = b.id;
    bool have_example = false;
    for (int n = std::max(2, b.pre.n_min); n <= max_order; ++n) {
      const int dmax = b.coeff.uses_min_degree() ? n - 1 : b.pre.delta_min;
      for (int delta = b.pre.delta_min; delta <= dmax; ++delta) {
        const auto c = coefficient_concordance(b, n, delta);
        if (c.status == Concordance::tight) d.ever_tight = true;
        if (c.status == Concordance::invalid && !d.first_invalid) d.first_invalid = c;
        if (c.status != Concordance::tight && !have_example) d.example = c, have_example = true;
      }
    }
    if (!d.ever_tight || d.first_invalid) {
      if (d.first_invalid) d.example = *d.first_invalid;
      out.push_back(std::move(d));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The registered claims about the edge-ratio functions used in the proofs.

enum class ClaimStatus { confirmed, refuted, not_applicable, info };

inline std::string_view claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::confirmed: return "confirmed";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::not_applicable: return "not_applicable";
    case ClaimStatus::info: return "info";
  }
  return "?";
}

struct ProofClaimResult {
  std::string id;
  std::string citation;
  std::string ratio;
  std::string claim;
  ClaimStatus status = ClaimStatus::confirmed;
  std::string observed;
};

namespace detail {

inline bool close(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline ProofClaimResult extremum_claim(std::string id, std::string citation, const RatioFn& r,
                                       const DegreeGrid& grid, ExtremumKind kind,
                                       DegreePair expected_at, double expected_value) {
  const auto e = grid_extremum(r, grid, kind);
  ProofClaimResult c;
  c.id = std::move(id);
  c.citation = std::move(citation);
  c.ratio = r.name();
  c.claim = std::string(kind == ExtremumKind::min ? "min" : "max") + " at " +
            to_string(expected_at) + " = " + fmt_double(expected_value);
  c.observed = std::string(kind == ExtremumKind::min ? "min" : "max") + " at " +
               to_string(e.location) + " = " + fmt_double(e.value);
  c.status = (e.location == expected_at && close(e.value, expected_value)) ? ClaimStatus::confirmed
                                                                           : ClaimStatus::refuted;
  return c;
}

inline ProofClaimResult monotone_claim(std::string id, std::string citation, const RatioFn& r,
                                       const std::vector<GridLine>& lines, bool increasing,
                                       std::string what) {
  ProofClaimResult c;
  c.id = std::move(id);
  c.citation = std::move(citation);
  c.ratio = r.name();
  c.claim = std::move(what);
  c.status = ClaimStatus::confirmed;
  int audited = 0;
  for (const auto& line : lines) {
    if (line.to <= line.from) continue;
    ++audited;
    const auto m = monotonicity_audit(r, line);
    if (increasing ? !m.increasing() : !m.decreasing()) {
      c.status = ClaimStatus::refuted;
      const std::string where =
          line.diagonal ? "diagonal" : "fixed " + std::to_string(line.fixed);
      c.observed = std::string(monotonicity_name(m.verdict)) + " along " + where + " on [" +
                   std::to_string(line.from) + "," + std::to_string(line.to) + "]";
      return c;
    }
  }
  if (audited == 0) {
    c.status = ClaimStatus::not_applicable;
    c.observed = "no line with two or more grid points at this order";
  } else {
    c.observed = std::to_string(audited) + " line(s) " + (increasing ? "increasing" : "decreasing");
  }
  return c;
}

}  // namespace detail

/// Audits the extremum and monotonicity statements made about F(x,y) in the
/// proofs, at order n (3 <= n <= 62).
inline std::vector<ProofClaimResult> proof_claims(int n) {
  if (n < 3 || n > 62) throw std::invalid_argument("proof audit order must be in 3..62");
  using detail::extremum_claim;
  using detail::monotone_claim;
  const double m1 = n - 1.0;
  std::vector<ProofClaimResult> out;
  const DegreeGrid full = DegreeGrid::for_order(n);

  const RatioFn f1{IndexId::GA, IndexId::X, true};
  out.push_back(extremum_claim("F_T1.min", "Theorem 1 proof", f1, full, ExtremumKind::min, {1, 1}, 2.0));
  out.push_back(extremum_claim("F_T1.max", "Theorem 1 proof", f1, full, ExtremumKind::max,
                               {n - 1, n - 1}, 2.0 * m1));
  {
    std::vector<GridLine> lines;
    for (int b = 1; b <= n - 1; ++b) lines.push_back(GridLine::with_fixed(b, 1, b));
    out.push_back(monotone_claim("F_T1.monotone", "Theorem 1 proof", f1, lines, true,
                                 "increasing in each coordinate"));
  }

  const RatioFn f2{IndexId::GA, IndexId::R, false};
  out.push_back(extremum_claim("F_T2.min", "Theorem 2 proof", f2, full, ExtremumKind::min, {1, 1}, 1.0));
  out.push_back(extremum_claim("F_T2.max", "Theorem 2 proof", f2, full, ExtremumKind::max,
                               {n - 1, n - 1}, m1));
  {
    std::vector<GridLine> lines;
    for (int b = 1; b <= n - 1; ++b) lines.push_back(GridLine::with_fixed(b, 1, b));
    out.push_back(monotone_claim("F_T2.monotone", "Theorem 2 proof", f2, lines, true,
                                 "increasing in each coordinate"));
  }

  const RatioFn f4{IndexId::ABC, IndexId::GA, true};
  const DegreeGrid g4{n - 1, 2, 2};
  out.push_back(extremum_claim("F_T4.max", "Theorem 4 proof", f4, g4, ExtremumKind::max, {2, n - 1},
                               (m1 + 2) * (m1 + 2) / (16.0 * m1)));
  out.push_back(extremum_claim("F_T4.min", "Theorem 4 proof", f4, g4, ExtremumKind::min,
                               {n - 1, n - 1}, 2.0 * (m1 - 1) / (m1 * m1)));
  {
    std::vector<GridLine> lines;
    for (int x = 2; x <= n - 1; ++x) lines.push_back(GridLine::with_fixed(x, 2, x));
    out.push_back(monotone_claim("F_T4.decreasing_in_smaller", "Theorem 4 proof", f4, lines, false,
                                 "decreasing in the smaller degree"));
  }
  out.push_back(monotone_claim("F_T4.increasing_at_2", "Theorem 4 proof", f4,
                               {GridLine::with_fixed(2, 2, n - 1)}, true,
                               "F(x,2) increasing in x"));
  out.push_back(monotone_claim("F_T4.diagonal", "Theorem 4 proof", f4,
                               {GridLine::along_diagonal(2, n - 1)}, false,
                               "F(x,x) decreasing in x"));

  const RatioFn f6{IndexId::AZI, IndexId::X, true};
  const DegreeGrid g6{n - 1, 1, 2};
  if (n >= 9) {
    const double r87 = 8.0 / 7.0;
    out.push_back(extremum_claim("F_T6.min", "Theorem 6 proof", f6, g6, ExtremumKind::min, {1, 8},
                                 9.0 * std::pow(r87, 6)));
  } else {
    out.push_back({"F_T6.min", "Theorem 6 proof", f6.name(), "min at (1,8) = 9(8/7)^6",
                   ClaimStatus::not_applicable, "needs n >= 9 for (1,8) to lie on the grid"});
  }
  out.push_back(extremum_claim("F_T6.max", "Theorem 6 proof", f6, g6, ExtremumKind::max,
                               {n - 1, n - 1}, std::pow(m1, 13) / (32.0 * std::pow(m1 - 1, 6))));
  out.push_back(monotone_claim("F_T6.decreasing_2_7", "Theorem 6 proof", f6,
                               {GridLine::with_fixed(1, 2, std::min(7, n - 1))}, false,
                               "F(1,y) decreasing for 2 <= y <= 7"));
  out.push_back(monotone_claim("F_T6.increasing_from_8", "Theorem 6 proof", f6,
                               {GridLine::with_fixed(1, 8, n - 1)}, true,
                               "F(1,y) increasing for 8 <= y <= n-1"));
  {
    std::vector<GridLine> lines;
    for (int y = 2; y <= n - 1; ++y) lines.push_back(GridLine::with_fixed(y, 1, y));
    out.push_back(monotone_claim("F_T6.increasing_in_smaller", "Theorem 6 proof", f6, lines, true,
                                 "increasing in the smaller degree"));
  }
  {
    const auto [t, v] = dense_line_extremum(f6, 1.0, 2.0, n - 1.0, ExtremumKind::min);
    out.push_back({"F_T6.dense_min", "Theorem 6 proof", f6.name(),
                   "continuous minimizer of F(1,y) (sampled, step 1/64)", ClaimStatus::info,
                   "y = " + detail::fmt_double(t) + ", F = " + detail::fmt_double(v)});
  }
  return out;
}

}  // namespace degbound
