#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "degbound/catalog.hpp"
#include "degbound/chromatic.hpp"
#include "degbound/graph.hpp"
#include "degbound/graph6.hpp"
#include "degbound/indices.hpp"

namespace degbound {

inline constexpr double kDefaultTolerance = 1e-9;

/// Everything a bound needs to know about one graph, computed once.
struct GraphProfile {
  Graph graph;
  std::string graph6;
  int n = 1;
  int m = 0;
  int delta = 0;
  int Delta = 0;
  bool connected = true;
  IndexTable indices;
  std::optional<int> chi;  // nullopt above the exact-search cap
};

inline GraphProfile make_profile(const Graph& g, int chi_cap = kChromaticCap) {
  GraphProfile p;
  p.graph = g;
  p.n = g.order();
  p.m = g.size();
  p.graph6 = p.n <= kGraph6MaxOrder ? to_graph6(g) : std::string{};
  p.delta = min_degree(g);
  p.Delta = max_degree(g);
  p.connected = is_connected(g);
  p.indices = all_indices(g);
  if (p.n <= chi_cap) p.chi = chromatic_number(g, chi_cap);
  return p;
}

/// Profiles for a whole population, built on `jobs` threads. Output order
/// matches input order.
inline std::vector<GraphProfile> make_profiles(std::span<const Graph> graphs, int jobs = 1) {
  std::vector<GraphProfile> out(graphs.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, graphs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = make_profile(graphs[i]);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < graphs.size(); i += workers) out[i] = make_profile(graphs[i]);
    });
  for (auto& t : pool) t.join();
  return out;
}

enum class Verdict { holds, equality, violated, precondition_skipped, domain_skipped };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::equality: return "equality";
    case Verdict::violated: return "violated";
    case Verdict::precondition_skipped: return "precondition_skipped";
    case Verdict::domain_skipped: return "domain_skipped";
  }
  return "?";
}

/// Outcome of one bound on one graph. margin >= 0 means the inequality holds;
/// it is rhs_side - lhs for upper bounds and lhs - rhs_side for lower bounds.
struct BoundCheck {
  std::string bound_id;
  std::string graph6;
  double lhs_value = 0.0;
  double rhs_side_value = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::precondition_skipped;
  bool strictness_conflict = false;  // equality on a strict bound

  bool evaluated() const {
    return verdict == Verdict::holds || verdict == Verdict::equality || verdict == Verdict::violated;
  }
};

inline bool preconditions_met(const BoundSpec& b, const GraphProfile& p) {
  const auto& pre = b.pre;
  if (pre.require_connected && !p.connected) return false;
  if (p.n < pre.n_min || p.delta < pre.delta_min) return false;
  if (pre.molecular_only && p.Delta > 4) return false;
  if (pre.spread_cap && p.Delta - p.delta > pre.spread_cap->evaluate(p.n, p.delta) + 1e-12)
    return false;
  for (const auto& f : pre.exclusions) {
    const Graph& g = p.graph;
    switch (f.kind) {
      case FamilyKind::star:
        if (star_leaves(g) == f.param) return false;
        break;
      case FamilyKind::double_star_t:
        if (is_double_star_t(g)) return false;
        break;
      case FamilyKind::path:
        if (g.order() == f.param && is_path(g)) return false;
        break;
      case FamilyKind::cycle:
        if (g.order() == f.param && is_cycle(g)) return false;
        break;
      case FamilyKind::complete:
        if (g.order() == f.param && is_complete(g)) return false;
        break;
      case FamilyKind::regular:
        if (g.order() == f.param && is_regular(g, f.degree) && is_connected(g)) return false;
        break;
    }
  }
  return true;
}

namespace detail {

inline BoundCheck combine_chain(const BoundSpec& b, const std::vector<BoundCheck>& links,
                                const GraphProfile& p) {
  BoundCheck out;
  out.bound_id = b.id;
  out.graph6 = p.graph6;
  out.verdict = Verdict::holds;
  const BoundCheck* tightest = nullptr;
  for (const auto& c : links) {
    if (!c.evaluated()) {
      out.verdict = c.verdict;
      return out;
    }
    if (!tightest || c.margin < tightest->margin) tightest = &c;
    if (c.verdict == Verdict::violated) out.verdict = Verdict::violated;
    else if (c.verdict == Verdict::equality && out.verdict != Verdict::violated)
      out.verdict = Verdict::equality;
    out.strictness_conflict = out.strictness_conflict || c.strictness_conflict;
  }
  if (tightest) {
    out.lhs_value = tightest->lhs_value;
    out.rhs_side_value = tightest->rhs_side_value;
    out.margin = tightest->margin;
  }
  return out;
}

}  // namespace detail

/// Evaluates one bound on one graph.
///
/// equality: |margin| <= tol * max(1, |lhs|); violated: margin below minus
/// that; holds otherwise. Equality on a strict bound keeps the equality
/// verdict and sets `strictness_conflict`.
inline BoundCheck evaluate_bound(const BoundSpec& b, const GraphProfile& p,
                                 double tol = kDefaultTolerance) {
  if (b.is_chain()) {
    std::vector<BoundCheck> links;
    BoundCheck outer;
    outer.bound_id = b.id;
    outer.graph6 = p.graph6;
    if (!preconditions_met(b, p)) return outer;
    for (const auto& link : b.chain) links.push_back(evaluate_bound(link, p, tol));
    return detail::combine_chain(b, links, p);
  }

  BoundCheck c;
  c.bound_id = b.id;
  c.graph6 = p.graph6;
  if (!preconditions_met(b, p)) {
    c.verdict = Verdict::precondition_skipped;
    return c;
  }
  std::optional<double> lhs;
  if (b.lhs.is_chromatic()) {
    if (p.chi) lhs = static_cast<double>(*p.chi);
  } else {
    lhs = p.indices.get(b.lhs.index());
  }
  const auto rhs = p.indices.get(b.rhs);
  if (!lhs || !rhs) {
    c.verdict = Verdict::domain_skipped;
    return c;
  }
  c.lhs_value = *lhs;
  c.rhs_side_value = b.coeff.evaluate(p.n, p.delta) * *rhs;
  c.margin = b.direction == Direction::upper ? c.rhs_side_value - c.lhs_value
                                             : c.lhs_value - c.rhs_side_value;
  const double scale = tol * std::max(1.0, std::abs(c.lhs_value));
  if (std::abs(c.margin) <= scale) {
    c.verdict = Verdict::equality;
    c.strictness_conflict = b.strict;
  } else if (c.margin < -scale) {
    c.verdict = Verdict::violated;
  } else {
    c.verdict = Verdict::holds;
  }
  return c;
}

inline BoundCheck evaluate_bound(const BoundSpec& b, const Graph& g,
                                 double tol = kDefaultTolerance) {
  return evaluate_bound(b, make_profile(g), tol);
}

/// True iff g belongs to the extremal family the bound claims. Decided
/// structurally. For a chain, membership in any link's family counts.
inline bool check_equality_family(const BoundSpec& b, const Graph& g) {
  if (b.is_chain())
    return std::any_of(b.chain.begin(), b.chain.end(),
                       [&](const BoundSpec& link) { return check_equality_family(link, g); });
  return b.claim.contains(g);
}

enum class AuditVerdict { confirmed_sharp, holds_not_sharp_in_population, violated, vacuous };

inline std::string_view audit_verdict_name(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::confirmed_sharp: return "confirmed_sharp";
    case AuditVerdict::holds_not_sharp_in_population: return "holds_not_sharp_in_population";
    case AuditVerdict::violated: return "violated";
    case AuditVerdict::vacuous: return "vacuous";
  }
  return "?";
}

inline std::optional<AuditVerdict> parse_audit_verdict(std::string_view s) {
  for (auto v : {AuditVerdict::confirmed_sharp, AuditVerdict::holds_not_sharp_in_population,
                 AuditVerdict::violated, AuditVerdict::vacuous})
    if (audit_verdict_name(v) == s) return v;
  return std::nullopt;
}

struct AuditCounts {
  int checked = 0;  // graphs on which both sides were evaluated
  int skipped = 0;  // precondition or domain skips
  int holds = 0;
  int equality = 0;
  int violated = 0;
};

struct MarginWitness {
  double value = 0.0;
  std::string witness_graph6;
};

/// Aggregate of one bound over one population.
struct SharpnessReport {
  std::string bound_id;
  std::string citation;
  std::string statement;
  std::string claimed_equality;
  std::string population;
  AuditCounts counts;
  std::optional<MarginWitness> min_margin;  // smallest margin among "holds" checks
  std::vector<std::string> equality_witnesses;
  std::vector<std::string> violation_witnesses;
  // Cross-validation against the claimed extremal family.
  std::vector<std::string> unexpected_equalities;  // equality, not in the family
  std::vector<std::string> missed_family_members;  // in the family, checked, no equality
  std::vector<std::string> strictness_conflicts;
  AuditVerdict verdict = AuditVerdict::vacuous;

  bool family_consistent() const {
    return unexpected_equalities.empty() && missed_family_members.empty();
  }
};

/// Aggregates bound checks over a population; witness lists are sorted by
/// graph6 so the report does not depend on population order.
inline SharpnessReport audit(const BoundSpec& b, std::span<const GraphProfile> population,
                             double tol = kDefaultTolerance, std::string population_name = {}) {
  SharpnessReport r;
  r.bound_id = b.id;
  r.citation = b.citation;
  r.statement = b.statement;
  r.claimed_equality = b.is_chain() ? "union of links" : b.claim.describe();
  r.population = std::move(population_name);
  for (const auto& p : population) {
    const BoundCheck c = evaluate_bound(b, p, tol);
    if (!c.evaluated()) {
      ++r.counts.skipped;
      continue;
    }
    ++r.counts.checked;
    const bool in_family = check_equality_family(b, p.graph);
    switch (c.verdict) {
      case Verdict::holds:
        ++r.counts.holds;
        if (!r.min_margin || c.margin < r.min_margin->value ||
            (c.margin == r.min_margin->value && p.graph6 < r.min_margin->witness_graph6))
          r.min_margin = MarginWitness{c.margin, p.graph6};
        break;
      case Verdict::equality:
        ++r.counts.equality;
        r.equality_witnesses.push_back(p.graph6);
        if (c.strictness_conflict) r.strictness_conflicts.push_back(p.graph6);
        break;
      case Verdict::violated:
        ++r.counts.violated;
        r.violation_witnesses.push_back(p.graph6);
        break;
      default: break;
    }
    if (c.verdict == Verdict::equality && !in_family) r.unexpected_equalities.push_back(p.graph6);
    if (c.verdict != Verdict::equality && in_family) r.missed_family_members.push_back(p.graph6);
  }
  for (auto* list : {&r.equality_witnesses, &r.violation_witnesses, &r.unexpected_equalities,
                     &r.missed_family_members, &r.strictness_conflicts})
    std::sort(list->begin(), list->end());
  if (r.counts.violated > 0) r.verdict = AuditVerdict::violated;
  else if (r.counts.checked == 0) r.verdict = AuditVerdict::vacuous;
  else if (r.counts.equality > 0) r.verdict = AuditVerdict::confirmed_sharp;
  else r.verdict = AuditVerdict::holds_not_sharp_in_population;
  return r;
}

/// Audits several bounds on `jobs` threads; results follow the order of
/// `bounds`.
inline std::vector<SharpnessReport> audit_all(std::span<const BoundSpec> bounds,
                                              std::span<const GraphProfile> population,
                                              double tol, const std::string& population_name,
                                              int jobs = 1) {
  std::vector<SharpnessReport> out(bounds.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, bounds.size()));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < bounds.size(); i += workers)
      out[i] = audit(bounds[i], population, tol, population_name);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace degbound
