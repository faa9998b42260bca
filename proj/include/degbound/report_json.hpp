#pragma once

#include "json.hpp"

#include "degbound/audit.hpp"
#include "degbound/proof_kernel.hpp"

namespace degbound {

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::ordered_json to_json(const SharpnessReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["bound_id"] = r.bound_id;
  j["citation"] = r.citation;
  j["statement"] = r.statement;
  j["claimed_equality"] = r.claimed_equality;
  j["population"] = r.population;
  j["counts"] = {{"checked", r.counts.checked},
                 {"skipped", r.counts.skipped},
                 {"holds", r.counts.holds},
                 {"equality", r.counts.equality},
                 {"violated", r.counts.violated}};
  if (r.min_margin)
    j["min_margin"] = {{"value", r.min_margin->value},
                       {"witness_graph6", r.min_margin->witness_graph6}};
  else
    j["min_margin"] = nullptr;
  j["equality_witnesses"] = r.equality_witnesses;
  j["violation_witnesses"] = r.violation_witnesses;
  j["family_check"] = {{"consistent", r.family_consistent()},
                       {"unexpected_equalities", r.unexpected_equalities},
                       {"missed_family_members", r.missed_family_members}};
  j["strictness_conflicts"] = r.strictness_conflicts;
  j["verdict"] = audit_verdict_name(r.verdict);
  return j;
}

inline nlohmann::ordered_json to_json(const BoundCheck& c) {
  return {{"bound_id", c.bound_id},         {"graph6", c.graph6},
          {"lhs_value", c.lhs_value},       {"rhs_side_value", c.rhs_side_value},
          {"margin", c.margin},             {"verdict", verdict_name(c.verdict)},
          {"strictness_conflict", c.strictness_conflict}};
}

inline nlohmann::ordered_json to_json(const ProofClaimResult& c) {
  return {{"id", c.id},         {"citation", c.citation},
          {"ratio", c.ratio},   {"claim", c.claim},
          {"status", claim_status_name(c.status)}, {"observed", c.observed}};
}

inline nlohmann::ordered_json to_json(const ConcordanceResult& c) {
  return {{"bound_id", c.bound_id},
          {"n", c.n},
          {"delta", c.delta},
          {"coefficient", c.coefficient},
          {"extremum", {{"a", c.extremum.location.low},
                        {"b", c.extremum.location.high},
                        {"value", c.extremum.value},
                        {"kind", c.extremum.kind == ExtremumKind::min ? "min" : "max"}}},
          {"status", concordance_name(c.status)}};
}

}  // namespace degbound
