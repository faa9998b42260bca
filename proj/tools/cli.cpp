#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degbound/degbound.hpp"
#include "degbound/report_json.hpp"

#ifndef DEGBOUND_DATA_DIR
#define DEGBOUND_DATA_DIR "data"
#endif

namespace degbound::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Full precision, shortest round-trip representation.
std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// Column-aligned plain text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void write_csv(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (const auto& c : r) cells.push_back(csv_escape(c));
    os << join(cells, ",") << '\n';
  }
}

struct CommonOptions {
  std::string format = "table";
  double tol = kDefaultTolerance;
  int jobs = 1;
  std::string out_dir;
};

struct PopulationOptions {
  std::string enumerate;
  std::string file;
  int min_degree = 0;
  bool molecular = false;
  bool regular = false;
  bool large = false;
};

struct Population {
  std::string name;
  std::vector<Graph> graphs;
};

std::pair<int, int> parse_range(const std::string& text, int single_lo) {
  auto to_int = [&](const std::string& s) {
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
      throw UsageError("invalid number '" + s + "' in range '" + text + "'");
    return v;
  };
  std::size_t sep = text.find('-');
  std::size_t sep_len = 1;
  if (sep == std::string::npos) {
    sep = text.find("..");
    sep_len = 2;
  }
  if (sep == std::string::npos) return {single_lo, to_int(text)};
  const int lo = to_int(text.substr(0, sep));
  const int hi = to_int(text.substr(sep + sep_len));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

Population load_population(const PopulationOptions& o, int jobs) {
  if (o.enumerate.empty() == o.file.empty())
    throw UsageError("give exactly one of --enumerate N and --file PATH");
  EnumerationFilters f;
  if (o.min_degree > 0) f.delta_min = o.min_degree;
  f.molecular = o.molecular;
  f.regular_only = o.regular;
  std::string filters;
  if (f.delta_min) filters += ",min-degree=" + std::to_string(*f.delta_min);
  if (f.molecular) filters += ",molecular";
  if (f.regular_only) filters += ",regular";

  Population p;
  if (!o.enumerate.empty()) {
    auto [lo, hi] = parse_range(o.enumerate, 2);
    if (lo < 1) throw UsageError("enumeration orders start at 1");
    p.graphs = enumerate_connected_range(lo, hi, f, o.large, jobs);
    p.name = "enumerate:" + std::to_string(lo) + "-" + std::to_string(hi) + filters;
  } else {
    for (auto& g : read_graph_file(o.file))
      if (passes_filters(g, f)) p.graphs.push_back(std::move(g));
    p.name = "file:" + fs::path(o.file).filename().string() + filters;
  }
  return p;
}

void add_common(CLI::App* cmd, CommonOptions& c, bool with_out) {
  cmd->add_option("--format", c.format, "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->envname("DEGBOUND_FORMAT");
  cmd->add_option("--tol", c.tol, "Relative tolerance for equality")
      ->check(CLI::PositiveNumber)
      ->envname("DEGBOUND_TOL");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 256))->envname("DEGBOUND_JOBS");
  if (with_out) cmd->add_option("--out", c.out_dir, "Directory for report files")->envname("DEGBOUND_OUT");
}

void add_population(CLI::App* cmd, PopulationOptions& p) {
  cmd->add_option("--enumerate", p.enumerate,
                  "All connected graphs of order 2..N (or A-B), one per isomorphism class");
  cmd->add_option("--file", p.file, "Population file: graph6 lines or one edge list");
  cmd->add_option("--min-degree", p.min_degree, "Keep graphs with minimum degree >= K")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--molecular", p.molecular, "Keep graphs with maximum degree <= 4");
  cmd->add_flag("--regular", p.regular, "Keep regular graphs only");
  cmd->add_flag("--large", p.large, "Allow enumeration of order 8 (2^28 edge subsets)");
}

std::string safe_file_name(const std::string& id) {
  std::string out;
  for (char c : id)
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') out += c;
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot write " + path.string());
  f << text;
  if (!f) throw std::ios_base::failure("write failed for " + path.string());
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::ios_base::failure("cannot create directory " + dir + ": " + ec.message());
}

// ---------------------------------------------------------------------------
// compute

std::string opt_cell(std::optional<double> v, bool full_precision) {
  if (!v) return "undefined";
  return full_precision ? shortest(*v) : fixed6(*v);
}

int cmd_compute(const std::vector<std::string>& inputs, const std::string& file,
                const CommonOptions& c, std::ostream& out) {
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto parsed = parse_graphs(inputs[i]);
    graphs.insert(graphs.end(), parsed.begin(), parsed.end());
  }
  if (!file.empty()) {
    auto parsed = read_graph_file(file);
    graphs.insert(graphs.end(), parsed.begin(), parsed.end());
  }
  if (graphs.empty()) throw UsageError("compute needs a graph6 string or --file");
  const auto profiles = make_profiles(graphs, c.jobs);

  std::vector<std::string> header = {"graph6", "n", "m", "delta", "Delta", "regular", "chi"};
  for (IndexId id : kAllIndices) header.emplace_back(index_name(id));

  if (c.format == "json") {
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["graphs"] = json::array();
    for (const auto& p : profiles) {
      json g;
      g["graph6"] = p.graph6;
      g["n"] = p.n;
      g["m"] = p.m;
      g["delta"] = p.delta;
      g["Delta"] = p.Delta;
      g["connected"] = p.connected;
      g["regular"] = is_regular(p.graph);
      g["molecular"] = p.Delta <= 4;
      g["chi"] = p.chi ? json(*p.chi) : json(nullptr);
      json idx;
      for (IndexId id : kAllIndices) {
        const auto v = p.indices.get(id);
        idx[std::string(index_name(id))] = v ? json(*v) : json(nullptr);
      }
      g["indices"] = idx;
      doc["graphs"].push_back(g);
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }
  const bool full = c.format == "csv";
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : profiles) {
    std::vector<std::string> r = {p.graph6.empty() ? "-" : p.graph6, std::to_string(p.n),
                                  std::to_string(p.m), std::to_string(p.delta),
                                  std::to_string(p.Delta), is_regular(p.graph) ? "yes" : "no",
                                  p.chi ? std::to_string(*p.chi) : "n/a"};
    for (IndexId id : kAllIndices) r.push_back(opt_cell(p.indices.get(id), full));
    rows.push_back(std::move(r));
  }
  if (full) {
    rows.insert(rows.begin(), header);
    write_csv(out, rows);
  } else {
    TextTable t(header);
    for (auto& r : rows) t.add(std::move(r));
    t.print(out);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify / audit

struct Expectations {
  std::vector<std::string> default_allowed;
  std::map<std::string, std::vector<std::string>> per_bound;
  std::vector<std::string> concordance_discrepancies;

  const std::vector<std::string>& allowed(const std::string& id) const {
    auto it = per_bound.find(id);
    return it == per_bound.end() ? default_allowed : it->second;
  }
};

std::string default_expectations_path() { return std::string(DEGBOUND_DATA_DIR) + "/expectations.json"; }

Expectations load_expectations(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open expectation file " + path);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("expectation file is not valid JSON: ") + e.what(), 0, 0);
  }
  Expectations e;
  e.default_allowed = doc.at("default").get<std::vector<std::string>>();
  for (auto& [id, v] : doc.at("bounds").items()) e.per_bound[id] = v.get<std::vector<std::string>>();
  if (doc.contains("concordance_discrepancies"))
    e.concordance_discrepancies = doc["concordance_discrepancies"].get<std::vector<std::string>>();
  for (const auto& [id, allowed] : e.per_bound) {
    if (!find_bound(id)) throw ParseError("expectation file names unknown bound " + id, 0, 0);
    for (const auto& v : allowed)
      if (!parse_audit_verdict(v)) throw ParseError("unknown verdict '" + v + "' for " + id, 0, 0);
  }
  return e;
}

std::vector<std::string> summary_header(bool with_expectation) {
  std::vector<std::string> h = {"bound_id",  "verdict",        "checked",     "skipped",
                                "holds",     "equality",       "violated",    "min_margin",
                                "min_margin_witness", "equality_witnesses", "violation_witnesses",
                                "family_consistent"};
  if (with_expectation) {
    h.emplace_back("expected");
    h.emplace_back("match");
  }
  return h;
}

std::vector<std::string> summary_row(const SharpnessReport& r, bool full_precision,
                                     const Expectations* e, bool matched) {
  std::vector<std::string> row = {
      r.bound_id,
      std::string(audit_verdict_name(r.verdict)),
      std::to_string(r.counts.checked),
      std::to_string(r.counts.skipped),
      std::to_string(r.counts.holds),
      std::to_string(r.counts.equality),
      std::to_string(r.counts.violated),
      r.min_margin ? (full_precision ? shortest(r.min_margin->value) : fixed6(r.min_margin->value))
                   : "",
      r.min_margin ? r.min_margin->witness_graph6 : "",
      std::to_string(r.equality_witnesses.size()),
      std::to_string(r.violation_witnesses.size()),
      r.family_consistent() ? "yes" : "no"};
  if (e) {
    row.push_back(join(e->allowed(r.bound_id), "|"));
    row.emplace_back(matched ? "yes" : "NO");
  }
  return row;
}

int cmd_audit_or_verify(bool verify, const std::string& bounds_list, const PopulationOptions& po,
                        const std::string& expect_path, const CommonOptions& c, std::ostream& out,
                        std::ostream& err) {
  std::vector<BoundSpec> bounds;
  try {
    bounds = select_bounds(bounds_list);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::optional<Expectations> expectations;
  if (verify) expectations = load_expectations(expect_path.empty() ? default_expectations_path() : expect_path);

  const Population pop = load_population(po, c.jobs);
  const auto profiles = make_profiles(pop.graphs, c.jobs);
  const auto reports = audit_all(bounds, profiles, c.tol, pop.name, c.jobs);

  std::vector<bool> matched(reports.size(), true);
  int mismatches = 0;
  if (expectations) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& allowed = expectations->allowed(reports[i].bound_id);
      matched[i] = std::find(allowed.begin(), allowed.end(),
                             audit_verdict_name(reports[i].verdict)) != allowed.end();
      if (!matched[i]) ++mismatches;
    }
  }
  const Expectations* e = expectations ? &*expectations : nullptr;

  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = verify ? "verify" : "audit";
  doc["population"] = pop.name;
  doc["population_size"] = pop.graphs.size();
  doc["tolerance"] = c.tol;
  doc["reports"] = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    json r = to_json(reports[i]);
    if (e) {
      r["expected"] = e->allowed(reports[i].bound_id);
      r["matches_expectation"] = static_cast<bool>(matched[i]);
    }
    doc["reports"].push_back(std::move(r));
  }
  if (e) doc["mismatches"] = mismatches;

  std::vector<std::vector<std::string>> csv_rows = {summary_header(e != nullptr)};
  for (std::size_t i = 0; i < reports.size(); ++i)
    csv_rows.push_back(summary_row(reports[i], true, e, matched[i]));

  if (!c.out_dir.empty()) {
    ensure_dir(c.out_dir);
    for (std::size_t i = 0; i < reports.size(); ++i)
      write_file(fs::path(c.out_dir) / (safe_file_name(reports[i].bound_id) + ".json"),
                 doc["reports"][i].dump(2) + "\n");
    write_file(fs::path(c.out_dir) / "summary.json", doc.dump(2) + "\n");
    std::ostringstream csv;
    write_csv(csv, csv_rows);
    write_file(fs::path(c.out_dir) / "summary.csv", csv.str());
  }

  if (c.format == "json") {
    out << doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    write_csv(out, csv_rows);
  } else {
    out << "population: " << pop.name << " (" << pop.graphs.size() << " graphs), tolerance "
        << shortest(c.tol) << '\n';
    TextTable t(summary_header(e != nullptr));
    for (std::size_t i = 0; i < reports.size(); ++i) t.add(summary_row(reports[i], false, e, matched[i]));
    t.print(out);
    if (e) out << (mismatches ? std::to_string(mismatches) + " verdict mismatch(es)" : "all verdicts match expectations") << '\n';
  }
  if (mismatches) err << mismatches << " bound(s) did not match the pinned expectations\n";
  return mismatches ? kVerdictMismatch : kOk;
}

// ---------------------------------------------------------------------------
// families

int cmd_families(const std::string& range, const CommonOptions& c, std::ostream& out) {
  auto [lo, hi] = parse_range(range, 2);
  if (lo < 2 || hi > 200) throw UsageError("family range must lie within 2..200");
  const auto rows = family_table(lo, hi);
  constexpr double kAgreement = 1e-12;
  int failures = 0;
  for (const auto& r : rows)
    if (!(r.max_relative_error <= kAgreement)) ++failures;

  auto azi_over_ga = [](const FamilyRow& r) -> std::optional<double> {
    const auto a = r.evaluated.get(IndexId::AZI), g = r.evaluated.get(IndexId::GA);
    if (!a || !g || *g == 0.0) return std::nullopt;
    return *a / *g;
  };

  if (c.format == "json") {
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["range"] = {lo, hi};
    doc["tolerance"] = kAgreement;
    doc["rows"] = json::array();
    for (const auto& r : rows) {
      json j;
      j["family"] = r.family;
      j["n"] = r.order;
      json formula, evaluated;
      for (IndexId id : kAllIndices) {
        const std::string k(index_name(id));
        const auto f = r.formula.get(id), v = r.evaluated.get(id);
        formula[k] = f ? json(*f) : json(nullptr);
        evaluated[k] = v ? json(*v) : json(nullptr);
      }
      j["formula"] = formula;
      j["evaluated"] = evaluated;
      const auto q = azi_over_ga(r);
      j["azi_over_ga"] = q ? json(*q) : json(nullptr);
      j["max_relative_error"] = r.max_relative_error;
      j["agree"] = r.max_relative_error <= kAgreement;
      doc["rows"].push_back(std::move(j));
    }
    doc["failures"] = failures;
    out << doc.dump(2) << '\n';
  } else {
    const bool full = c.format == "csv";
    std::vector<std::string> header = {"family", "n"};
    for (IndexId id : kAllIndices) header.emplace_back(index_name(id));
    header.insert(header.end(), {"AZI/GA", "max_rel_err", "agree"});
    std::vector<std::vector<std::string>> body;
    for (const auto& r : rows) {
      std::vector<std::string> row = {r.family, std::to_string(r.order)};
      for (IndexId id : kAllIndices) row.push_back(opt_cell(r.evaluated.get(id), full));
      const auto q = azi_over_ga(r);
      row.push_back(q ? (full ? shortest(*q) : fixed6(*q)) : "undefined");
      char err_buf[32];
      std::snprintf(err_buf, sizeof err_buf, "%.3g", r.max_relative_error);
      row.push_back(full ? shortest(r.max_relative_error) : err_buf);
      row.emplace_back(r.max_relative_error <= kAgreement ? "yes" : "NO");
      body.push_back(std::move(row));
    }
    if (full) {
      body.insert(body.begin(), header);
      write_csv(out, body);
    } else {
      TextTable t(header);
      for (auto& r : body) t.add(std::move(r));
      t.print(out);
      out << (failures ? std::to_string(failures) + " row(s) disagree" : "closed forms agree on every row")
          << '\n';
    }
  }
  return failures ? kVerdictMismatch : kOk;
}

// ---------------------------------------------------------------------------
// proofs

int cmd_proofs(int n, const std::string& expect_path, const CommonOptions& c, std::ostream& out) {
  if (n < 3 || n > 62) throw UsageError("--order must be in 3..62");
  const auto claims = proof_claims(n);
  const auto& cat = builtin_catalog();
  std::vector<ConcordanceResult> concordance;
  for (const auto& b : cat)
    if (b.is_two_index() && !b.strict && n >= b.pre.n_min)
      concordance.push_back(coefficient_concordance(b, n, b.pre.delta_min));
  const auto discrepancies = concordance_discrepancies(cat);

  const Expectations e = load_expectations(expect_path.empty() ? default_expectations_path() : expect_path);
  std::vector<std::string> found;
  for (const auto& d : discrepancies) found.push_back(d.bound_id);
  std::vector<std::string> pinned = e.concordance_discrepancies;
  std::sort(pinned.begin(), pinned.end());
  std::vector<std::string> found_sorted = found;
  std::sort(found_sorted.begin(), found_sorted.end());
  const bool discrepancies_match = pinned == found_sorted;
  const int refuted = static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const auto& cl) {
    return cl.status == ClaimStatus::refuted;
  }));

  if (c.format == "json") {
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["n"] = n;
    doc["claims"] = json::array();
    for (const auto& cl : claims) doc["claims"].push_back(to_json(cl));
    doc["concordance"] = json::array();
    for (const auto& cc : concordance) doc["concordance"].push_back(to_json(cc));
    doc["discrepancies"] = json::array();
    for (const auto& d : discrepancies) {
      json j;
      j["bound_id"] = d.bound_id;
      j["ever_tight"] = d.ever_tight;
      j["invalid_somewhere"] = d.first_invalid.has_value();
      j["example"] = to_json(d.example);
      doc["discrepancies"].push_back(std::move(j));
    }
    doc["discrepancies_match_expectations"] = discrepancies_match;
    doc["refuted_claims"] = refuted;
    out << doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows = {{"section", "id", "ratio_or_n", "claim_or_coefficient", "status", "observed"}};
    for (const auto& cl : claims)
      rows.push_back({"claim", cl.id, cl.ratio, cl.claim, std::string(claim_status_name(cl.status)), cl.observed});
    for (const auto& cc : concordance)
      rows.push_back({"concordance", cc.bound_id, std::to_string(cc.n), shortest(cc.coefficient),
                      std::string(concordance_name(cc.status)),
                      to_string(cc.extremum.location) + "=" + shortest(cc.extremum.value)});
    for (const auto& d : discrepancies)
      rows.push_back({"discrepancy", d.bound_id, std::to_string(d.example.n), shortest(d.example.coefficient),
                      d.first_invalid ? "invalid" : "never_tight",
                      to_string(d.example.extremum.location) + "=" + shortest(d.example.extremum.value)});
    write_csv(out, rows);
  } else {
    out << "edge-ratio claims at n = " << n << '\n';
    TextTable t({"id", "ratio", "claim", "status", "observed"});
    for (const auto& cl : claims)
      t.add({cl.id, cl.ratio, cl.claim, std::string(claim_status_name(cl.status)), cl.observed});
    t.print(out);
    out << "\ncoefficient vs grid extremum at n = " << n << '\n';
    TextTable cc_table({"bound", "delta", "coefficient", "extremum_at", "extremum", "status"});
    for (const auto& cc : concordance)
      cc_table.add({cc.bound_id, std::to_string(cc.delta), fixed6(cc.coefficient),
                    to_string(cc.extremum.location), fixed6(cc.extremum.value),
                    std::string(concordance_name(cc.status))});
    cc_table.print(out);
    out << "\ndiscrepancies (orders up to " << kConcordanceScanMaxOrder << "): "
        << (found.empty() ? "none" : join(found, ", "))
        << (discrepancies_match ? " [matches pinned list]" : " [DIFFERS from pinned list]") << '\n';
    for (const auto& d : discrepancies)
      out << "  " << d.bound_id << ": " << (d.first_invalid ? "coefficient exceeds the grid extremum"
                                                              : "coefficient never attained")
          << " (n=" << d.example.n << ", delta=" << d.example.delta << ", coefficient "
          << fixed6(d.example.coefficient) << ", extremum " << fixed6(d.example.extremum.value)
          << " at " << to_string(d.example.extremum.location) << ")\n";
  }
  return (refuted || !discrepancies_match) ? kVerdictMismatch : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-based topological indices and their inequalities", "degbound"};
  app.require_subcommand(1);

  CommonOptions compute_opts, audit_opts, verify_opts, families_opts, proofs_opts;
  PopulationOptions audit_pop, verify_pop;
  std::vector<std::string> compute_inputs;
  std::string compute_file, audit_bounds = "all", verify_bounds = "all", verify_expect,
                            proofs_expect, family_range = "3-200";
  int proofs_order = 20;

  auto* compute = app.add_subcommand("compute", "Index values of the given graphs");
  compute->add_option("graph", compute_inputs, "graph6 strings");
  compute->add_option("--file", compute_file, "graph6 lines or an edge-list file");
  add_common(compute, compute_opts, false);

  auto* audit_cmd = app.add_subcommand("audit", "Sharpness reports for bounds over a population");
  add_population(audit_cmd, audit_pop);
  audit_cmd->add_option("--bounds", audit_bounds, "Comma separated bound ids, or all");
  add_common(audit_cmd, audit_opts, true);

  auto* verify = app.add_subcommand("verify", "Audit and compare verdicts with pinned expectations");
  add_population(verify, verify_pop);
  verify->add_option("--bounds", verify_bounds, "Comma separated bound ids, or all");
  verify->add_option("--expect", verify_expect, "Expectation file (default: bundled)");
  add_common(verify, verify_opts, true);

  auto* families = app.add_subcommand("families", "Closed forms versus evaluation for P, C, K, S");
  families->add_option("--range", family_range, "Orders A-B (within 2..200)");
  add_common(families, families_opts, false);

  auto* proofs = app.add_subcommand("proofs", "Audit of the edge-ratio functions behind the bounds");
  proofs->add_option("--order", proofs_order, "Order n of the degree grid (3..62)");
  proofs->add_option("--expect", proofs_expect, "Expectation file (default: bundled)");
  add_common(proofs, proofs_opts, false);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(compute_inputs, compute_file, compute_opts, out);
    if (*audit_cmd) return cmd_audit_or_verify(false, audit_bounds, audit_pop, "", audit_opts, out, err);
    if (*verify)
      return cmd_audit_or_verify(true, verify_bounds, verify_pop, verify_expect, verify_opts, out, err);
    if (*families) return cmd_families(family_range, families_opts, out);
    if (*proofs) return cmd_proofs(proofs_order, proofs_expect, proofs_opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace degbound::cli
