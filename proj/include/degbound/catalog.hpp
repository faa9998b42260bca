#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degbound/coeff.hpp"
#include "degbound/graph.hpp"
#include "degbound/indices.hpp"

namespace degbound {

/// Quantity on the left of a bound: one of the seven indices, or the
/// chromatic number (which only ever appears on the small side of an upper
/// bound).
class Measure {
 public:
  static Measure of(IndexId id) { return Measure(static_cast<int>(id)); }
  static Measure chromatic() { return Measure(kChromatic); }

  bool is_chromatic() const noexcept { return code_ == kChromatic; }
  IndexId index() const {
    if (is_chromatic()) throw std::logic_error("chromatic number is not an index");
    return static_cast<IndexId>(code_);
  }
  std::string name() const { return is_chromatic() ? "CHI" : std::string(index_name(index())); }

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  static constexpr int kChromatic = 100;
  explicit Measure(int code) : code_(code) {}
  int code_;
};

enum class Direction {
  upper,  // lhs <= coeff * rhs
  lower,  // coeff * rhs <= lhs
};

struct Preconditions {
  int n_min = 2;
  bool require_connected = true;
  int delta_min = 1;
  bool molecular_only = false;
  std::vector<FamilyId> exclusions;
  /// Δ - δ must not exceed this expression (evaluated at the graph's n, δ).
  std::optional<Coeff> spread_cap;
};

/// The extremal family a bound claims equality on. `order` pins a specific
/// member (P2, C3, S1,8); nullopt means "every member of this shape", with
/// regular meaning the graph is regular of its own minimum degree.
struct EqualityClaim {
  enum class Kind { none, path, cycle, complete, star, regular };
  Kind kind = Kind::none;
  std::optional<int> param;

  static EqualityClaim none() { return {}; }
  static EqualityClaim path(int n) { return {Kind::path, n}; }
  static EqualityClaim cycle(std::optional<int> n = std::nullopt) { return {Kind::cycle, n}; }
  static EqualityClaim complete() { return {Kind::complete, std::nullopt}; }
  static EqualityClaim star(std::optional<int> leaves = std::nullopt) { return {Kind::star, leaves}; }
  static EqualityClaim regular() { return {Kind::regular, std::nullopt}; }

  std::string describe() const {
    switch (kind) {
      case Kind::none: return "none";
      case Kind::path: return "P" + std::to_string(param.value_or(0));
      case Kind::cycle: return param ? "C" + std::to_string(*param) : "Cn";
      case Kind::complete: return "Kn";
      case Kind::star: return param ? "S1," + std::to_string(*param) : "S1,n-1";
      case Kind::regular: return "delta-regular";
    }
    return "?";
  }

  /// Structural membership test.
  bool contains(const Graph& g) const {
    switch (kind) {
      case Kind::none: return false;
      case Kind::path: return g.order() == param.value_or(-1) && is_path(g);
      case Kind::cycle: return is_cycle(g) && (!param || g.order() == *param);
      case Kind::complete: return is_complete(g);
      case Kind::star: {
        auto k = star_leaves(g);
        return k && (!param || *k == *param);
      }
      case Kind::regular: return is_regular(g) && is_connected(g);
    }
    return false;
  }
};

/// One inequality between two degree-based quantities.
///
/// A chain bound (non-empty `chain`) is the conjunction of its links; its own
/// lhs/rhs/coeff are unused.
struct BoundSpec {
  std::string id;
  Measure lhs = Measure::of(IndexId::GA);
  IndexId rhs = IndexId::X;
  Coeff coeff;
  Direction direction = Direction::upper;
  bool strict = false;
  Preconditions pre;
  EqualityClaim claim;
  std::string citation;
  std::string statement;
  std::vector<BoundSpec> chain;

  bool is_chain() const noexcept { return !chain.empty(); }
  bool is_two_index() const { return !is_chain() && !lhs.is_chromatic(); }
};

namespace detail {

inline BoundSpec make_bound(std::string id, Measure lhs, IndexId rhs, Coeff coeff, Direction dir,
                            Preconditions pre, EqualityClaim claim, std::string citation,
                            std::string statement, bool strict = false) {
  BoundSpec b;
  b.id = std::move(id);
  b.lhs = lhs;
  b.rhs = rhs;
  b.coeff = std::move(coeff);
  b.direction = dir;
  b.strict = strict;
  b.pre = std::move(pre);
  b.claim = claim;
  b.citation = std::move(citation);
  b.statement = std::move(statement);
  return b;
}

inline Preconditions order_at_least(int n) {
  Preconditions p;
  p.n_min = n;
  return p;
}

inline Preconditions min_degree_at_least(int d, int n = 3) {
  Preconditions p;
  p.n_min = n;
  p.delta_min = d;
  return p;
}

inline std::vector<BoundSpec> build_catalog() {
  using I = IndexId;
  using D = Direction;
  using E = EqualityClaim;
  const Coeff n = Coeff::order();
  const Coeff d = Coeff::min_degree();
  const Coeff one = Coeff::constant(1);
  const Coeff two = Coeff::constant(2);
  auto M = [](I id) { return Measure::of(id); };
  auto c = [](long p, long q = 1) { return Coeff::constant(p, q); };

  const auto any = order_at_least(2);
  const auto n3 = order_at_least(3);
  const auto d2 = min_degree_at_least(2);

  std::vector<BoundSpec> cat;
  auto add = [&](BoundSpec b) { cat.push_back(std::move(b)); };

  // GA against X, R, H.
  add(make_bound("T1L", M(I::GA), I::X, sqrt(two), D::lower, any, E::path(2), "Theorem 1",
                 "sqrt(2) X(G) <= GA(G)"));
  add(make_bound("T1U", M(I::GA), I::X, sqrt(2 * (n - 1)), D::upper, any, E::complete(),
                 "Theorem 1", "GA(G) <= sqrt(2(n-1)) X(G)"));
  add(make_bound("C1", M(I::GA), I::X, sqrt(2 * d), D::lower, d2, E::regular(), "Corollary 1",
                 "sqrt(2 delta) X(G) <= GA(G)"));
  add(make_bound("T2L", M(I::GA), I::R, one, D::lower, any, E::path(2), "Theorem 2",
                 "R(G) <= GA(G)"));
  add(make_bound("T2U", M(I::GA), I::R, n - 1, D::upper, any, E::complete(), "Theorem 2",
                 "GA(G) <= (n-1) R(G)"));
  add(make_bound("C2", M(I::GA), I::R, d, D::lower, d2, E::regular(), "Corollary 2",
                 "delta R(G) <= GA(G)"));
  add(make_bound("C3L", M(I::GA), I::R, sqrt(c(4, 3)), D::lower, n3, E::path(3),
                 "Corollary 3 (first)", "sqrt(4/3) R(G) <= GA(G)"));
  add(make_bound("C3U", M(I::GA), I::R, n - 1, D::upper, n3, E::complete(),
                 "Corollary 3 (first)", "GA(G) <= (n-1) R(G)"));
  add(make_bound("EXT-ZT", M(I::X), I::R, sqrt(c(2, 3)), D::lower, n3, E::path(3),
                 "external, quoted before Corollary 3", "sqrt(2/3) R(G) <= X(G)"));
  add(make_bound("T3L", M(I::GA), I::H, one, D::lower, any, E::path(2), "Theorem 3",
                 "H(G) <= GA(G)"));
  add(make_bound("T3U", M(I::GA), I::H, n - 1, D::upper, any, E::complete(), "Theorem 3",
                 "GA(G) <= (n-1) H(G)"));
  add(make_bound("C3b", M(I::GA), I::H, d, D::lower, d2, E::regular(),
                 "Corollary 3 (second), inequality (1)", "delta H(G) <= GA(G)"));

  // ABC against GA.
  add(make_bound("T4L", M(I::ABC), I::GA, sqrt(2 * (n - 2)) / (n - 1), D::lower, d2,
                 E::complete(), "Theorem 4", "sqrt(2(n-2))/(n-1) GA(G) <= ABC(G)"));
  add(make_bound("T4U", M(I::ABC), I::GA, (n + 1) / (4 * sqrt(n - 1)), D::upper, d2,
                 E::cycle(3), "Theorem 4", "ABC(G) <= (n+1)/(4 sqrt(n-1)) GA(G)"));

  // The external chain H <= R <= X < ABC, for delta >= 2.
  add(make_bound("EXT-2a", M(I::H), I::R, one, D::upper, d2, E::regular(), "inequality (2)",
                 "H(G) <= R(G)"));
  add(make_bound("EXT-2b", M(I::R), I::X, one, D::upper, d2, E::cycle(), "inequality (2)",
                 "R(G) <= X(G)"));
  add(make_bound("EXT-2c", M(I::X), I::ABC, one, D::upper, d2, E::none(), "inequality (2)",
                 "X(G) < ABC(G)", true));
  {
    BoundSpec chain;
    chain.id = "C4";
    chain.pre = d2;
    chain.citation = "Corollary 4";
    chain.statement = "H(G) <= R(G) <= X(G) < ABC(G) <= (n+1)/(4 sqrt(n-1)) GA(G)";
    for (const auto& link : cat)
      if (link.id == "EXT-2a" || link.id == "EXT-2b" || link.id == "EXT-2c" || link.id == "T4U")
        chain.chain.push_back(link);
    add(std::move(chain));
  }

  // GA > ABC, three sufficient conditions.
  {
    Preconditions p;
    p.molecular_only = true;
    p.exclusions = {FamilyId::star(4), FamilyId::double_star_t()};
    add(make_bound("EXT-3(i)", M(I::ABC), I::GA, one, D::upper, p, E::none(),
                   "inequality (3), Corollary 5 (i)", "GA(G) > ABC(G), molecular, G != K1,4, T*",
                   true));
    Preconditions q;
    q.exclusions = {FamilyId::star(4), FamilyId::double_star_t()};
    q.spread_cap = c(3);
    add(make_bound("EXT-3(ii)", M(I::ABC), I::GA, one, D::upper, q, E::none(),
                   "inequality (3), Corollary 5 (ii)",
                   "GA(G) > ABC(G), Delta-delta <= 3, G != K1,4, T*", true));
    Preconditions r = d2;
    r.spread_cap = pow(2 * d - 1, 2);
    add(make_bound("EXT-3(iii)", M(I::ABC), I::GA, one, D::upper, r, E::none(),
                   "inequality (3), Corollary 5 (iii)",
                   "GA(G) > ABC(G), delta >= 2, Delta-delta <= (2 delta - 1)^2", true));
  }

  // Chromatic number.
  add(make_bound("EXT-4", Measure::chromatic(), I::H, two, D::upper, any, E::complete(),
                 "inequality (4)", "chi(G) <= 2 H(G)"));
  add(make_bound("C6", Measure::chromatic(), I::GA, 2 / d, D::upper, d2, E::complete(),
                 "Corollary 6", "chi(G) <= (2/delta) GA(G)"));

  // Modified second Zagreb index.
  add(make_bound("T5-(5)L", M(I::R), I::M2STAR, one, D::lower, any, E::path(2), "Theorem 5 (5)",
                 "M2*(G) <= R(G)"));
  add(make_bound("T5-(5)U", M(I::R), I::M2STAR, n - 1, D::upper, any, E::complete(),
                 "Theorem 5 (5)", "R(G) <= (n-1) M2*(G)"));
  add(make_bound("T5-(6)L", M(I::X), I::M2STAR, 1 / sqrt(two), D::lower, any, E::path(2),
                 "Theorem 5 (6)", "M2*(G)/sqrt(2) <= X(G)"));
  add(make_bound("T5-(6)U", M(I::X), I::M2STAR, pow(n - 1, 3, 2) / sqrt(two), D::upper, any,
                 E::complete(), "Theorem 5 (6)", "X(G) <= (n-1)^(3/2)/sqrt(2) M2*(G)"));
  add(make_bound("T5-(7)L", M(I::H), I::M2STAR, one, D::lower, any, E::path(2), "Theorem 5 (7)",
                 "M2*(G) <= H(G)"));
  add(make_bound("T5-(7)U", M(I::H), I::M2STAR, n - 1, D::upper, any, E::complete(),
                 "Theorem 5 (7)", "H(G) <= (n-1) M2*(G)"));
  add(make_bound("T5-(8)L", M(I::GA), I::M2STAR, one, D::lower, any, E::path(2),
                 "Theorem 5 (8)", "M2*(G) <= GA(G)"));
  add(make_bound("T5-(8)U", M(I::GA), I::M2STAR, pow(n - 1, 2), D::upper, any, E::complete(),
                 "Theorem 5 (8)", "GA(G) <= (n-1)^2 M2*(G)"));
  add(make_bound("T5-(9)L", M(I::ABC), I::M2STAR, sqrt(two), D::lower, n3, E::path(3),
                 "Theorem 5 (9)", "sqrt(2) M2*(G) <= ABC(G)"));
  add(make_bound("T5-(9)U", M(I::ABC), I::M2STAR, (n - 1) * sqrt(2 * (n - 2)), D::upper, n3,
                 E::complete(), "Theorem 5 (9)", "ABC(G) <= (n-1) sqrt(2(n-2)) M2*(G)"));

  add(make_bound("C7-(10)", M(I::R), I::M2STAR, d, D::lower, d2, E::regular(),
                 "Corollary 7 (10)", "delta M2*(G) <= R(G)"));
  add(make_bound("C7-(11)", M(I::X), I::M2STAR, pow(d, 3, 2) / sqrt(two), D::lower, d2,
                 E::regular(), "Corollary 7 (11)", "delta^(3/2)/sqrt(2) M2*(G) <= X(G)"));
  add(make_bound("C7-(12)", M(I::H), I::M2STAR, sqrt(d), D::lower, d2, E::regular(),
                 "Corollary 7 (12)", "sqrt(delta) M2*(G) <= H(G)"));
  add(make_bound("C7-(13)", M(I::GA), I::M2STAR, pow(d, 2), D::lower, d2, E::regular(),
                 "Corollary 7 (13)", "delta^2 M2*(G) <= GA(G)"));
  add(make_bound("C7-(14)", M(I::ABC), I::M2STAR, d * sqrt(2 * (d - 1)), D::lower, d2,
                 E::regular(), "Corollary 7 (14)", "delta sqrt(2(delta-1)) M2*(G) <= ABC(G)"));

  // Augmented Zagreb index.
  add(make_bound("T6L", M(I::AZI), I::X, c(1536, 343), D::lower, n3, E::star(8), "Theorem 6",
                 "1536/343 X(G) <= AZI(G)"));
  add(make_bound("T6U", M(I::AZI), I::X, pow(n - 1, 13, 2) / (sqrt(c(32)) * pow(n - 2, 3)),
                 D::upper, n3, E::complete(), "Theorem 6",
                 "AZI(G) <= (n-1)^(13/2)/(sqrt(32)(n-2)^3) X(G)"));
  add(make_bound("C8", M(I::AZI), I::X, pow(d, 13, 2) / (sqrt(c(32)) * pow(d - 1, 3)),
                 D::lower, d2, E::regular(), "Corollary 8",
                 "delta^(13/2)/(sqrt(32)(delta-1)^3) X(G) <= AZI(G)"));

  const Coeff azi_upper_rh = pow(n - 1, 7) / (8 * pow(n - 2, 3));
  add(make_bound("T7-(17)L", M(I::AZI), I::R, 343 * sqrt(c(7)) / 216, D::lower, n3, E::star(7),
                 "Theorem 7 (17)", "343 sqrt(7)/216 R(G) <= AZI(G)"));
  add(make_bound("T7-(17)U", M(I::AZI), I::R, azi_upper_rh, D::upper, n3, E::complete(),
                 "Theorem 7 (17)", "AZI(G) <= (n-1)^7/(8(n-2)^3) R(G)"));
  add(make_bound("T7-(18)L", M(I::AZI), I::H, c(375, 64), D::lower, n3, E::star(5),
                 "Theorem 7 (18)", "375/64 H(G) <= AZI(G)"));
  add(make_bound("T7-(18)U", M(I::AZI), I::H, azi_upper_rh, D::upper, n3, E::complete(),
                 "Theorem 7 (18)", "AZI(G) <= (n-1)^7/(8(n-2)^3) H(G)"));
  add(make_bound("T7-(19)L", M(I::AZI), I::ABC, pow((n - 1) / (n - 2), 7, 2), D::lower, n3,
                 E::star(), "Theorem 7 (19)", "((n-1)/(n-2))^(7/2) ABC(G) <= AZI(G)"));
  add(make_bound("T7-(19)U", M(I::AZI), I::ABC, pow(pow(n - 1, 2) / (2 * (n - 2)), 7, 2),
                 D::upper, n3, E::complete(), "Theorem 7 (19)",
                 "AZI(G) <= ((n-1)^2/(2(n-2)))^(7/2) ABC(G)"));
  add(make_bound("T7-(20)L", M(I::AZI), I::GA, c(8), D::lower, d2, E::cycle(), "Theorem 7 (20)",
                 "8 GA(G) <= AZI(G), delta >= 2"));
  add(make_bound("T7-(20)U", M(I::AZI), I::GA, pow(n - 1, 6) / (8 * pow(n - 2, 3)), D::upper,
                 d2, E::complete(), "Theorem 7 (20)",
                 "AZI(G) <= (n-1)^6/(8(n-2)^3) GA(G), delta >= 2"));
  add(make_bound("T7-(21)L", M(I::AZI), I::M2STAR, c(4), D::lower, n3, E::path(3),
                 "Theorem 7 (21)", "4 M2*(G) <= AZI(G)"));
  add(make_bound("T7-(21)U", M(I::AZI), I::M2STAR, pow(n - 1, 4) / (2 * (n - 2)), D::upper, n3,
                 E::complete(), "Theorem 7 (21)", "AZI(G) <= (n-1)^4/(2(n-2)) M2*(G)"));

  const Coeff azi_lower_rh = pow(d, 7) / (8 * pow(d - 1, 3));
  add(make_bound("C9-(22)", M(I::AZI), I::R, azi_lower_rh, D::lower, d2, E::regular(),
                 "Corollary 9 (22)", "delta^7/(8(delta-1)^3) R(G) <= AZI(G)"));
  add(make_bound("C9-(23)", M(I::AZI), I::H, azi_lower_rh, D::lower, d2, E::regular(),
                 "Corollary 9 (23)", "delta^7/(8(delta-1)^3) H(G) <= AZI(G)"));
  add(make_bound("C9-(24)", M(I::AZI), I::ABC, pow(pow(d, 2) / (2 * (d - 1)), 7, 2), D::lower,
                 d2, E::regular(), "Corollary 9 (24)",
                 "(delta^2/(2(delta-1)))^(7/2) ABC(G) <= AZI(G)"));
  add(make_bound("C9-(25)", M(I::AZI), I::GA, pow(d, 6) / (8 * pow(d - 1, 3)), D::lower, d2,
                 E::regular(), "Corollary 9 (25)", "delta^6/(8(delta-1)^3) GA(G) <= AZI(G)"));
  add(make_bound("C9-(26)", M(I::AZI), I::M2STAR, pow(d, 4) / (2 * (d - 1)), D::lower, d2,
                 E::regular(), "Corollary 9 (26)", "delta^4/(2(delta-1)) M2*(G) <= AZI(G)"));
  return cat;
}

}  // namespace detail

/// Every inequality known to the tool, in a fixed order.
inline const std::vector<BoundSpec>& builtin_catalog() {
  static const std::vector<BoundSpec> catalog = detail::build_catalog();
  return catalog;
}

inline const BoundSpec* find_bound(std::string_view id) {
  for (const auto& b : builtin_catalog())
    if (b.id == id) return &b;
  return nullptr;
}

/// Resolves a comma separated selection. "all" selects the whole catalog; a
/// name that is not an id but prefixes "<name>L" / "<name>U" ids selects both
/// halves of the pair (so "T1" means T1L,T1U). Unknown names throw.
inline std::vector<BoundSpec> select_bounds(std::string_view list) {
  const auto& cat = builtin_catalog();
  if (list == "all" || list.empty()) return cat;
  std::vector<std::string> wanted;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    std::string name(list.substr(start, comma == std::string_view::npos ? list.npos : comma - start));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (!name.empty()) wanted.push_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::vector<std::string> ids;
  for (const auto& name : wanted) {
    if (find_bound(name)) {
      ids.push_back(name);
      continue;
    }
    bool hit = false;
    for (const char* suffix : {"L", "U"})
      if (find_bound(name + suffix)) ids.push_back(name + suffix), hit = true;
    if (!hit) throw std::invalid_argument("unknown bound id '" + name + "'");
  }
  std::vector<BoundSpec> out;
  for (const auto& b : cat)
    if (std::find(ids.begin(), ids.end(), b.id) != ids.end()) out.push_back(b);
  return out;
}

}  // namespace degbound
