#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "degbound/errors.hpp"
#include "degbound/graph.hpp"

namespace degbound {

/// Vertex-degree-based indices. Each is a sum over edges ij of f(d_i, d_j).
enum class IndexId { R, H, ABC, X, GA, AZI, M2STAR };

inline constexpr std::array<IndexId, 7> kAllIndices = {
    IndexId::R, IndexId::H, IndexId::ABC, IndexId::X, IndexId::GA, IndexId::AZI, IndexId::M2STAR};

inline constexpr std::size_t index_slot(IndexId id) { return static_cast<std::size_t>(id); }

inline std::string_view index_name(IndexId id) {
  switch (id) {
    case IndexId::R: return "R";
    case IndexId::H: return "H";
    case IndexId::ABC: return "ABC";
    case IndexId::X: return "X";
    case IndexId::GA: return "GA";
    case IndexId::AZI: return "AZI";
    case IndexId::M2STAR: return "M2STAR";
  }
  return "?";
}

inline std::optional<IndexId> parse_index_name(std::string_view s) {
  for (IndexId id : kAllIndices)
    if (index_name(id) == s) return id;
  if (s == "M2*") return IndexId::M2STAR;
  return std::nullopt;
}

/// Edge summand at real-valued degrees (a, b).
///
///   R     1/sqrt(ab)           H    2/(a+b)
///   ABC   sqrt((a+b-2)/(ab))   X    1/sqrt(a+b)
///   GA    2 sqrt(ab)/(a+b)     AZI  (ab/(a+b-2))^3
///   M2*   1/(ab)
///
/// AZI is undefined when a + b = 2.
inline double edge_term(IndexId id, double a, double b) {
  const double s = a + b;
  const double p = a * b;
  switch (id) {
    case IndexId::R: return 1.0 / std::sqrt(p);
    case IndexId::H: return 2.0 / s;
    case IndexId::ABC: return std::sqrt((s - 2.0) / p);
    case IndexId::X: return 1.0 / std::sqrt(s);
    case IndexId::GA: return 2.0 * std::sqrt(p) / s;
    case IndexId::AZI: {
      if (s == 2.0) throw DomainError("AZI undefined on an isolated-edge component");
      const double q = p / (s - 2.0);
      return q * q * q;
    }
    case IndexId::M2STAR: return 1.0 / p;
  }
  throw std::invalid_argument("unknown index");
}

inline double edge_term(IndexId id, DegreePair p) {
  return edge_term(id, static_cast<double>(p.low), static_cast<double>(p.high));
}

struct IndexValue {
  IndexId index = IndexId::R;
  double value = 0.0;
};

/// Sum over the partition in ascending pair order.
inline IndexValue index_value(IndexId id, const EdgeDegreePartition& part) {
  double sum = 0.0;
  for (const auto& [p, k] : part) sum += k * edge_term(id, p);
  return {id, sum};
}

inline IndexValue index_value(IndexId id, const Graph& g) {
  return index_value(id, edge_degree_partition(g));
}

/// All seven index values of one graph. An undefined entry (AZI on a graph
/// with a K2 component) is nullopt.
class IndexTable {
 public:
  std::optional<double> get(IndexId id) const { return values_[index_slot(id)]; }
  bool defined(IndexId id) const { return values_[index_slot(id)].has_value(); }
  double at(IndexId id) const {
    const auto& v = values_[index_slot(id)];
    if (!v) throw DomainError(std::string(index_name(id)) + " is undefined on this graph");
    return *v;
  }
  void set(IndexId id, std::optional<double> v) { values_[index_slot(id)] = v; }

  friend bool operator==(const IndexTable&, const IndexTable&) = default;

 private:
  std::array<std::optional<double>, 7> values_{};
};

inline IndexTable all_indices(const EdgeDegreePartition& part) {
  std::array<double, 7> sums{};
  bool azi_ok = true;
  for (const auto& [p, k] : part) {
    for (IndexId id : kAllIndices) {
      if (id == IndexId::AZI && p.low + p.high == 2) {
        azi_ok = false;
        continue;
      }
      sums[index_slot(id)] += k * edge_term(id, p);
    }
  }
  IndexTable t;
  for (IndexId id : kAllIndices) t.set(id, sums[index_slot(id)]);
  if (!azi_ok) t.set(IndexId::AZI, std::nullopt);
  return t;
}

inline IndexTable all_indices(const Graph& g) { return all_indices(edge_degree_partition(g)); }

}  // namespace degbound
