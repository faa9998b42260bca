#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "degbound/errors.hpp"
#include "degbound/graph.hpp"

namespace degbound {

inline constexpr int kChromaticCap = 12;

namespace detail {

inline std::vector<std::uint64_t> small_rows(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v)[0];
  return rows;
}

// Greedy clique: repeatedly take the candidate of highest degree.
inline int greedy_clique_size(const std::vector<std::uint64_t>& rows) {
  const int n = static_cast<int>(rows.size());
  int best = n > 0 ? 1 : 0;
  for (int start = 0; start < n; ++start) {
    std::uint64_t cand = rows[start];
    int size = 1;
    while (cand) {
      int pick = -1, pick_deg = -1;
      for (std::uint64_t b = cand; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        const int d = std::popcount(rows[v] & cand);
        if (d > pick_deg) pick = v, pick_deg = d;
      }
      ++size;
      cand &= rows[pick];
    }
    best = std::max(best, size);
  }
  return best;
}

class Colourer {
 public:
  Colourer(const std::vector<std::uint64_t>& rows, int k) : rows_(rows), k_(k) {
    const int n = static_cast<int>(rows.size());
    order_.resize(n);
    for (int v = 0; v < n; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return std::popcount(rows[a]) > std::popcount(rows[b]);
    });
    classes_.assign(k, 0);
  }

  bool solve() { return place(0, 0); }

 private:
  bool place(std::size_t i, int used) {
    if (i == order_.size()) return true;
    const int v = order_[i];
    // A fresh colour is symmetric with every other fresh colour: try one.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (classes_[c] & rows_[v]) continue;
      classes_[c] |= std::uint64_t{1} << v;
      if (place(i + 1, std::max(used, c + 1))) return true;
      classes_[c] &= ~(std::uint64_t{1} << v);
    }
    return false;
  }

  const std::vector<std::uint64_t>& rows_;
  int k_;
  std::vector<int> order_;
  std::vector<std::uint64_t> classes_;
};

}  // namespace detail

/// Exact chromatic number by increasing-k backtracking, starting from a
/// greedy clique lower bound.
inline int chromatic_number(const Graph& g, int cap = kChromaticCap) {
  if (g.order() > cap || g.order() > 64)
    throw SizeLimitError("chromatic number search is capped at " + std::to_string(cap) +
                         " vertices, got " + std::to_string(g.order()));
  if (g.size() == 0) return 1;
  const auto rows = detail::small_rows(g);
  for (int k = detail::greedy_clique_size(rows);; ++k) {
    detail::Colourer c(rows, k);
    if (c.solve()) return k;
  }
}

}  // namespace degbound
