#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "degbound/errors.hpp"
#include "degbound/graph.hpp"
#include "degbound/graph6.hpp"

namespace degbound {

inline constexpr int kCanonicalMaxOrder = 10;

/// Lexicographically smallest graph6 string over all relabelings. Two
/// graphs have equal forms iff they are isomorphic.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// For a fixed order, comparing graph6 strings is comparing the upper-triangle
// bit sequence in column order. Column j of a relabeling holds the j bits
// adj(perm[0], perm[j]) .. adj(perm[j-1], perm[j]), first bit most
// significant, so the sequence is minimized column by column with a
// branch-and-bound over partial permutations.
class CanonicalSearch {
 public:
  CanonicalSearch(int n, const std::uint64_t* rows) : n_(n), rows_(rows) {}

  std::uint64_t run() {
    have_best_ = false;
    descend(0, 0, false);
    std::uint64_t key = 0;
    for (int j = 1; j < n_; ++j) key = (key << j) | best_[j];
    return key;
  }

 private:
  // Returns true when the best sequence was replaced inside this subtree;
  // the new best then shares the current prefix.
  bool descend(int pos, std::uint32_t used, bool tight) {
    if (pos == n_) {
      if (have_best_ && tight) return false;
      for (int j = 0; j < n_; ++j) best_[j] = cols_[j];
      have_best_ = true;
      return true;
    }
    struct Cand {
      std::uint32_t col;
      int v;
    } cand[kCanonicalMaxOrder + 6];
    int k = 0;
    for (int v = 0; v < n_; ++v) {
      if (used >> v & 1U) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < pos; ++i) col = (col << 1) | static_cast<std::uint32_t>(rows_[v] >> perm_[i] & 1U);
      int at = k++;
      while (at > 0 && cand[at - 1].col > col) {
        cand[at] = cand[at - 1];
        --at;
      }
      cand[at] = {col, v};
    }
    bool updated = false;
    for (int c = 0; c < k; ++c) {
      bool child_tight = false;
      if (have_best_ && tight) {
        if (cand[c].col > best_[pos]) break;
        child_tight = cand[c].col == best_[pos];
      }
      perm_[pos] = cand[c].v;
      cols_[pos] = cand[c].col;
      if (descend(pos + 1, used | (1U << cand[c].v), child_tight)) {
        updated = true;
        tight = true;
      }
    }
    return updated;
  }

  int n_;
  const std::uint64_t* rows_;
  bool have_best_ = false;
  int perm_[kCanonicalMaxOrder + 6] = {};
  std::uint32_t cols_[kCanonicalMaxOrder + 6] = {};
  std::uint32_t best_[kCanonicalMaxOrder + 6] = {};
};

/// Canonical bit sequence of a graph given as adjacency rows (n <= 10).
inline std::uint64_t canonical_key(int n, const std::uint64_t* rows) {
  if (n <= 1) return 0;
  return CanonicalSearch(n, rows).run();
}

inline Graph graph_from_key(int n, std::uint64_t key) {
  const int bits = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (key >> (bits - 1 - k) & 1U) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace detail

/// Canonical labeling of g: the relabeling whose graph6 string is smallest.
inline Graph canonical_graph(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw SizeLimitError("canonical form is capped at " + std::to_string(kCanonicalMaxOrder) +
                         " vertices, got " + std::to_string(g.order()));
  std::vector<std::uint64_t> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v)[0];
  return detail::graph_from_key(g.order(), detail::canonical_key(g.order(), rows.data()));
}

inline CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_graph(g))}; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace degbound
