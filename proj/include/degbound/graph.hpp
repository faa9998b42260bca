#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degbound {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one bitset row per vertex (a single 64-bit word per
/// row up to 64 vertices). The edge list is normalized to u < v and sorted.
/// Instances are immutable once built.
class Graph {
 public:
  /// The single-vertex graph K1.
  Graph() : Graph(1, std::span<const Edge>{}) {}

  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    words_ = (n + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
    degrees_.assign(n, 0);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                    std::to_string(v));
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (test(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
      set(u, v);
      set(v, u);
      ++degrees_[u];
      ++degrees_[v];
      edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  bool adjacent(Vertex u, Vertex v) const { return test(u, v); }
  int degree(Vertex v) const { return degrees_.at(v); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(degrees_.at(v));
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = rows_[static_cast<std::size_t>(v) * words_ + w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Row of the adjacency bitset; `words()` 64-bit words per vertex.
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  int words() const noexcept { return words_; }

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
      throw std::invalid_argument("permutation size does not match graph order");
    std::vector<bool> seen(n_, false);
    for (int p : perm) {
      if (p < 0 || p >= n_ || seen[p]) throw std::invalid_argument("not a permutation");
      seen[p] = true;
    }
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (auto [u, v] : edges_) out.emplace_back(perm[u], perm[v]);
    return Graph(n_, out);
  }

  /// Labeled equality (same order, same edge set).
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  bool test(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void set(int u, int v) {
    rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }

  int n_ = 1;
  int words_ = 1;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degrees_;
  std::vector<Edge> edges_;
};

/// Unordered pair of endpoint degrees, stored with low <= high.
struct DegreePair {
  int low = 1;
  int high = 1;

  static DegreePair of(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("degrees in a pair must be >= 1");
    return a <= b ? DegreePair{a, b} : DegreePair{b, a};
  }

  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

inline std::string to_string(DegreePair p) {
  return "(" + std::to_string(p.low) + "," + std::to_string(p.high) + ")";
}

/// Multiset of edge degree pairs. Iteration is in ascending pair order.
class EdgeDegreePartition {
 public:
  using Entries = std::map<DegreePair, int>;

  EdgeDegreePartition() = default;
  explicit EdgeDegreePartition(Entries entries) : entries_(std::move(entries)) {
    for (const auto& [p, k] : entries_)
      if (k < 1) throw std::invalid_argument("partition multiplicities must be positive");
  }

  void add(DegreePair p, int count = 1) { entries_[p] += count; }

  const Entries& entries() const noexcept { return entries_; }
  int multiplicity(DegreePair p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
  }
  int total() const {
    int s = 0;
    for (const auto& [p, k] : entries_) s += k;
    return s;
  }
  bool empty() const noexcept { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const EdgeDegreePartition&, const EdgeDegreePartition&) = default;

 private:
  Entries entries_;
};

inline std::vector<int> degree_sequence(const Graph& g) { return g.degrees(); }

inline EdgeDegreePartition edge_degree_partition(const Graph& g) {
  EdgeDegreePartition part;
  for (auto [u, v] : g.edges()) part.add(DegreePair::of(g.degree(u), g.degree(v)));
  return part;
}

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  const int words = g.words();
  std::vector<std::uint64_t> seen(words, 0), frontier(words, 0);
  seen[0] = frontier[0] = 1;
  int reached = 1;
  std::vector<std::uint64_t> next(words);
  while (true) {
    std::fill(next.begin(), next.end(), 0);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        const int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        auto row = g.row(v);
        for (int x = 0; x < words; ++x) next[x] |= row[x];
      }
    }
    bool grew = false;
    for (int w = 0; w < words; ++w) {
      next[w] &= ~seen[w];
      if (next[w]) grew = true;
      seen[w] |= next[w];
      reached += std::popcount(next[w]);
    }
    if (!grew) break;
    frontier.swap(next);
  }
  return reached == n;
}

inline int min_degree(const Graph& g) {
  return *std::min_element(g.degrees().begin(), g.degrees().end());
}

inline int max_degree(const Graph& g) {
  return *std::max_element(g.degrees().begin(), g.degrees().end());
}

inline bool is_regular(const Graph& g, std::optional<int> d = std::nullopt) {
  const int lo = min_degree(g);
  if (lo != max_degree(g)) return false;
  return !d || *d == lo;
}

/// Maximum degree at most 4.
inline bool is_molecular(const Graph& g) { return max_degree(g) <= 4; }

// Structural recognizers. All of them are label independent.

inline bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

inline bool is_path(const Graph& g) {
  if (g.order() == 1) return true;
  return g.size() == g.order() - 1 && max_degree(g) <= 2 && is_connected(g);
}

inline bool is_cycle(const Graph& g) {
  return g.order() >= 3 && is_regular(g, 2) && is_connected(g);
}

/// Number of leaves if g is the star K_{1,k} (k >= 1), otherwise nullopt.
inline std::optional<int> star_leaves(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.size() != n - 1) return std::nullopt;
  if (max_degree(g) != n - 1) return std::nullopt;
  return n - 1;
}

/// The 8-vertex tree made of two adjacent centres of degree 4, each carrying
/// three pendant vertices.
inline bool is_double_star_t(const Graph& g) {
  if (g.order() != 8 || g.size() != 7 || !is_connected(g)) return false;
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d == std::vector<int>{1, 1, 1, 1, 1, 1, 4, 4};
}

enum class FamilyKind { path, cycle, complete, star, double_star_t, regular };

/// Named graph family member. `param` is the order for path, cycle, complete
/// and regular, and the number of leaves for star. `degree` is only used by
/// `regular`.
struct FamilyId {
  FamilyKind kind = FamilyKind::path;
  int param = 1;
  int degree = 0;

  static FamilyId path(int n) { return {FamilyKind::path, n, 0}; }
  static FamilyId cycle(int n) { return {FamilyKind::cycle, n, 0}; }
  static FamilyId complete(int n) { return {FamilyKind::complete, n, 0}; }
  static FamilyId star(int leaves) { return {FamilyKind::star, leaves, 0}; }
  static FamilyId double_star_t() { return {FamilyKind::double_star_t, 8, 0}; }
  static FamilyId regular(int n, int d) { return {FamilyKind::regular, n, d}; }

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

inline std::string to_string(const FamilyId& f) {
  switch (f.kind) {
    case FamilyKind::path: return "P" + std::to_string(f.param);
    case FamilyKind::cycle: return "C" + std::to_string(f.param);
    case FamilyKind::complete: return "K" + std::to_string(f.param);
    case FamilyKind::star: return "S1," + std::to_string(f.param);
    case FamilyKind::double_star_t: return "T*";
    case FamilyKind::regular:
      return std::to_string(f.degree) + "-regular(" + std::to_string(f.param) + ")";
  }
  return "?";
}

/// Canonical labeled member of a family.
///
/// Path(n): 0-1-...-(n-1). Cycle(n): path plus (n-1)-0. Star(k): centre 0,
/// leaves 1..k. T*: centres 0 and 1, leaves 2-4 on 0 and 5-7 on 1.
/// Regular(n,d): circulant graph, i ~ i±1..i±d/2, plus i ~ i+n/2 for odd d.
inline Graph make_family(const FamilyId& f) {
  std::vector<Edge> e;
  switch (f.kind) {
    case FamilyKind::path:
      if (f.param < 1) throw std::invalid_argument("Path(n) needs n >= 1");
      for (int i = 0; i + 1 < f.param; ++i) e.emplace_back(i, i + 1);
      return Graph(f.param, e);
    case FamilyKind::cycle:
      if (f.param < 3) throw std::invalid_argument("Cycle(n) needs n >= 3");
      for (int i = 0; i + 1 < f.param; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(0, f.param - 1);
      return Graph(f.param, e);
    case FamilyKind::complete:
      if (f.param < 1) throw std::invalid_argument("Complete(n) needs n >= 1");
      for (int u = 0; u < f.param; ++u)
        for (int v = u + 1; v < f.param; ++v) e.emplace_back(u, v);
      return Graph(f.param, e);
    case FamilyKind::star:
      if (f.param < 1) throw std::invalid_argument("Star(k) needs k >= 1");
      for (int v = 1; v <= f.param; ++v) e.emplace_back(0, v);
      return Graph(f.param + 1, e);
    case FamilyKind::double_star_t:
      e = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}};
      return Graph(8, e);
    case FamilyKind::regular: {
      const int n = f.param, d = f.degree;
      if (n < 1 || d < 0 || d >= n || (d % 2 == 1 && n % 2 == 1))
        throw std::invalid_argument("Regular(n,d) needs 0 <= d < n and n*d even");
      for (int i = 0; i < n; ++i)
        for (int s = 1; s <= d / 2; ++s) {
          const int j = (i + s) % n;
          e.emplace_back(std::min(i, j), std::max(i, j));
        }
      if (d % 2 == 1)
        for (int i = 0; i < n / 2; ++i) e.emplace_back(i, i + n / 2);
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      return Graph(n, e);
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace degbound
