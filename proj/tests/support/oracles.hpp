#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library except the Graph container itself.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "degbound/graph.hpp"

namespace oracle {

using degbound::Graph;

// Index values straight from their per-edge definitions.
struct Indices {
  double R = 0, H = 0, ABC = 0, X = 0, GA = 0, M2STAR = 0;
  std::optional<double> AZI = 0.0;
};

inline Indices indices(const Graph& g) {
  Indices s;
  for (auto [u, v] : g.edges()) {
    const double a = g.degree(u), b = g.degree(v);
    s.R += 1.0 / std::sqrt(a * b);
    s.H += 2.0 / (a + b);
    s.ABC += std::sqrt((a + b - 2.0) / (a * b));
    s.X += 1.0 / std::sqrt(a + b);
    s.GA += 2.0 * std::sqrt(a * b) / (a + b);
    s.M2STAR += 1.0 / (a * b);
    if (a + b == 2.0)
      s.AZI.reset();
    else if (s.AZI)
      *s.AZI += std::pow(a * b / (a + b - 2.0), 3);
  }
  return s;
}

// Upper-triangle adjacency bits in column order, as a '0'/'1' string. For a
// fixed order this orders graphs the same way graph6 does.
inline std::string bits(int n, const std::vector<std::vector<bool>>& adj) {
  std::string s;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) s += adj[i][j] ? '1' : '0';
  return s;
}

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

// Minimum bit string over every relabeling. Factorial cost; n <= 7.
inline std::string canonical_bits(const Graph& g) {
  const int n = g.order();
  const auto adj = matrix(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::vector<std::vector<bool>> q(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q[p[i]][p[j]] = adj[i][j];
    auto s = bits(n, q);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = n;
  for (auto [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

// Connected isomorphism classes of order n by canonicalizing every edge
// subset with the factorial search above. Practical for n <= 6.
inline std::vector<std::string> naive_connected_classes(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::vector<std::string> keys;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) e.push_back(slots[k]);
    if (!connected(n, e)) continue;
    keys.push_back(canonical_bits(Graph(n, e)));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

// Counts of connected unlabeled graphs of order 1..max_n. Burnside's lemma
// gives all graphs (average of 2^(pair cycles) over S_n); the inverse Euler
// transform then extracts the connected ones.
inline std::vector<long long> burnside_connected_counts(int max_n) {
  std::vector<long long> all(max_n + 1, 0);
  all[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long double sum = 0;
    long long perms = 0;
    do {
      std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
      int cycles = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (seen[i][j]) continue;
          ++cycles;
          int a = i, b = j;
          while (!seen[a][b]) {
            seen[a][b] = seen[b][a] = true;
            a = p[a];
            b = p[b];
          }
        }
      sum += std::ldexp(1.0L, cycles);
      ++perms;
    } while (std::next_permutation(p.begin(), p.end()));
    all[n] = std::llround(sum / perms);
  }
  std::vector<long long> b(max_n + 1, 0), conn(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    long long t = n * all[n];
    for (int k = 1; k < n; ++k) t -= b[k] * all[n - k];
    b[n] = t;
    long long c = b[n];
    for (int d = 1; d < n; ++d)
      if (n % d == 0) c -= d * conn[d];
    conn[n] = c / n;
  }
  return conn;
}

// Chromatic number by trying every colouring with k colours, k = 1, 2, ...
inline int brute_chromatic(const Graph& g) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : g.edges())
        if (col[u] == col[v]) {
          ok = false;
          break;
        }
      if (ok) return k;
      int i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  // A random spanning tree plus random extra edges.
  std::vector<std::pair<int, int>> e;
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    e.emplace_back(u, v);
    has[u][v] = true;
  }
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!has[i][j] && coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace oracle
