#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "degbound/canonical.hpp"
#include "degbound/errors.hpp"
#include "degbound/graph.hpp"

namespace degbound {

inline constexpr int kDefaultEnumerationCap = 7;
inline constexpr int kLargeEnumerationCap = 8;

struct EnumerationFilters {
  std::optional<int> delta_min;
  bool molecular = false;
  bool regular_only = false;
};

struct EnumerationSpec {
  int order = 2;
  EnumerationFilters filters;
  bool allow_large = false;  // order 8, 2^28 edge subsets
};

inline bool passes_filters(const Graph& g, const EnumerationFilters& f) {
  if (f.delta_min && min_degree(g) < *f.delta_min) return false;
  if (f.molecular && !is_molecular(g)) return false;
  if (f.regular_only && !is_regular(g)) return false;
  return true;
}

namespace detail {

inline bool small_connected(int n, const std::uint64_t* rows) {
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b; b &= b - 1) next |= rows[std::countr_zero(b)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

inline bool degree_filters_ok(int n, const int* deg, const EnumerationFilters& f) {
  int lo = deg[0], hi = deg[0];
  for (int i = 1; i < n; ++i) lo = std::min(lo, deg[i]), hi = std::max(hi, deg[i]);
  if (f.delta_min && lo < *f.delta_min) return false;
  if (f.molecular && hi > 4) return false;
  if (f.regular_only && lo != hi) return false;
  return true;
}

// Canonical keys of every connected graph of order n passing the filters.
//
// All edge subsets are visited, split as (graph on the first n-1 vertices,
// neighbourhood of the last vertex). Only labelings whose degrees are
// non-decreasing in vertex order are canonicalized; every isomorphism class
// has such a labeling.
inline std::vector<std::uint64_t> connected_keys(int n, const EnumerationFilters& filters,
                                                 int jobs) {
  if (n == 1) return {0};
  const int low_bits = (n - 1) * (n - 2) / 2;
  const std::uint64_t low_count = std::uint64_t{1} << low_bits;
  const std::uint64_t last_count = std::uint64_t{1} << (n - 1);
  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> next_chunk{0};

  auto worker = [&](std::vector<std::uint64_t>& keys) {
    std::uint64_t rows[16];
    std::uint64_t base_rows[16];
    int base_deg[16], deg[16];
    while (true) {
      const std::uint64_t begin = next_chunk.fetch_add(kChunk);
      if (begin >= low_count) break;
      const std::uint64_t end = std::min(low_count, begin + kChunk);
      for (std::uint64_t low = begin; low < end; ++low) {
        std::fill(base_rows, base_rows + n, 0);
        int k = 0;
        for (int j = 1; j < n - 1; ++j)
          for (int i = 0; i < j; ++i, ++k)
            if (low >> (low_bits - 1 - k) & 1U) {
              base_rows[i] |= std::uint64_t{1} << j;
              base_rows[j] |= std::uint64_t{1} << i;
            }
        for (int i = 0; i < n - 1; ++i) base_deg[i] = std::popcount(base_rows[i]);
        // Column n-1 is the last block of bits: bit (n-2-i) of `last` is x(i, n-1).
        for (std::uint64_t last = 1; last < last_count; ++last) {
          bool sorted = true;
          for (int i = 0; i < n - 1; ++i) {
            deg[i] = base_deg[i] + static_cast<int>(last >> (n - 2 - i) & 1U);
            if (i > 0 && deg[i] < deg[i - 1]) {
              sorted = false;
              break;
            }
          }
          if (!sorted) continue;
          deg[n - 1] = std::popcount(last);
          if (deg[n - 1] < deg[n - 2]) continue;
          if (!degree_filters_ok(n, deg, filters)) continue;
          std::uint64_t last_row = 0;
          for (int i = 0; i < n - 1; ++i) {
            const bool on = last >> (n - 2 - i) & 1U;
            rows[i] = base_rows[i] | (on ? std::uint64_t{1} << (n - 1) : 0);
            if (on) last_row |= std::uint64_t{1} << i;
          }
          rows[n - 1] = last_row;
          if (!small_connected(n, rows)) continue;
          keys.push_back(canonical_key(n, rows));
        }
        if (keys.size() > (1U << 16)) {
          std::sort(keys.begin(), keys.end());
          keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        }
      }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  };

  const int workers = std::max(1, jobs);
  std::vector<std::vector<std::uint64_t>> parts(workers);
  if (workers == 1) {
    worker(parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker, std::ref(parts[w]));
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace detail

/// One canonically labeled representative per isomorphism class of
/// connected graphs of the given order passing the filters, in ascending
/// graph6 order. The result does not depend on `jobs`.
inline std::vector<Graph> enumerate_connected(const EnumerationSpec& spec, int jobs = 1) {
  const int cap = spec.allow_large ? kLargeEnumerationCap : kDefaultEnumerationCap;
  if (spec.order < 1) throw std::invalid_argument("enumeration order must be >= 1");
  if (spec.order > cap)
    throw SizeLimitError("enumeration order " + std::to_string(spec.order) + " exceeds cap " +
                         std::to_string(cap) +
                         (spec.allow_large ? std::string{} : std::string{" (order 8 needs opt-in)"}));
  std::vector<Graph> out;
  for (std::uint64_t key : detail::connected_keys(spec.order, spec.filters, jobs)) {
    Graph g = detail::graph_from_key(spec.order, key);
    if (passes_filters(g, spec.filters)) out.push_back(std::move(g));
  }
  return out;
}

/// Orders lo..hi concatenated, ascending order first.
inline std::vector<Graph> enumerate_connected_range(int lo, int hi, const EnumerationFilters& f,
                                                    bool allow_large = false, int jobs = 1) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    auto part = enumerate_connected({n, f, allow_large}, jobs);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace degbound
