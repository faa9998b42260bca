#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "degbound/errors.hpp"
#include "degbound/graph.hpp"

namespace degbound {

/// Largest order representable by the one-byte graph6 size prefix.
inline constexpr int kGraph6MaxOrder = 62;

/// graph6 encoding: one size byte (n + 63) followed by the upper triangle of
/// the adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
/// packed six bits per byte, big end first, each byte offset by 63.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw SizeLimitError("graph6 short form supports n <= 62, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

/// Parses a short-form graph6 string. Trailing '\r' or '\n' is ignored.
inline Graph parse_graph6(std::string_view s, int line = 0) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty graph6 string", line, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 character outside 63..126", line, static_cast<int>(i) + 1);
  }
  const int n = static_cast<unsigned char>(s[0]) - 63;
  if (n == 63) throw ParseError("graph6 long form (n > 62) is not supported", line, 1);
  if (n < 1) throw ParseError("graph6 string encodes an empty graph", line, 1);
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() != expected)
    throw ParseError("graph6 length " + std::to_string(s.size()) + " does not match n = " +
                         std::to_string(n) + " (expected " + std::to_string(expected) + ")",
                     line, static_cast<int>(std::min(s.size(), expected)) + 1);
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(s[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(s.back()) - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1))
      throw ParseError("graph6 padding bits are not zero", line, static_cast<int>(s.size()));
  }
  return Graph(n, edges);
}

/// Plain edge list: first token is n, then one "u v" pair per line (0-based).
/// Blank lines and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream fields(raw);
    std::vector<long> nums;
    std::string tok;
    int col = 1;
    while (fields >> tok) {
      col = static_cast<int>(raw.find(tok, col - 1)) + 1;
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line_no, col);
      nums.push_back(value);
      col += static_cast<int>(tok.size());
    }
    if (n < 0) {
      if (nums.size() != 1) throw ParseError("first line must hold the vertex count", line_no, 1);
      if (nums[0] < 1) throw ParseError("vertex count must be >= 1", line_no, 1);
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) throw ParseError("expected two vertex ids per edge line", line_no, 1);
    if (nums[0] < 0 || nums[0] >= n || nums[1] < 0 || nums[1] >= n)
      throw ParseError("vertex id out of range 0.." + std::to_string(n - 1), line_no, 1);
    edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
  }
  if (n < 0) throw ParseError("edge list is empty", line_no, 0);
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

/// Reads either a single edge-list graph (text whose first significant
/// character is a digit) or a list of graph6 strings, one per line.
inline std::vector<Graph> parse_graphs(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t eol = text.find('\n', i);
    std::string_view line = text.substr(i, eol == std::string_view::npos ? text.npos : eol - i);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      if (std::isdigit(static_cast<unsigned char>(line[first]))) return {parse_edge_list(text)};
      break;
    }
    if (eol == std::string_view::npos) break;
    i = eol + 1;
  }
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos || raw[a] == '#') continue;
    const std::size_t b = raw.find_last_not_of(" \t\r");
    try {
      out.push_back(parse_graph6(std::string_view(raw).substr(a, b - a + 1), line_no));
    } catch (const ParseError& e) {
      if (e.column() > 0)
        throw ParseError(e.message(), line_no, e.column() + static_cast<int>(a));
      throw;
    }
  }
  return out;
}

/// Loads a population file. Throws std::ios_base::failure when unreadable.
inline std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graphs(buf.str());
}

}  // namespace degbound
