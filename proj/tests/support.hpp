#pragma once

// Naive reference implementations for tests. They share no code with the
// library beyond the plain data types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "halinstar/halin.hpp"
#include "halinstar/io.hpp"
#include "halinstar/verify.hpp"

namespace testsupport {

using halinstar::Color;
using halinstar::EdgeColoring;
using halinstar::SimpleGraph;

inline bool shares_vertex(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
}

inline int common_vertex(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  if (a.first == b.first || a.first == b.second) return a.first;
  return a.second;
}

// True when edges e1..e4 (in order) form a walk u0-u1-u2-u3-u4 whose vertices
// u0..u3 are distinct and u4 is either new or equal to u0.
inline bool is_four_path_or_cycle(const SimpleGraph& g, int e1, int e2, int e3, int e4) {
  const auto& a = g.edges[e1];
  const auto& b = g.edges[e2];
  const auto& c = g.edges[e3];
  const auto& d = g.edges[e4];
  if (!shares_vertex(a, b) || !shares_vertex(b, c) || !shares_vertex(c, d)) return false;
  const int u1 = common_vertex(a, b), u2 = common_vertex(b, c), u3 = common_vertex(c, d);
  const int u0 = a.first == u1 ? a.second : a.first;
  const int u4 = d.first == u3 ? d.second : d.first;
  if (u1 == u2 || u2 == u3) return false;  // three edges at one vertex
  if ((b.first == u1 ? b.second : b.first) != u2) return false;
  if ((c.first == u2 ? c.second : c.first) != u3) return false;
  const std::vector<int> vs{u0, u1, u2, u3};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) return false;
  return u4 != u1 && u4 != u2 && u4 != u3;
}

// Every edge colored and no violation. Partial colorings (-1 entries) are
// checked only on fully colored windows.
inline bool naive_is_star(const SimpleGraph& g, const EdgeColoring& c) {
  const int m = static_cast<int>(g.edges.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (c[i] >= 0 && c[i] == c[j] && shares_vertex(g.edges[i], g.edges[j])) return false;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (b == a || c[a] < 0 || c[b] < 0 || c[a] == c[b]) continue;
      for (int x = 0; x < m; ++x) {
        if (x == a || x == b || c[x] != c[a]) continue;
        for (int y = 0; y < m; ++y) {
          if (y == a || y == b || y == x || c[y] != c[b]) continue;
          if (is_four_path_or_cycle(g, a, b, x, y)) return false;
        }
      }
    }
  return true;
}

inline bool naive_is_list_star(const SimpleGraph& g, const EdgeColoring& c,
                               const halinstar::ListAssignment& lists) {
  for (std::size_t e = 0; e < c.size(); ++e)
    if (std::find(lists[e].begin(), lists[e].end(), c[e]) == lists[e].end()) return false;
  return naive_is_star(g, c);
}

// All 4-edge paths and 4-cycles of a small graph, found by trying every
// ordered quadruple, grouped by member edge.
class Windows {
 public:
  explicit Windows(const SimpleGraph& g) : g_(g), by_edge_(g.edges.size()) {
    const int m = static_cast<int>(g.edges.size());
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y)
            if (a != b && a != x && a != y && b != x && b != y && x != y &&
                is_four_path_or_cycle(g, a, b, x, y))
              for (int e : {a, b, x, y}) by_edge_[e].push_back({a, b, x, y});
  }

  // Coloring stays star on every fully colored window through `last`.
  bool ok_with(const EdgeColoring& c, int last) const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (static_cast<int>(i) != last && c[i] == c[last] && shares_vertex(g_.edges[i], g_.edges[last]))
        return false;
    for (const auto& w : by_edge_[last]) {
      if (c[w[0]] < 0 || c[w[1]] < 0 || c[w[2]] < 0 || c[w[3]] < 0) continue;
      if (c[w[0]] == c[w[2]] && c[w[1]] == c[w[3]]) return false;
    }
    return true;
  }

 private:
  const SimpleGraph& g_;
  std::vector<std::vector<std::array<int, 4>>> by_edge_;
};

// Smallest k such that a star k-coloring exists (plain backtracking in edge
// index order, first edge fixed to 0), or -1 above `limit`.
inline int brute_star_index(const SimpleGraph& g, int limit) {
  const int m = static_cast<int>(g.edges.size());
  if (m == 0) return 0;
  const Windows windows(g);
  for (int k = 1; k <= limit; ++k) {
    EdgeColoring c(m, -1);
    int i = 0;
    while (i >= 0) {
      const int cap = i == 0 ? 1 : k;
      if (++c[i] >= cap) {
        c[i] = -1;
        --i;
        continue;
      }
      if (!windows.ok_with(c, i)) continue;
      if (i + 1 == m) return k;
      ++i;
    }
  }
  return -1;
}

// Lexicographically least star coloring of C_n from lists (sorted), by
// enumerating the full product in lex order.
inline std::optional<std::vector<Color>> exhaustive_cycle_lex_least(
    const std::vector<std::vector<Color>>& lists) {
  const std::size_t n = lists.size();
  const SimpleGraph cycle = halinstar::make_cycle(static_cast<int>(n));
  std::vector<std::size_t> digit(n, 0);
  for (const auto& l : lists)
    if (l.empty()) return std::nullopt;
  while (true) {
    std::vector<Color> colors(n);
    for (std::size_t i = 0; i < n; ++i) colors[i] = lists[i][digit[i]];
    if (naive_is_star(cycle, colors)) return colors;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < lists[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
}

// max over a 0.01 grid of max{x1 + x2/2, x1/2 + x2}, x1 + x2 <= theta,
// 0 <= x1, x2 <= delta. Integer hundredths to keep the grid exact.
inline double grid_lp(int theta, int delta) {
  const long long d = 100LL * delta, t = 100LL * theta;
  long long best = -1;
  for (long long a = 0; a <= d; ++a) {
    const long long top = std::min(d, t - a);
    for (long long b = 0; b <= top; ++b) best = std::max(best, std::max(2 * a + b, a + 2 * b));
  }
  return static_cast<double>(best) / 200.0;
}

inline halinstar::HalinInstance instance(const char* text) { return halinstar::parse_instance(text); }

inline halinstar::ListAssignment uniform_lists(std::size_t edges, int size) {
  halinstar::ColorList l(size);
  for (int c = 0; c < size; ++c) l[c] = c;
  return halinstar::ListAssignment(edges, l);
}

}  // namespace testsupport
