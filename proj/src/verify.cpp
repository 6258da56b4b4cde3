#include "halinstar/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace halinstar {

void SimpleGraph::check() const {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second)
      throw std::invalid_argument("parallel edge " + std::to_string(a) + "-" + std::to_string(b));
  }
}

int SimpleGraph::max_degree() const {
  std::vector<int> deg(vertex_count, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

SimpleGraph to_simple_graph(const HalinInstance& instance) {
  const EdgeIndex index(instance);
  SimpleGraph g;
  g.vertex_count = instance.tree.size();
  for (const EdgeId& e : index.edges()) g.edges.emplace_back(e.a, e.b);
  return g;
}

SimpleGraph make_cycle(int n) {
  SimpleGraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

SimpleGraph make_wheel(int n) {
  SimpleGraph g;
  g.vertex_count = n;
  for (int i = 1; i < n; ++i) g.edges.emplace_back(0, i);
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i % (n - 1) + 1);
  return g;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Improper:
      return "improper";
    case ViolationKind::BichromaticPath:
      return "bichromatic-path";
    case ViolationKind::BichromaticCycle:
      return "bichromatic-cycle";
    case ViolationKind::OffList:
      return "off-list";
  }
  return "?";
}

std::vector<Violation> verify_star(const SimpleGraph& graph, const EdgeColoring& coloring,
                                   const std::optional<ListAssignment>& lists) {
  const std::size_t m = graph.edges.size();
  if (coloring.size() != m) throw std::invalid_argument("coloring size differs from edge count");
  for (Color c : coloring)
    if (c == kNoColor) throw std::invalid_argument("verify_star needs a total coloring");
  if (lists && lists->size() != m) throw std::invalid_argument("list assignment size mismatch");

  std::vector<Violation> out;
  if (lists) {
    for (std::size_t e = 0; e < m; ++e)
      if (!std::binary_search((*lists)[e].begin(), (*lists)[e].end(), coloring[e]))
        out.push_back({ViolationKind::OffList, {e}});
  }

  std::vector<std::vector<std::pair<int, std::size_t>>> adj(graph.vertex_count);
  for (std::size_t e = 0; e < m; ++e) {
    adj[graph.edges[e].first].emplace_back(graph.edges[e].second, e);
    adj[graph.edges[e].second].emplace_back(graph.edges[e].first, e);
  }

  for (const auto& around : adj)
    for (std::size_t i = 0; i < around.size(); ++i)
      for (std::size_t j = i + 1; j < around.size(); ++j)
        if (coloring[around[i].second] == coloring[around[j].second])
          out.push_back({ViolationKind::Improper,
                         {std::min(around[i].second, around[j].second),
                          std::max(around[i].second, around[j].second)}});

  // Walk u-v-x-y-z with edges e1..e4; bichromatic means c(e1) = c(e3) and
  // c(e2) = c(e4) with two distinct colors. Start from the equal pair (e1, e3)
  // around the middle edge e2 = v-x, then look for e4.
  std::set<std::vector<std::size_t>> reported;
  for (int v = 0; v < graph.vertex_count; ++v) {
    for (auto [x, e2] : adj[v]) {
      for (auto [u, e1] : adj[v]) {
        if (u == x) continue;
        const Color c1 = coloring[e1];
        if (c1 == coloring[e2]) continue;
        for (auto [y, e3] : adj[x]) {
          if (y == v || y == u || coloring[e3] != c1) continue;
          for (auto [z, e4] : adj[y]) {
            if (z == x || z == v || coloring[e4] != coloring[e2]) continue;
            const bool closed = z == u;
            std::vector<std::size_t> key{e1, e2, e3, e4};
            std::sort(key.begin(), key.end());
            if (!reported.insert(key).second) continue;
            out.push_back({closed ? ViolationKind::BichromaticCycle : ViolationKind::BichromaticPath,
                           {e1, e2, e3, e4}});
          }
        }
      }
    }
  }
  return out;
}

std::string describe(const Violation& v, const SimpleGraph& graph) {
  std::string s = to_string(v.kind) + ":";
  for (std::size_t e : v.witness)
    s += " " + std::to_string(graph.edges[e].first) + "-" + std::to_string(graph.edges[e].second);
  return s;
}

}  // namespace halinstar
