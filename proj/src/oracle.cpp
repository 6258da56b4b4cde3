#include "halinstar/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "halinstar/cycle_colorer.hpp"
#include "halinstar/errors.hpp"
#include "halinstar/gen.hpp"

namespace halinstar {
namespace {

// Backtracking over a static edge order. Colors are dense 0..palette-1 here;
// list colors get remapped by the caller.
class StarSearch {
 public:
  StarSearch(const SimpleGraph& g, std::vector<std::vector<int>> domains, int palette)
      : g_(g), domains_(std::move(domains)), palette_(palette), color_(g.edges.size(), -1),
        at_(static_cast<std::size_t>(g.vertex_count) * palette, -1), adj_(g.vertex_count) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      adj_[g.edges[e].first].push_back(static_cast<int>(e));
      adj_[g.edges[e].second].push_back(static_cast<int>(e));
    }
    build_order();
  }

  // Interchangeable colors: first edge takes 0, second takes 0 or 1.
  void break_value_symmetry() { symmetric_ = true; }

  bool run() { return place(0); }
  std::uint64_t nodes() const { return nodes_; }
  EdgeColoring coloring() const { return EdgeColoring(color_.begin(), color_.end()); }

 private:
  int other(int e, int v) const {
    return g_.edges[e].first == v ? g_.edges[e].second : g_.edges[e].first;
  }
  int& at(int v, int c) { return at_[static_cast<std::size_t>(v) * palette_ + c]; }
  int at(int v, int c) const { return at_[static_cast<std::size_t>(v) * palette_ + c]; }

  // Each new edge is the uncolored one touching the most placed edges.
  void build_order() {
    const std::size_t m = g_.edges.size();
    std::vector<bool> placed(m, false);
    std::vector<int> touching(m, 0);
    for (std::size_t step = 0; step < m; ++step) {
      int best = -1;
      for (std::size_t e = 0; e < m; ++e) {
        if (placed[e]) continue;
        if (best < 0 || touching[e] > touching[best]) best = static_cast<int>(e);
      }
      if (step == 0) {
        // Seed at an edge of a max-degree vertex.
        int hub = 0;
        for (int v = 0; v < g_.vertex_count; ++v)
          if (adj_[v].size() > adj_[hub].size()) hub = v;
        if (!adj_[hub].empty()) best = adj_[hub].front();
      }
      placed[best] = true;
      order_.push_back(best);
      for (int v : {g_.edges[best].first, g_.edges[best].second})
        for (int f : adj_[v])
          if (!placed[f]) ++touching[f];
    }
  }

  // Does coloring edge e (endpoints p, q) with c complete a bichromatic
  // 4-path or 4-cycle, or clash at an endpoint?
  bool conflicts(int e, int c) const {
    const int p = g_.edges[e].first, q = g_.edges[e].second;
    if (at(p, c) >= 0 || at(q, c) >= 0) return true;
    for (auto [s, t] : {std::pair{p, q}, std::pair{q, p}}) {
      // e as an end edge: s-t-x-y-z.
      for (int f : adj_[t]) {
        const int d = color_[f];
        if (f == e || d < 0) continue;
        const int x = other(f, t);
        const int g3 = at(x, c);
        if (g3 < 0) continue;
        const int y = other(g3, x);
        if (y == s) continue;
        const int g4 = at(y, d);
        if (g4 < 0) continue;
        const int z = other(g4, y);
        if (z != x && z != t) return true;
      }
      // e as a second edge: u-s-t-x-y.
      for (int f : adj_[s]) {
        const int a = color_[f];
        if (f == e || a < 0) continue;
        const int u = other(f, s);
        const int g3 = at(t, a);
        if (g3 < 0) continue;
        const int x = other(g3, t);
        if (x == s || x == u) continue;
        const int g4 = at(x, c);
        if (g4 < 0) continue;
        const int y = other(g4, x);
        if (y != t && y != s) return true;
      }
    }
    return false;
  }

  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    ++nodes_;
    const int e = order_[i];
    const int p = g_.edges[e].first, q = g_.edges[e].second;
    for (int c : domains_[e]) {
      if (symmetric_ && i < 2 && c > static_cast<int>(i)) break;
      if (conflicts(e, c)) continue;
      color_[e] = c;
      at(p, c) = e;
      at(q, c) = e;
      if (place(i + 1)) return true;
      at(p, c) = -1;
      at(q, c) = -1;
      color_[e] = -1;
    }
    return false;
  }

  const SimpleGraph& g_;
  std::vector<std::vector<int>> domains_;
  int palette_;
  std::vector<int> color_;
  std::vector<int> at_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> order_;
  bool symmetric_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult star_chromatic_index(const SimpleGraph& graph, int max_colors) {
  graph.check();
  OracleResult result;
  if (graph.edges.empty()) {
    result.index = 0;
    return result;
  }
  for (int k = std::max(1, graph.max_degree()); k <= max_colors; ++k) {
    std::vector<int> palette(k);
    for (int c = 0; c < k; ++c) palette[c] = c;
    StarSearch search(graph, std::vector<std::vector<int>>(graph.edges.size(), palette), k);
    search.break_value_symmetry();
    const bool found = search.run();
    result.nodes += search.nodes();
    if (found) {
      result.index = k;
      result.witness = search.coloring();
      return result;
    }
  }
  return result;
}

std::optional<EdgeColoring> find_list_star_coloring(const SimpleGraph& graph,
                                                    const ListAssignment& lists) {
  graph.check();
  if (lists.size() != graph.edges.size()) throw std::invalid_argument("list assignment size mismatch");
  std::map<Color, int> dense;
  std::vector<Color> sparse;
  for (const auto& list : lists)
    for (Color c : list)
      if (dense.emplace(c, static_cast<int>(sparse.size())).second) sparse.push_back(c);
  std::vector<std::vector<int>> domains(lists.size());
  for (std::size_t e = 0; e < lists.size(); ++e)
    for (Color c : lists[e]) domains[e].push_back(dense[c]);

  StarSearch search(graph, std::move(domains), std::max<int>(1, static_cast<int>(sparse.size())));
  if (!search.run()) return std::nullopt;
  EdgeColoring out = search.coloring();
  for (Color& c : out) c = sparse[c];
  return out;
}

int check_choosability_sample(const HalinInstance& instance, Mode mode, int k, int palette_size,
                              int trials, std::uint64_t seed) {
  const SimpleGraph graph = to_simple_graph(instance);
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const ListAssignment lists = gen_lists(graph.edges.size(), k, palette_size, derive_seed(seed, t));
    try {
      const EdgeColoring coloring = color_halin(instance, lists, mode);
      if (!verify_star(graph, coloring, lists).empty()) ++failures;
    } catch (const Refusal&) {
      ++failures;
    } catch (const InternalError&) {
      ++failures;
    }
  }
  return failures;
}

int check_choosability_sample(const SimpleGraph& graph, int k, int palette_size, int trials,
                              std::uint64_t seed) {
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const ListAssignment lists = gen_lists(graph.edges.size(), k, palette_size, derive_seed(seed, t));
    if (!find_list_star_coloring(graph, lists)) ++failures;
  }
  return failures;
}

}  // namespace halinstar
