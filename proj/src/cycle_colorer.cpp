#include "halinstar/cycle_colorer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "halinstar/errors.hpp"
#include "halinstar/tree_colorer.hpp"

namespace halinstar {
namespace {

struct StateHash {
  std::size_t operator()(const std::array<int, 4>& s) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : s) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

class CycleSearch {
 public:
  explicit CycleSearch(const std::vector<ColorList>& lists)
      : lists_(lists), n_(lists.size()), pick_(n_, -1) {}

  std::optional<std::vector<Color>> run() {
    if (!fill(0)) return std::nullopt;
    std::vector<Color> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = color(i);
    return out;
  }

 private:
  Color color(std::size_t i) const { return lists_[i][pick_[i]]; }

  // a,b,a,b on the four consecutive edges starting at s (cyclic).
  bool bichromatic_window(std::size_t s) const {
    return color(s % n_) == color((s + 2) % n_) && color((s + 1) % n_) == color((s + 3) % n_);
  }

  bool consistent_at(std::size_t i) const {
    if (i >= 1 && color(i) == color(i - 1)) return false;
    if (n_ >= 4 && i >= 3 && bichromatic_window(i - 3)) return false;
    if (i + 1 == n_) {
      if (color(i) == color(0)) return false;
      if (n_ >= 4)
        for (std::size_t s = n_ - 3; s < n_; ++s)
          if (bichromatic_window(s)) return false;
    }
    return true;
  }

  bool fill(std::size_t i) {
    if (i == n_) return true;
    std::array<int, 4> key{};
    if (i >= 3) {
      key = {static_cast<int>(i), pick_[i - 3], pick_[i - 2], pick_[i - 1]};
      if (dead_.contains(key)) return false;
    }
    for (int c = 0; c < static_cast<int>(lists_[i].size()); ++c) {
      pick_[i] = c;
      if (!consistent_at(i)) continue;
      // The seam constraints read the first three colors, so states below
      // are only comparable while those stay fixed.
      if (i == 2) dead_.clear();
      if (fill(i + 1)) return true;
    }
    pick_[i] = -1;
    if (i >= 3) dead_.insert(key);
    return false;
  }

  const std::vector<ColorList>& lists_;
  std::size_t n_;
  std::vector<int> pick_;
  std::unordered_set<std::array<int, 4>, StateHash> dead_;
};

Color pendant_color(const EdgeColoring& coloring, const EdgeIndex& edges, Vertex leaf) {
  return coloring[edges.tree_edge(leaf)];
}

std::vector<Color> low_rho_colors(const PlaneTree& t, const StarDecomposition& dec,
                                  const EdgeColoring& coloring, const EdgeIndex& edges, Vertex leaf) {
  const Vertex x = t.parent(leaf);
  std::vector<Color> out;
  for (Vertex w : dec.low_rho_neighbours(x, leaf))
    out.push_back(coloring[edges.tree_edge(t.parent(w) == x ? w : x)]);
  return out;
}

}  // namespace

CyclePartition partition_cycle(const HalinInstance& instance) {
  const auto& c = instance.cycle;
  CyclePartition part;
  part.same_father.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    part.same_father[i] =
        instance.tree.parent(c[i]) == instance.tree.parent(c[(i + 1) % c.size()]);
  return part;
}

RestrictedLists build_restricted_lists(const HalinInstance& instance,
                                       const EdgeColoring& tree_coloring,
                                       const StarDecomposition& dec,
                                       const ListAssignment& lists, Mode mode) {
  const PlaneTree& t = instance.tree;
  const EdgeIndex edges(instance);
  const auto& c = instance.cycle;
  const std::size_t m = c.size();
  const int delta = t.max_degree();
  const CyclePartition part = partition_cycle(instance);

  RestrictedLists out;
  out.lists.resize(m);
  out.provenance.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = c[i];
    const Vertex v = c[(i + 1) % m];
    const Vertex before_u = c[(i + m - 1) % m];
    const Vertex after_v = c[(i + 2) % m];

    RestrictionProvenance& why = out.provenance[i];
    why.e1 = part.in_e1(i);
    why.a_u = pendant_color(tree_coloring, edges, before_u);
    why.a_v = pendant_color(tree_coloring, edges, after_v);

    std::vector<Color> forbidden{why.a_u, why.a_v};
    if (why.e1) {
      const Vertex x = t.parent(u);
      for (Vertex w : dec.star(x).sigma)
        why.phi_x.push_back(tree_coloring[edges.tree_edge(t.parent(w) == x ? w : x)]);
      forbidden.insert(forbidden.end(), why.phi_x.begin(), why.phi_x.end());
    } else {
      why.b_u = low_rho_colors(t, dec, tree_coloring, edges, u);
      why.b_v = low_rho_colors(t, dec, tree_coloring, edges, v);
      why.pendant_u = pendant_color(tree_coloring, edges, u);
      why.pendant_v = pendant_color(tree_coloring, edges, v);
      if (static_cast<int>(why.b_u.size()) > delta / 2 || static_cast<int>(why.b_v.size()) > delta / 2)
        throw InternalError("low-rho set larger than floor(Delta/2)");
      forbidden.insert(forbidden.end(), why.b_u.begin(), why.b_u.end());
      forbidden.insert(forbidden.end(), why.b_v.begin(), why.b_v.end());
      forbidden.push_back(why.pendant_u);
      forbidden.push_back(why.pendant_v);
    }

    const ColorList& full = lists[edges.cycle_edge(i)];
    ColorList& kept = out.lists[i];
    for (Color col : full)
      if (std::find(forbidden.begin(), forbidden.end(), col) == forbidden.end()) kept.push_back(col);

    if (kept.size() < 3) {
      std::string bound = why.e1 ? "|L(uv)| - Delta - 2 >= 3"
                         : mode == Mode::CompleteHalin ? "|L(uv)| - 2 floor(Delta/2) - 3 >= 3"
                                                       : "|L(uv)| - 2 (floor(Delta/2) + 2) >= 3";
      throw InternalError("restricted list of " + edges[edges.cycle_edge(i)].key() + " has " +
                          std::to_string(kept.size()) + " colors; violated " + bound);
    }
  }
  return out;
}

std::optional<std::vector<Color>> find_cycle_star_coloring(const std::vector<ColorList>& lists) {
  if (lists.size() < 3) throw std::invalid_argument("a cycle needs at least 3 edges");
  return CycleSearch(lists).run();
}

std::vector<Color> star_color_cycle(const std::vector<ColorList>& lists) {
  auto result = find_cycle_star_coloring(lists);
  if (result) return *std::move(result);
  if (lists.size() == 5) throw Refusal("no star coloring of this 5-cycle from these lists");
  throw InternalError("cycle of length " + std::to_string(lists.size()) +
                      " has no star coloring from lists of size >= 3");
}

EdgeColoring color_halin(const HalinInstance& instance, const ListAssignment& lists, Mode mode,
                         HalinColoringOptions options) {
  if (mode == Mode::TreeOnly) return color_tree(instance, lists, mode);

  HalinInstance as_mode = instance;
  as_mode.mode = mode;
  const ValidationReport report = validate(as_mode);
  if (!report.valid())
    throw Refusal("instance is not a valid " + to_string(mode) + " Halin graph: " + report.errors.front());
  if (instance.cycle.size() == 5 && !options.force_c5)
    throw Refusal("|C| = 5 is not covered by the construction (use --force-c5 to try anyway)");

  const EdgeIndex edges(instance);
  if (lists.size() != edges.size()) throw std::invalid_argument("list assignment size mismatch");
  const DerivedParams params = derive_params(instance);
  const int k = params.k_for(mode);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (static_cast<int>(lists[e].size()) < k)
      throw Refusal("need |L(e)| >= k = " + std::to_string(k) + ", edge " + edges[e].key() +
                    " has " + std::to_string(lists[e].size()));

  EdgeColoring coloring = color_tree(instance, lists, mode);
  const StarDecomposition dec = decompose(instance.tree, params, mode);
  const RestrictedLists restricted = build_restricted_lists(instance, coloring, dec, lists, mode);
  const std::vector<Color> cycle_colors = star_color_cycle(restricted.lists);
  for (std::size_t i = 0; i < cycle_colors.size(); ++i) coloring[edges.cycle_edge(i)] = cycle_colors[i];
  return coloring;
}

bool e2_components_are_single_edges(const HalinInstance& instance) {
  const CyclePartition part = partition_cycle(instance);
  const std::size_t m = part.same_father.size();
  for (std::size_t i = 0; i < m; ++i)
    if (!part.in_e1(i) && (!part.in_e1((i + 1) % m) || !part.in_e1((i + m - 1) % m))) return false;
  return true;
}

}  // namespace halinstar
