#include "halinstar/tree_colorer.hpp"

#include <algorithm>
#include <stdexcept>

#include "halinstar/errors.hpp"

namespace halinstar {
namespace {

bool contains(std::span<const Color> set, Color c) {
  return std::find(set.begin(), set.end(), c) != set.end();
}

Color smallest_admissible(const ColorList& list, std::span<const Color> forbidden) {
  for (Color c : list)
    if (!contains(forbidden, c)) return c;
  return kNoColor;
}

// Color of the edge between v and its neighbour u.
Color edge_color(const ColoringState& state, const PlaneTree& t, Vertex v, Vertex u) {
  return t.parent(u) == v ? state.tree_color(u) : state.tree_color(v);
}

}  // namespace

ColoringState::ColoringState(const HalinInstance& instance)
    : tree_(&instance.tree),
      edges_(instance),
      coloring_(edges_.size(), kNoColor),
      phi_at_(instance.tree.size()) {}

void ColoringState::color_tree_edge(Vertex child, Color c) {
  const std::size_t e = edges_.tree_edge(child);
  if (coloring_[e] != kNoColor) throw std::logic_error("edge " + edges_[e].key() + " colored twice");
  coloring_[e] = c;
  phi_at_[child].push_back(c);
  phi_at_[tree_->parent(child)].push_back(c);
}

std::vector<Vertex> order_stars(const PlaneTree& tree) {
  std::vector<Vertex> centers;
  for (Vertex v = 0; v < tree.size(); ++v)
    if (!tree.children(v).empty()) centers.push_back(v);
  std::stable_sort(centers.begin(), centers.end(),
                   [&](Vertex a, Vertex b) { return tree.depth(a) < tree.depth(b); });
  return centers;
}

void color_root_star(ColoringState& state, const TreeColoringContext& ctx) {
  const PlaneTree& t = ctx.instance.tree;
  const Vertex r = t.root();
  for (Vertex c : ctx.decomposition.star(r).sigma) {
    const Color pick = smallest_admissible(ctx.lists[state.edges().tree_edge(c)], state.phi(r));
    if (pick == kNoColor)
      throw InternalError("root star: list of edge " + state.edges()[state.edges().tree_edge(c)].key() +
                          " exhausted (needs |L| >= Delta)");
    state.color_tree_edge(c, pick);
  }
  state.mark_star_done(r);
}

void color_star(ColoringState& state, Vertex v, const TreeColoringContext& ctx) {
  const PlaneTree& t = ctx.instance.tree;
  const StarInfo& star = ctx.decomposition.star(v);
  const Vertex parent = t.parent(v);
  if (parent == kNoVertex) throw std::invalid_argument("color_star called on the root");
  const int p = static_cast<int>(star.children.size());
  if (p == 0) return;

  std::vector<int> order{0};
  if (p > 1 && !ctx.decomposition.is_blue(star.children[p - 1])) order.push_back(p - 1);
  const int first_red_tail = star.m_index ? *star.m_index - 1 : 1;
  for (int i = first_red_tail; i < p - 1; ++i) order.push_back(i);
  if (star.m_index)
    for (int i = 1; i < *star.m_index - 1; ++i) order.push_back(i);

  std::vector<Color> blue_forbidden;
  for (Vertex u : ctx.decomposition.low_rho_neighbours(parent, v))
    blue_forbidden.push_back(edge_color(state, t, parent, u));

  const bool use_bad_pairs = ctx.mode != Mode::TreeOnly;
  std::vector<Color> forbidden;
  for (int i : order) {
    const Vertex child = star.children[i];
    forbidden.assign(state.phi(v).begin(), state.phi(v).end());
    const bool blue = ctx.decomposition.is_blue(child);
    if (blue) {
      forbidden.insert(forbidden.end(), blue_forbidden.begin(), blue_forbidden.end());
    } else {
      forbidden.insert(forbidden.end(), state.phi(parent).begin(), state.phi(parent).end());
    }
    const bool extreme = i == 0 || i == p - 1;
    if (use_bad_pairs && extreme) {
      for (Vertex partner : ctx.bad_pairs.partners(child)) {
        const Color c = state.tree_color(partner);
        if (c != kNoColor) forbidden.push_back(c);
      }
    }

    const std::size_t e = state.edges().tree_edge(child);
    const Color pick = smallest_admissible(ctx.lists[e], forbidden);
    if (pick == kNoColor) {
      std::string bound;
      if (blue)
        bound = "d(v) + floor(d(parent)/2) <= k";
      else if (i == 0)
        bound = "k - (Delta + 2) >= 1";
      else if (i == p - 1)
        bound = "k - (Delta + 3) >= 1";
      else
        bound = "|phi(parent)| + #red <= k";
      throw InternalError("no color left for edge " + state.edges()[e].key() + "; violated " + bound);
    }
    state.color_tree_edge(child, pick);
  }
  state.mark_star_done(v);
}

EdgeColoring color_tree(const HalinInstance& instance, const ListAssignment& lists, Mode mode) {
  const PlaneTree& t = instance.tree;
  const DerivedParams params = derive_params(t);
  if (params.delta < 3)
    throw Refusal("Delta(T) = " + std::to_string(params.delta) + " < 3 unsupported");
  const int k = params.k_for(mode);

  ColoringState state(instance);
  if (lists.size() < state.edges().tree_edge_count())
    throw std::invalid_argument("list assignment does not cover the tree edges");
  for (std::size_t e = 0; e < state.edges().tree_edge_count(); ++e)
    if (static_cast<int>(lists[e].size()) < k)
      throw Refusal("need |L(e)| >= k = " + std::to_string(k) + ", edge " +
                    state.edges()[e].key() + " has " + std::to_string(lists[e].size()));

  const StarDecomposition dec = decompose(t, params, mode);
  const BadPairIndex bad = mode == Mode::TreeOnly ? BadPairIndex{} : BadPairIndex(instance);
  const TreeColoringContext ctx{instance, dec, bad, lists, mode};

  for (Vertex v : order_stars(t)) {
    if (v == t.root())
      color_root_star(state, ctx);
    else
      color_star(state, v, ctx);
  }
  return std::move(state).release();
}

std::vector<std::string> tree_property_violations(const HalinInstance& instance,
                                                  const StarDecomposition& dec,
                                                  const EdgeColoring& coloring, Mode mode) {
  const PlaneTree& t = instance.tree;
  const EdgeIndex edges(instance);
  const auto color = [&](Vertex a, Vertex b) {
    return coloring[edges.tree_edge(t.parent(a) == b ? a : b)];
  };
  std::vector<std::string> out;
  for (Vertex u = 0; u < t.size(); ++u) {
    const Vertex v = t.parent(u);
    if (v == kNoVertex || v == t.root()) continue;
    const Vertex x = t.parent(v);
    const Color cu = color(u, v);
    if (!dec.is_blue(u)) {
      for (Vertex w : dec.star(x).sigma)
        if (color(x, w) == cu)
          out.push_back("red edge " + std::to_string(v) + "-" + std::to_string(u) +
                        " repeats a color at " + std::to_string(x));
    } else {
      for (Vertex w : dec.low_rho_neighbours(x, v))
        if (color(x, w) == cu)
          out.push_back("blue edge " + std::to_string(v) + "-" + std::to_string(u) +
                        " repeats the color of " + std::to_string(x) + "-" + std::to_string(w));
    }
  }
  if (mode != Mode::TreeOnly) {
    const BadPairIndex bad(instance);
    for (Vertex leaf : t.leaves())
      for (Vertex partner : bad.partners(leaf))
        if (leaf < partner && coloring[edges.tree_edge(leaf)] == coloring[edges.tree_edge(partner)])
          out.push_back("bad pair at leaves " + std::to_string(leaf) + ", " +
                        std::to_string(partner) + " shares a color");
  }
  return out;
}

}  // namespace halinstar
