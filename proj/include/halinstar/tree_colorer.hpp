#pragma once

#include <string>
#include <vector>

#include "halinstar/halin.hpp"
#include "halinstar/star_decomp.hpp"

namespace halinstar {

/// Partial coloring of E(H) threaded through the star-by-star pass.
class ColoringState {
 public:
  explicit ColoringState(const HalinInstance& instance);

  const EdgeIndex& edges() const { return edges_; }
  const EdgeColoring& coloring() const { return coloring_; }
  EdgeColoring release() && { return std::move(coloring_); }

  Color color_of(std::size_t edge) const { return coloring_[edge]; }
  /// Color on the tree edge between `child` and its parent.
  Color tree_color(Vertex child) const { return coloring_[edges_.tree_edge(child)]; }
  /// Colors currently on edges incident with v.
  std::span<const Color> phi(Vertex v) const { return phi_at_[v]; }
  std::span<const Vertex> colored_stars() const { return colored_stars_; }

  /// Colors a tree edge; the edge must be uncolored.
  void color_tree_edge(Vertex child, Color c);
  void mark_star_done(Vertex center) { colored_stars_.push_back(center); }

 private:
  const PlaneTree* tree_;
  EdgeIndex edges_;
  EdgeColoring coloring_;
  std::vector<std::vector<Color>> phi_at_;
  std::vector<Vertex> colored_stars_;
};

/// Everything the per-star rules read. Lists are indexed by EdgeIndex.
struct TreeColoringContext {
  const HalinInstance& instance;
  const StarDecomposition& decomposition;
  const BadPairIndex& bad_pairs;  // ignored in tree-only mode
  const ListAssignment& lists;
  Mode mode;
};

/// Centers of non-empty full stars, by depth and then by id. Root first.
std::vector<Vertex> order_stars(const PlaneTree& tree);

/// Greedy proper coloring of the root star in rotation order.
void color_root_star(ColoringState& state, const TreeColoringContext& ctx);

/// Colors the full star of v (v != root) in the order
/// v_1, v_p, v_m .. v_{p-1}, v_2 .. v_{m-1}, taking the smallest admissible
/// color for each edge:
///   red edges avoid phi(parent), v_1 and v_p also the colors of earlier bad
///   partners; blue edges avoid the colors at the parent whose rho towards
///   v-parent is at most floor(d(parent)/2). All edges stay proper at v.
/// Throws InternalError naming the counting bound that failed if a list runs dry.
void color_star(ColoringState& state, Vertex v, const TreeColoringContext& ctx);

/// Star list coloring of T. Entries for cycle edges stay kNoColor.
/// Throws Refusal if Delta(T) < 3 or some tree list is shorter than k(mode).
EdgeColoring color_tree(const HalinInstance& instance, const ListAssignment& lists, Mode mode);

/// Checks the invariants the tree pass promises: red edges avoid phi(parent),
/// blue edges avoid the low-rho half at the parent, bad pairs differ (Halin
/// modes). Returns a description per failure.
std::vector<std::string> tree_property_violations(const HalinInstance& instance,
                                                  const StarDecomposition& decomposition,
                                                  const EdgeColoring& coloring, Mode mode);

}  // namespace halinstar
