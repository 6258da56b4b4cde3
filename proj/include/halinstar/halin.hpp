#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace halinstar {

using Vertex = int;
using Color = int;

inline constexpr Vertex kNoVertex = -1;
inline constexpr Color kNoColor = -1;

/// Sorted, duplicate-free set of admissible colors for one edge.
using ColorList = std::vector<Color>;

enum class Mode { GeneralizedHalin, CompleteHalin, TreeOnly };

std::string to_string(Mode mode);
/// Accepts "generalized", "complete" and "tree".
std::optional<Mode> parse_mode(std::string_view text);

/// Rooted tree with a rotation system: children of every vertex are listed
/// counterclockwise, starting right after the edge to the parent.
class PlaneTree {
 public:
  PlaneTree() = default;

  /// Throws std::invalid_argument when the child lists do not describe a tree
  /// rooted at `root` on vertices 0..n-1.
  PlaneTree(int vertex_count, Vertex root, std::vector<std::vector<Vertex>> children);

  int size() const { return static_cast<int>(children_.size()); }
  Vertex root() const { return root_; }
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  int depth(Vertex v) const { return depth_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(children_[v].size()) + (v == root_ ? 0 : 1);
  }
  bool is_leaf(Vertex v) const { return v != root_ && children_[v].empty(); }
  /// Index of v in its parent's child list, -1 for the root.
  int child_position(Vertex v) const { return child_pos_[v]; }

  int max_degree() const;
  /// Leaves in the order a depth-first walk respecting the rotation meets them.
  std::vector<Vertex> dfs_leaf_order() const;
  std::vector<Vertex> leaves() const;

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
    return a.root_ == b.root_ && a.children_ == b.children_;
  }

 private:
  Vertex root_ = kNoVertex;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<int> child_pos_;
};

struct HalinInstance {
  PlaneTree tree;
  std::vector<Vertex> cycle;  // empty in tree-only mode
  Mode mode = Mode::GeneralizedHalin;

  bool has_cycle() const { return !cycle.empty(); }
  friend bool operator==(const HalinInstance&, const HalinInstance&) = default;
};

enum class EdgeKind { Tree, Cycle };

/// Canonical edge name. Tree edges are (parent, child); cycle edges are the
/// two leaves in cycle order, i.e. (cycle[i], cycle[i+1 mod |C|]).
struct EdgeId {
  EdgeKind kind = EdgeKind::Tree;
  Vertex a = kNoVertex;
  Vertex b = kNoVertex;

  /// "u-v" for tree edges, "u~v" for cycle edges.
  std::string key() const;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Dense numbering of E(H): tree edges first (ordered by child id), then cycle
/// edges in cycle order. Every per-edge vector in the library uses it.
class EdgeIndex {
 public:
  explicit EdgeIndex(const HalinInstance& instance);

  std::size_t size() const { return edges_.size(); }
  std::size_t tree_edge_count() const { return tree_count_; }
  const EdgeId& operator[](std::size_t i) const { return edges_[i]; }
  std::span<const EdgeId> edges() const { return edges_; }

  /// Index of the edge from child to its parent.
  std::size_t tree_edge(Vertex child) const { return tree_of_child_[child]; }
  /// Index of the cycle edge (cycle[pos], cycle[pos+1]).
  std::size_t cycle_edge(std::size_t pos) const { return tree_count_ + pos; }
  /// Accepts either endpoint order for cycle edges.
  std::optional<std::size_t> find(const EdgeId& id) const;
  std::optional<std::size_t> find_key(std::string_view key) const;

 private:
  std::vector<EdgeId> edges_;
  std::vector<std::size_t> tree_of_child_;
  std::vector<std::size_t> cycle_pos_;  // per vertex, position on the cycle or npos
  std::size_t tree_count_ = 0;
};

/// Per-edge list assignment indexed by EdgeIndex.
using ListAssignment = std::vector<ColorList>;
/// Per-edge colors indexed by EdgeIndex; kNoColor marks an uncolored edge.
using EdgeColoring = std::vector<Color>;

struct DerivedParams {
  int delta = 0;
  int theta = 0;
  int k_halin = 0;
  int k_complete = 0;
  int k_tree = 0;

  int k_for(Mode mode) const;
};

/// Degrees are taken in T, never in H.
DerivedParams derive_params(const PlaneTree& tree);
inline DerivedParams derive_params(const HalinInstance& instance) {
  return derive_params(instance.tree);
}

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool valid() const { return errors.empty(); }
};

ValidationReport validate(const HalinInstance& instance);

/// Smallest id among the vertices of maximum degree.
Vertex canonical_root(const PlaneTree& tree);

/// True if `cycle` equals `reference` up to rotation and reflection.
bool same_cyclic_order(std::span<const Vertex> cycle, std::span<const Vertex> reference);

}  // namespace halinstar
