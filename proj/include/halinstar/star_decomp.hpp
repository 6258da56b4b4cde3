#pragma once

#include <array>
#include <optional>
#include <vector>

#include "halinstar/halin.hpp"

namespace halinstar {

/// The full star of a vertex (edges to its children) split into red and blue
/// edges, plus the modified rotation sigma used for rho.
///
/// Children are named by position: child i (0-based) is v_{i+1}. Blue edges
/// are children 1..m-2, red are child 0 and m-1..p-1.
struct StarInfo {
  Vertex center = kNoVertex;
  std::vector<Vertex> children;  // v_1 .. v_p, counterclockwise
  std::vector<Vertex> red;
  std::vector<Vertex> blue;
  std::optional<int> m_index;  // 1-based m, only when blue is non-empty
  /// Neighbours of the center in sigma order. Non-root: parent, v_2..v_p, v_1.
  /// Root: the natural order v_1..v_p.
  std::vector<Vertex> sigma;

  int blue_count() const { return static_cast<int>(blue.size()); }
};

class StarDecomposition {
 public:
  StarDecomposition() = default;
  StarDecomposition(const PlaneTree& tree, int k);

  int k() const { return k_; }
  const PlaneTree& tree() const { return tree_; }
  const StarInfo& star(Vertex v) const { return stars_[v]; }
  bool is_blue(Vertex child) const { return blue_[child]; }

  /// Position of neighbour `u` in sigma order around `v`.
  int sigma_position(Vertex v, Vertex u) const;

  /// One plus the number of edges strictly between v-a and v-b when turning
  /// counterclockwise from v-a under sigma. rho(a,b) + rho(b,a) = d(v).
  /// Throws std::invalid_argument if a == b or either is not a neighbour of v.
  int rho(Vertex v, Vertex a, Vertex b) const;
  int rho(Vertex v, const EdgeId& e1, const EdgeId& e2) const;

  /// Neighbours u of v with rho(v, u, target) <= floor(d(v)/2): the half of
  /// v's edges a blue edge hanging below v-target must avoid.
  std::vector<Vertex> low_rho_neighbours(Vertex v, Vertex target) const;

 private:
  PlaneTree tree_;
  int k_ = 0;
  std::vector<StarInfo> stars_;
  std::vector<int> sigma_pos_in_parent_;
  std::vector<bool> blue_;
};

/// Builds the red/blue split with k = params.k_for(mode). Throws InternalError
/// if a degree bound relating d(v), d(parent) and k fails for some vertex, or
/// if a blue set would leave no red v_p.
StarDecomposition decompose(const PlaneTree& tree, const DerivedParams& params, Mode mode);

/// rho between positions `from` and `to` of a rotation with `size` edges.
int rho_in_order(std::size_t size, std::size_t from, std::size_t to);

/// For each leaf, the leaves forming a bad pair with its pendant edge: the
/// cycle neighbours whose father differs. Symmetric, at most two partners.
class BadPairIndex {
 public:
  BadPairIndex() = default;
  explicit BadPairIndex(const HalinInstance& instance);

  std::span<const Vertex> partners(Vertex leaf) const;
  std::size_t pair_count() const;
  bool empty() const { return pair_count() == 0; }

 private:
  std::vector<std::vector<Vertex>> partners_;
};

BadPairIndex bad_pairs(const HalinInstance& instance);

/// Reduced fraction.
struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Optimum of   max max{x1 + x2/2, x1/2 + x2}   s.t. x1 + x2 <= theta,
/// 0 <= x1, x2 <= delta, which is (theta + delta) / 2.
/// Requires 0 < delta <= theta <= 2 delta; throws std::invalid_argument otherwise.
Rational lp_optimum(long long theta, long long delta);

}  // namespace halinstar
