#include "halinstar/star_decomp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "halinstar/errors.hpp"

namespace halinstar {

StarDecomposition::StarDecomposition(const PlaneTree& tree, int k)
    : tree_(tree), k_(k), stars_(tree.size()), sigma_pos_in_parent_(tree.size(), -1),
      blue_(tree.size(), false) {
  for (Vertex v = 0; v < tree.size(); ++v) {
    StarInfo& s = stars_[v];
    s.center = v;
    s.children.assign(tree.children(v).begin(), tree.children(v).end());
    const int p = static_cast<int>(s.children.size());

    if (v == tree.root()) {
      s.red = s.children;
      s.sigma = s.children;
      for (int i = 0; i < p; ++i) sigma_pos_in_parent_[s.children[i]] = i;
      continue;
    }

    const int excess = tree.degree(tree.parent(v)) + tree.degree(v) - 1 - k;
    if (excess <= 0 || p == 0) {
      s.red = s.children;
    } else {
      const int m = excess + 2;
      s.m_index = m;
      // Red: v_1 and v_m..v_p; blue: v_2..v_{m-1}.
      s.red.push_back(s.children[0]);
      for (int i = 1; i < p; ++i) (i < m - 1 ? s.blue : s.red).push_back(s.children[i]);
    }
    for (Vertex b : s.blue) blue_[b] = true;

    s.sigma.push_back(tree.parent(v));
    for (int i = 1; i < p; ++i) s.sigma.push_back(s.children[i]);
    if (p > 0) s.sigma.push_back(s.children[0]);
    for (int i = 1; i < p; ++i) sigma_pos_in_parent_[s.children[i]] = i;
    if (p > 0) sigma_pos_in_parent_[s.children[0]] = p;
  }
}

int StarDecomposition::sigma_position(Vertex v, Vertex u) const {
  if (v < 0 || v >= tree_.size() || u < 0 || u >= tree_.size())
    throw std::invalid_argument("vertex out of range");
  if (v != tree_.root() && u == tree_.parent(v)) return 0;
  if (u != tree_.root() && tree_.parent(u) == v) return sigma_pos_in_parent_[u];
  throw std::invalid_argument("vertex " + std::to_string(u) + " is not a neighbour of " +
                              std::to_string(v));
}

int rho_in_order(std::size_t size, std::size_t from, std::size_t to) {
  if (from == to || from >= size || to >= size)
    throw std::invalid_argument("rho needs two distinct edges");
  return static_cast<int>((to + size - from) % size);
}

int StarDecomposition::rho(Vertex v, const EdgeId& e1, const EdgeId& e2) const {
  const auto other = [&](const EdgeId& e) {
    if (e.kind != EdgeKind::Tree || (e.a != v && e.b != v))
      throw std::invalid_argument("edge " + e.key() + " is not a tree edge at " + std::to_string(v));
    return e.a == v ? e.b : e.a;
  };
  return rho(v, other(e1), other(e2));
}

int StarDecomposition::rho(Vertex v, Vertex a, Vertex b) const {
  const int pa = sigma_position(v, a);
  const int pb = sigma_position(v, b);
  return rho_in_order(stars_[v].sigma.size(), pa, pb);
}

std::vector<Vertex> StarDecomposition::low_rho_neighbours(Vertex v, Vertex target) const {
  const auto& order = stars_[v].sigma;
  const int d = static_cast<int>(order.size());
  const int t = sigma_position(v, target);
  // rho(u, target) = r means u sits r steps clockwise of target in sigma.
  std::vector<Vertex> out;
  for (int r = 1; r <= d / 2 && r < d; ++r) out.push_back(order[(t - r + d) % d]);
  return out;
}

StarDecomposition decompose(const PlaneTree& tree, const DerivedParams& params, Mode mode) {
  const int k = params.k_for(mode);
  StarDecomposition dec(tree, k);
  for (Vertex v = 0; v < tree.size(); ++v) {
    if (v == tree.root() || tree.children(v).empty()) continue;
    const int dv = tree.degree(v);
    const int dp = tree.degree(tree.parent(v));
    const auto where = " at vertex " + std::to_string(v) + " (k = " + std::to_string(k) + ")";
    if (dp + (dv - 1) - dv / 2 > k)
      throw InternalError("inequality d(parent) + d(v) - 1 - floor(d(v)/2) <= k fails" + where);
    const StarInfo& s = dec.star(v);
    if (s.blue_count() > dv / 2) throw InternalError("blue count exceeds floor(d(v)/2)" + where);
    if (s.blue_count() != std::max(0, dp + dv - 1 - k))
      throw InternalError("blue count differs from d(parent) + d(v) - 1 - k" + where);
    if (dv + dp / 2 > k) throw InternalError("inequality d(v) + floor(d(parent)/2) <= k fails" + where);
    // Halin modes keep v_p red. Under the tree bound m = p + 1 can occur:
    // then only v_1 is red and v_p is colored as a blue edge.
    const int m_cap = static_cast<int>(s.children.size()) + (mode == Mode::TreeOnly ? 1 : 0);
    if (s.m_index && *s.m_index > m_cap) throw InternalError("blue edges swallow v_p" + where);
  }
  return dec;
}

BadPairIndex::BadPairIndex(const HalinInstance& instance)
    : partners_(instance.tree.size()) {
  const auto& c = instance.cycle;
  const auto& t = instance.tree;
  const std::size_t m = c.size();
  if (m < 2) return;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = c[i];
    const Vertex w = c[(i + 1) % m];
    if (u == w || t.parent(u) == t.parent(w)) continue;
    partners_[u].push_back(w);
    partners_[w].push_back(u);
  }
}

std::span<const Vertex> BadPairIndex::partners(Vertex leaf) const {
  if (leaf < 0 || static_cast<std::size_t>(leaf) >= partners_.size()) return {};
  return partners_[leaf];
}

std::size_t BadPairIndex::pair_count() const {
  std::size_t total = 0;
  for (const auto& p : partners_) total += p.size();
  return total / 2;
}

BadPairIndex bad_pairs(const HalinInstance& instance) { return BadPairIndex(instance); }

Rational lp_optimum(long long theta, long long delta) {
  if (!(0 < delta && delta <= theta && theta <= 2 * delta))
    throw std::invalid_argument("lp_optimum needs 0 < delta <= theta <= 2 delta");
  Rational r{theta + delta, 2};
  const long long g = std::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

}  // namespace halinstar
