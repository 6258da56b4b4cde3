#include "halinstar/halin.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>

namespace halinstar {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::GeneralizedHalin:
      return "generalized";
    case Mode::CompleteHalin:
      return "complete";
    case Mode::TreeOnly:
      return "tree";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "generalized") return Mode::GeneralizedHalin;
  if (text == "complete") return Mode::CompleteHalin;
  if (text == "tree") return Mode::TreeOnly;
  return std::nullopt;
}

PlaneTree::PlaneTree(int vertex_count, Vertex root, std::vector<std::vector<Vertex>> children)
    : root_(root), children_(std::move(children)) {
  if (vertex_count < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (static_cast<int>(children_.size()) != vertex_count)
    throw std::invalid_argument("child table size differs from vertex count");
  if (root < 0 || root >= vertex_count) throw std::invalid_argument("root out of range");

  parent_.assign(vertex_count, kNoVertex);
  child_pos_.assign(vertex_count, -1);
  depth_.assign(vertex_count, -1);
  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& kids = children_[v];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const Vertex c = kids[i];
      if (c < 0 || c >= vertex_count)
        throw std::invalid_argument("child id " + std::to_string(c) + " out of range");
      if (c == root) throw std::invalid_argument("root listed as a child");
      if (parent_[c] != kNoVertex)
        throw std::invalid_argument("vertex " + std::to_string(c) + " listed as a child twice");
      parent_[c] = v;
      child_pos_[c] = static_cast<int>(i);
    }
  }

  // Reachability from the root rules out cycles among non-root vertices.
  std::deque<Vertex> queue{root};
  depth_[root] = 0;
  int seen = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex c : children_[v]) {
      depth_[c] = depth_[v] + 1;
      ++seen;
      queue.push_back(c);
    }
  }
  if (seen != vertex_count)
    throw std::invalid_argument("child lists do not form a tree rooted at " +
                                std::to_string(root));
}

int PlaneTree::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < size(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> PlaneTree::dfs_leaf_order() const {
  std::vector<Vertex> order;
  std::vector<Vertex> stack{root_};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (is_leaf(v)) order.push_back(v);
    const auto& kids = children_[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<Vertex> PlaneTree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v)
    if (is_leaf(v)) out.push_back(v);
  return out;
}

std::string EdgeId::key() const {
  return std::to_string(a) + (kind == EdgeKind::Tree ? "-" : "~") + std::to_string(b);
}

EdgeIndex::EdgeIndex(const HalinInstance& instance) {
  const PlaneTree& t = instance.tree;
  const std::size_t npos = static_cast<std::size_t>(-1);
  tree_of_child_.assign(t.size(), npos);
  for (Vertex v = 0; v < t.size(); ++v) {
    if (v == t.root()) continue;
    tree_of_child_[v] = edges_.size();
    edges_.push_back({EdgeKind::Tree, t.parent(v), v});
  }
  tree_count_ = edges_.size();
  cycle_pos_.assign(t.size(), npos);
  const auto& c = instance.cycle;
  for (std::size_t i = 0; i < c.size(); ++i) {
    edges_.push_back({EdgeKind::Cycle, c[i], c[(i + 1) % c.size()]});
    if (c[i] >= 0 && c[i] < t.size()) cycle_pos_[c[i]] = i;
  }
}

std::optional<std::size_t> EdgeIndex::find(const EdgeId& id) const {
  const auto in_range = [&](Vertex v) {
    return v >= 0 && static_cast<std::size_t>(v) < tree_of_child_.size();
  };
  if (!in_range(id.a) || !in_range(id.b)) return std::nullopt;
  if (id.kind == EdgeKind::Tree) {
    const std::size_t e = tree_of_child_[id.b];
    if (e < edges_.size() && edges_[e].a == id.a) return e;
    return std::nullopt;
  }
  const std::size_t m = edges_.size() - tree_count_;
  for (const auto& [x, y] : {std::pair{id.a, id.b}, std::pair{id.b, id.a}}) {
    const std::size_t p = cycle_pos_[x];
    if (p < m && edges_[tree_count_ + p].b == y) return tree_count_ + p;
  }
  return std::nullopt;
}

std::optional<std::size_t> EdgeIndex::find_key(std::string_view key) const {
  const auto sep = key.find_first_of("-~");
  if (sep == std::string_view::npos || sep == 0) return std::nullopt;
  Vertex a = 0, b = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  auto r1 = std::from_chars(first, first + sep, a);
  if (r1.ec != std::errc{} || r1.ptr != first + sep) return std::nullopt;
  auto r2 = std::from_chars(first + sep + 1, last, b);
  if (r2.ec != std::errc{} || r2.ptr != last) return std::nullopt;
  return find({key[sep] == '-' ? EdgeKind::Tree : EdgeKind::Cycle, a, b});
}

int DerivedParams::k_for(Mode mode) const {
  switch (mode) {
    case Mode::GeneralizedHalin:
      return k_halin;
    case Mode::CompleteHalin:
      return k_complete;
    case Mode::TreeOnly:
      return k_tree;
  }
  return k_halin;
}

DerivedParams derive_params(const PlaneTree& tree) {
  DerivedParams p;
  p.delta = tree.max_degree();
  for (Vertex v = 0; v < tree.size(); ++v)
    if (v != tree.root()) p.theta = std::max(p.theta, tree.degree(v) + tree.degree(tree.parent(v)));
  const int half = (p.theta + p.delta) / 2;
  p.k_tree = half;
  p.k_halin = std::max(half, 2 * (p.delta / 2) + 7);
  p.k_complete = std::max(half, 2 * (p.delta / 2) + 6);
  return p;
}

Vertex canonical_root(const PlaneTree& tree) {
  const int delta = tree.max_degree();
  for (Vertex v = 0; v < tree.size(); ++v)
    if (tree.degree(v) == delta) return v;
  return tree.root();
}

bool same_cyclic_order(std::span<const Vertex> cycle, std::span<const Vertex> reference) {
  const std::size_t n = reference.size();
  if (cycle.size() != n) return false;
  if (n == 0) return true;
  const auto start = std::find(cycle.begin(), cycle.end(), reference[0]);
  if (start == cycle.end()) return false;
  const std::size_t s = static_cast<std::size_t>(start - cycle.begin());
  bool forward = true, backward = true;
  for (std::size_t i = 0; i < n; ++i) {
    forward = forward && cycle[(s + i) % n] == reference[i];
    backward = backward && cycle[(s + n - i) % n] == reference[i];
  }
  return forward || backward;
}

ValidationReport validate(const HalinInstance& instance) {
  ValidationReport report;
  const PlaneTree& t = instance.tree;
  const bool halin = instance.mode != Mode::TreeOnly;
  const int delta = t.max_degree();

  if (t.size() == 0) {
    report.errors.push_back("tree is empty");
    return report;
  }
  const Vertex expected_root = canonical_root(t);
  if (t.root() != expected_root) {
    const std::string msg = "root must be the smallest-id vertex of maximum degree (" +
                            std::to_string(expected_root) + "), got " +
                            std::to_string(t.root());
    (halin ? report.errors : report.warnings).push_back(msg);
  }
  if (delta < 3) {
    const std::string msg = "Delta(T) = " + std::to_string(delta) + " < 3";
    (halin ? report.errors : report.warnings).push_back(msg);
  }

  if (!halin) {
    if (instance.has_cycle()) report.errors.push_back("tree mode instance carries a cycle");
    return report;
  }

  const auto leaves = t.leaves();
  const auto& c = instance.cycle;
  if (c.size() < 3) report.errors.push_back("cycle must have at least 3 vertices");
  {
    std::vector<Vertex> sorted_cycle = c;
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    if (sorted_cycle != leaves) {
      report.errors.push_back("cycle must cover all leaves exactly once");
    } else if (!same_cyclic_order(c, t.dfs_leaf_order())) {
      report.errors.push_back("cycle order disagrees with the rotation system's leaf order");
    }
  }
  if (c.size() == 5) report.warnings.push_back("|C| = 5: not covered by the construction");

  if (instance.mode == Mode::CompleteHalin) {
    int leaf_depth = -1;
    bool equal = true;
    for (Vertex l : leaves) {
      if (leaf_depth < 0) leaf_depth = t.depth(l);
      equal = equal && t.depth(l) == leaf_depth;
    }
    if (!equal) report.errors.push_back("complete mode: leaves are not all at the same depth");
    for (Vertex v = 0; v < t.size(); ++v) {
      if (t.degree(v) == 2) {
        report.errors.push_back("complete mode: vertex " + std::to_string(v) + " has degree 2");
        break;
      }
    }
  }
  return report;
}

}  // namespace halinstar
