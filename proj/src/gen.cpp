#include "halinstar/gen.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace halinstar {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::GeneralizedHalin:
      return "generalized-halin";
    case GenKind::CompleteHalin:
      return "complete-halin";
    case GenKind::CubicHalin:
      return "cubic-halin";
    case GenKind::Tree:
      return "tree";
    case GenKind::Wheel:
      return "wheel";
    case GenKind::Cycle:
      return "cycle";
  }
  return "?";
}

std::optional<GenKind> parse_gen_kind(std::string_view text) {
  for (GenKind k : {GenKind::GeneralizedHalin, GenKind::CompleteHalin, GenKind::CubicHalin,
                    GenKind::Tree, GenKind::Wheel, GenKind::Cycle})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

namespace {

// Growable rooted tree; ids are assigned in insertion order, root is 0.
struct Builder {
  std::vector<std::vector<Vertex>> children{{}};
  std::vector<Vertex> parent{kNoVertex};

  int size() const { return static_cast<int>(children.size()); }
  int degree(Vertex v) const { return static_cast<int>(children[v].size()) + (v == 0 ? 0 : 1); }
  Vertex add_child(Vertex v) {
    const Vertex c = size();
    children[v].push_back(c);
    children.emplace_back();
    parent.push_back(v);
    return c;
  }
  int leaf_count() const {
    int count = 0;
    for (Vertex v = 1; v < size(); ++v) count += children[v].empty();
    return count;
  }
  HalinInstance finish(Mode mode, bool with_cycle) {
    HalinInstance inst;
    inst.tree = PlaneTree(size(), 0, children);
    inst.mode = mode;
    if (with_cycle) inst.cycle = inst.tree.dfs_leaf_order();
    return inst;
  }
};

// Random tree with Delta(T) = delta exactly, root 0 of degree delta.
Builder grow_tree(const GenSpec& spec, Rng& rng) {
  const int delta = spec.delta;
  if (delta < 3) throw std::invalid_argument("Delta must be at least 3");
  Builder b;
  for (int i = 0; i < 3; ++i) b.add_child(0);
  const Vertex twin = spec.twin_hubs ? 1 : kNoVertex;

  const auto capacity = [&](Vertex v) { return delta - b.degree(v); };
  const auto reserved = [&]() {
    int r = capacity(0);
    if (twin != kNoVertex) r += capacity(twin);
    return r;
  };
  // Per-instance shape: how often to extend the newest vertex (long paths,
  // degree-2 vertices) instead of a uniform pick.
  const double chain_bias = std::array{0.0, 0.25, 0.6}[rng.uniform(0, 2)];

  std::vector<Vertex> open;
  while (b.size() + reserved() < spec.n) {
    Vertex target = kNoVertex;
    if (rng.unit() < chain_bias && capacity(b.size() - 1) > 0) {
      target = b.size() - 1;
    } else {
      open.clear();
      for (Vertex v = 0; v < b.size(); ++v)
        if (capacity(v) > 0) open.push_back(v);
      target = open[rng.uniform(0, static_cast<int>(open.size()) - 1)];
    }
    b.add_child(target);
  }
  while (capacity(0) > 0) b.add_child(0);
  if (twin != kNoVertex)
    while (capacity(twin) > 0) b.add_child(twin);
  return b;
}

void shuffle_rotations(Builder& b, Rng& rng) {
  for (auto& kids : b.children) rng.shuffle(kids);
}

HalinInstance gen_generalized(const GenSpec& spec, Rng& rng, bool tree_only) {
  Builder b = grow_tree(spec, rng);
  if (!tree_only && spec.exclude_c5 && b.leaf_count() == 5) {
    Vertex host = kNoVertex;
    for (Vertex v = 1; v < b.size() && host == kNoVertex; ++v)
      if (!b.children[v].empty() && b.degree(v) < spec.delta) host = v;
    if (host != kNoVertex) {
      b.add_child(host);
    } else {
      // Every internal vertex is saturated: split a leaf into two.
      Vertex leaf = 1;
      while (!b.children[leaf].empty()) ++leaf;
      b.add_child(leaf);
      b.add_child(leaf);
    }
  }
  shuffle_rotations(b, rng);
  return b.finish(tree_only ? Mode::TreeOnly : Mode::GeneralizedHalin, !tree_only);
}

HalinInstance gen_complete(const GenSpec& spec, Rng& rng) {
  if (spec.delta < 3) throw std::invalid_argument("complete Halin needs Delta >= 3");
  if (spec.depth < 1) throw std::invalid_argument("complete Halin needs depth >= 1");
  if (spec.depth == 1 && spec.delta == 5 && spec.exclude_c5)
    throw std::invalid_argument("depth 1 with Delta 5 forces |C| = 5");
  Builder b;
  std::vector<Vertex> level;
  for (int i = 0; i < spec.delta; ++i) level.push_back(b.add_child(0));
  for (int d = 1; d < spec.depth; ++d) {
    std::vector<Vertex> next;
    for (Vertex v : level) {
      const int remaining_levels = spec.depth - d;
      // Keep the vertex budget: if even binary growth would overshoot, stay binary.
      const bool tight = b.size() + static_cast<int>(level.size()) * (1 << remaining_levels) > spec.n;
      const int kids = tight ? 2 : rng.uniform(2, spec.delta - 1);
      for (int i = 0; i < kids; ++i) next.push_back(b.add_child(v));
    }
    level = std::move(next);
  }
  shuffle_rotations(b, rng);
  return b.finish(Mode::CompleteHalin, true);
}

HalinInstance gen_cubic(const GenSpec& spec, Rng& rng) {
  if (spec.n < 1) throw std::invalid_argument("cubic Halin needs at least one internal vertex");
  Builder b;
  for (int i = 0; i < 3; ++i) b.add_child(0);
  int internal = 1;
  const auto expand = [&]() {
    std::vector<Vertex> leaves;
    for (Vertex v = 1; v < b.size(); ++v)
      if (b.children[v].empty()) leaves.push_back(v);
    const Vertex leaf = leaves[rng.uniform(0, static_cast<int>(leaves.size()) - 1)];
    b.add_child(leaf);
    b.add_child(leaf);
    ++internal;
  };
  while (internal < spec.n) expand();
  if (spec.exclude_c5 && b.leaf_count() == 5) expand();
  return b.finish(Mode::GeneralizedHalin, true);
}

HalinInstance gen_wheel(int n) {
  if (n < 4) throw std::invalid_argument("wheel W_n needs n >= 4");
  Builder b;
  for (int i = 1; i < n; ++i) b.add_child(0);
  return b.finish(Mode::GeneralizedHalin, true);
}

}  // namespace

HalinInstance gen_instance(const GenSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GenKind::GeneralizedHalin:
      return gen_generalized(spec, rng, false);
    case GenKind::Tree:
      return gen_generalized(spec, rng, true);
    case GenKind::CompleteHalin:
      return gen_complete(spec, rng);
    case GenKind::CubicHalin:
      return gen_cubic(spec, rng);
    case GenKind::Wheel:
      return gen_wheel(spec.n);
    case GenKind::Cycle:
      break;
  }
  throw std::invalid_argument("a plain cycle is not a Halin instance");
}

SimpleGraph gen_graph(const GenSpec& spec) {
  if (spec.kind == GenKind::Cycle) {
    if (spec.n < 3) throw std::invalid_argument("cycle needs n >= 3");
    return make_cycle(spec.n);
  }
  return to_simple_graph(gen_instance(spec));
}

ListAssignment gen_lists(std::size_t edge_count, int list_size, int palette_size, std::uint64_t seed) {
  if (list_size < 0 || list_size > palette_size)
    throw std::invalid_argument("need 0 <= list_size <= palette_size");
  Rng rng(seed);
  std::vector<Color> palette(palette_size);
  ListAssignment lists(edge_count);
  for (auto& list : lists) {
    for (int i = 0; i < palette_size; ++i) palette[i] = i;
    // Partial Fisher-Yates: the first list_size slots are a uniform subset.
    for (int i = 0; i < list_size; ++i) std::swap(palette[i], palette[rng.uniform(i, palette_size - 1)]);
    list.assign(palette.begin(), palette.begin() + list_size);
    std::sort(list.begin(), list.end());
  }
  return lists;
}

ListAssignment gen_lists(const HalinInstance& instance, int list_size, int palette_size,
                         std::uint64_t seed) {
  return gen_lists(EdgeIndex(instance).size(), list_size, palette_size, seed);
}

}  // namespace halinstar
