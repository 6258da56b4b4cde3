#include <doctest.h>

#include <algorithm>
#include <string>

#include "halinstar/errors.hpp"
#include "halinstar/gen.hpp"
#include "halinstar/tree_colorer.hpp"
#include "support.hpp"

using namespace halinstar;
using testsupport::instance;
using testsupport::uniform_lists;

namespace {

const char* kK13 = "tree 4 0\n0: 1 2 3\ncycle: 1 2 3\nmode: generalized\n";

HalinInstance hub_with_child(int extra, Mode mode = Mode::TreeOnly) {
  std::vector<std::vector<Vertex>> ch(14 + extra);
  for (int c = 1; c <= 13; ++c) ch[0].push_back(c);
  for (int c = 0; c < extra; ++c) ch[1].push_back(14 + c);
  PlaneTree t(14 + extra, 0, ch);
  std::vector<Vertex> cycle;
  if (mode != Mode::TreeOnly) cycle = t.dfs_leaf_order();
  return {std::move(t), std::move(cycle), mode};
}

// Runs color_root_star on K_{1,3} with the given tree-edge lists.
EdgeColoring root_star(const ListAssignment& tree_lists) {
  const HalinInstance h = instance(kK13);
  ListAssignment lists = tree_lists;
  lists.resize(6, ColorList{0});
  const auto dec = decompose(h.tree, derive_params(h), h.mode);
  const BadPairIndex bad(h);
  ColoringState state(h);
  const TreeColoringContext ctx{h, dec, bad, lists, h.mode};
  color_root_star(state, ctx);
  return {state.coloring().begin(), state.coloring().begin() + 3};
}

SimpleGraph tree_graph(const HalinInstance& h) {
  SimpleGraph g = to_simple_graph(h);
  g.edges.resize(EdgeIndex(h).tree_edge_count());
  return g;
}

}  // namespace

TEST_CASE("star order") {
  CHECK(order_stars(instance(kK13).tree) == std::vector<Vertex>{0});
  CHECK(order_stars(PlaneTree(4, 0, {{1, 2}, {3}, {}, {}})) == std::vector<Vertex>{0, 1});
  const PlaneTree path_below(8, 0, {{1, 2, 3}, {}, {}, {4}, {5}, {6}, {7}, {}});
  CHECK(order_stars(path_below) == std::vector<Vertex>{0, 3, 4, 5, 6});
  const PlaneTree ties(9, 0, {{3, 1, 2}, {4}, {5, 6}, {7, 8}, {}, {}, {}, {}, {}});
  CHECK(order_stars(ties) == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("root star: smallest admissible color in rotation order") {
  CHECK(root_star(uniform_lists(3, 9)) == EdgeColoring{0, 1, 2});
  CHECK(root_star({{0}, {1}, {2}}) == EdgeColoring{0, 1, 2});
  CHECK(root_star({{0}, {0, 1}, {0, 1, 2}}) == EdgeColoring{0, 1, 2});
}

TEST_CASE("a one-edge star avoids every color at the parent") {
  const HalinInstance h{PlaneTree(5, 0, {{1, 2, 3}, {4}, {}, {}, {}}), {}, Mode::TreeOnly};
  const EdgeIndex idx(h);
  const auto c = color_tree(h, uniform_lists(idx.size(), derive_params(h).k_tree), Mode::TreeOnly);
  const Color down = c[idx.tree_edge(4)];
  for (Vertex u : {1, 2, 3}) CHECK(down != c[idx.tree_edge(u)]);
}

TEST_CASE("an all-red star below a degree-13 hub uses colors disjoint from the hub") {
  const HalinInstance h = hub_with_child(6, Mode::GeneralizedHalin);
  REQUIRE(derive_params(h).k_halin == 19);
  const EdgeIndex idx(h);
  const auto c = color_tree(h, uniform_lists(idx.size(), 19), Mode::GeneralizedHalin);
  std::vector<Color> hub;
  for (Vertex u = 1; u <= 13; ++u) hub.push_back(c[idx.tree_edge(u)]);
  for (int x = 14; x < 20; ++x) CHECK(std::find(hub.begin(), hub.end(), c[idx.tree_edge(x)]) == hub.end());
}

TEST_CASE("blue edges below a degree-13 hub still find a color with k = 19") {
  const HalinInstance h = hub_with_child(12);
  const auto params = derive_params(h);
  REQUIRE(params.k_tree == 19);
  const EdgeIndex idx(h);
  const auto dec = decompose(h.tree, params, Mode::TreeOnly);
  const auto c = color_tree(h, uniform_lists(idx.size(), 19), Mode::TreeOnly);
  CHECK(tree_property_violations(h, dec, c, Mode::TreeOnly).empty());
  CHECK(testsupport::naive_is_star(tree_graph(h), c));
}

TEST_CASE("adjacent degree-13 hubs from random 19-lists over 38 colors") {
  const HalinInstance h = hub_with_child(12);
  const SimpleGraph g = tree_graph(h);
  const auto dec = decompose(h.tree, derive_params(h), Mode::TreeOnly);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ListAssignment lists = gen_lists(h, 19, 38, seed);
    const EdgeColoring c = color_tree(h, lists, Mode::TreeOnly);
    INFO("seed " << seed);
    CHECK(testsupport::naive_is_list_star(g, c, lists));
    CHECK(tree_property_violations(h, dec, c, Mode::TreeOnly).empty());
  }
}

TEST_CASE("paths are refused") {
  const HalinInstance p4{PlaneTree(4, 0, {{1}, {2}, {3}, {}}), {}, Mode::TreeOnly};
  try {
    color_tree(p4, uniform_lists(3, 5), Mode::TreeOnly);
    FAIL("expected a refusal");
  } catch (const Refusal& e) {
    CHECK(std::string(e.what()).find("< 3 unsupported") != std::string::npos);
  }
}

TEST_CASE("short lists are refused with the required k") {
  const HalinInstance h = instance("tree 4 0\n0: 1 2 3\n");
  try {
    color_tree(h, uniform_lists(3, 2), Mode::TreeOnly);
    FAIL("expected a refusal");
  } catch (const Refusal& e) {
    CHECK(std::string(e.what()).find("need |L(e)| >= k = 3") != std::string::npos);
  }
}

TEST_CASE("tree coloring on generated instances: star, invariant-clean, deterministic") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    Rng rng(seed);
    GenSpec spec;
    spec.kind = seed % 2 ? GenKind::Tree : GenKind::GeneralizedHalin;
    spec.n = rng.uniform(5, 60);
    spec.delta = rng.uniform(3, 10);
    spec.twin_hubs = seed % 3 == 0;
    spec.seed = seed;
    const HalinInstance h = gen_instance(spec);
    const auto params = derive_params(h);
    const int k = params.k_for(h.mode);
    const ListAssignment lists = gen_lists(h, k, 2 * k, seed);
    const auto dec = decompose(h.tree, params, h.mode);
    const EdgeColoring c = color_tree(h, lists, h.mode);
    INFO("seed " << seed);
    CHECK(color_tree(h, lists, h.mode) == c);
    CHECK(tree_property_violations(h, dec, c, h.mode).empty());
    const SimpleGraph g = tree_graph(h);
    CHECK(testsupport::naive_is_list_star(g, EdgeColoring(c.begin(), c.begin() + g.edges.size()),
                                          ListAssignment(lists.begin(), lists.begin() + g.edges.size())));
    for (std::size_t e = g.edges.size(); e < c.size(); ++e) CHECK(c[e] == kNoColor);
  }
}
