#include <doctest.h>

#include "halinstar/gen.hpp"
#include "halinstar/verify.hpp"
#include "support.hpp"

using namespace halinstar;

namespace {

SimpleGraph path(int edges) {
  SimpleGraph g{edges + 1, {}};
  for (int i = 0; i < edges; ++i) g.edges.push_back({i, i + 1});
  return g;
}

}  // namespace

TEST_CASE("C_4 colored 1,2,1,2 is one bichromatic cycle") {
  const auto v = verify_star(make_cycle(4), {1, 2, 1, 2});
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::BichromaticCycle);
  CHECK(v[0].witness.size() == 4);
}

TEST_CASE("P_5 colored 1,2,1,2 is one bichromatic path") {
  const auto v = verify_star(path(4), {1, 2, 1, 2});
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::BichromaticPath);
  CHECK(v[0].witness == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("P_5 colored 1,2,1,3 is clean") { CHECK(verify_star(path(4), {1, 2, 1, 3}).empty()); }

TEST_CASE("improper and off-list colorings") {
  const auto v = verify_star(path(2), {4, 4});
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::Improper);
  const auto off = verify_star(path(2), {0, 1}, ListAssignment{{0}, {2, 3}});
  REQUIRE(off.size() == 1);
  CHECK(off[0].kind == ViolationKind::OffList);
  CHECK(off[0].witness == std::vector<std::size_t>{1});
  CHECK(to_string(ViolationKind::BichromaticPath) == "bichromatic-path");
}

TEST_CASE("partial or mismatched colorings are rejected") {
  CHECK_THROWS_AS(verify_star(path(3), {0, kNoColor, 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_star(path(3), {0, 1}), std::invalid_argument);
}

TEST_CASE("simple graph checks") {
  CHECK_THROWS_AS((SimpleGraph{3, {{0, 0}}}.check()), std::invalid_argument);
  CHECK_THROWS_AS((SimpleGraph{3, {{0, 1}, {1, 0}}}.check()), std::invalid_argument);
  CHECK_THROWS_AS((SimpleGraph{3, {{0, 3}}}.check()), std::invalid_argument);
  CHECK(make_wheel(5).edges.size() == 8);
  CHECK(make_wheel(5).max_degree() == 4);
}

TEST_CASE("verifier agrees with the naive checker on random colorings") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform(4, 8);
    SimpleGraph g{n, {}};
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.uniform(0, 2) == 0) g.edges.push_back({a, b});
    if (g.edges.empty()) continue;
    EdgeColoring c(g.edges.size());
    const int colors = rng.uniform(2, 5);
    for (auto& x : c) x = rng.uniform(0, colors - 1);
    const auto violations = verify_star(g, c);
    INFO("trial " << trial);
    CHECK(violations.empty() == testsupport::naive_is_star(g, c));
    for (const auto& v : violations) {
      if (v.kind == ViolationKind::Improper) {
        REQUIRE(v.witness.size() == 2);
        CHECK(c[v.witness[0]] == c[v.witness[1]]);
        CHECK(testsupport::shares_vertex(g.edges[v.witness[0]], g.edges[v.witness[1]]));
        continue;
      }
      REQUIRE(v.witness.size() == 4);
      const auto& w = v.witness;
      CHECK(testsupport::is_four_path_or_cycle(g, static_cast<int>(w[0]), static_cast<int>(w[1]),
                                               static_cast<int>(w[2]), static_cast<int>(w[3])));
      CHECK(c[w[0]] == c[w[2]]);
      CHECK(c[w[1]] == c[w[3]]);
      CHECK(c[w[0]] != c[w[1]]);
    }
  }
}

TEST_CASE("describe names the kind and the edges") {
  const SimpleGraph g = path(4);
  const auto v = verify_star(g, {1, 2, 1, 2});
  REQUIRE(v.size() == 1);
  const std::string s = describe(v[0], g);
  CHECK(s.find("bichromatic-path") != std::string::npos);
  CHECK(s.find("3-4") != std::string::npos);
}
