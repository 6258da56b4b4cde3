#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halinstar/halin.hpp"

namespace halinstar {

/// Simple undirected graph; no loops, no parallel edges.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  /// Throws std::invalid_argument on loops, duplicates or out-of-range ends.
  void check() const;
  int max_degree() const;
};

/// E(H) as a simple graph, edges numbered like EdgeIndex.
SimpleGraph to_simple_graph(const HalinInstance& instance);

SimpleGraph make_cycle(int n);
/// W_n: hub 0 plus a rim of n-1 vertices.
SimpleGraph make_wheel(int n);

enum class ViolationKind { Improper, BichromaticPath, BichromaticCycle, OffList };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> witness;  // edge indices: 1 (off-list), 2 (improper) or 4

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every way `coloring` fails to be a star coloring of `graph` (from `lists`,
/// when given). Bichromatic paths and 4-cycles are each reported once, witness
/// edges in walk order. Requires a total coloring.
std::vector<Violation> verify_star(const SimpleGraph& graph, const EdgeColoring& coloring,
                                   const std::optional<ListAssignment>& lists = std::nullopt);

std::string describe(const Violation& v, const SimpleGraph& graph);

}  // namespace halinstar
