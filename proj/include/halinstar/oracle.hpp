#pragma once

#include <cstdint>
#include <optional>

#include "halinstar/halin.hpp"
#include "halinstar/verify.hpp"

namespace halinstar {

struct OracleResult {
  std::optional<int> index;  // empty: no star coloring with <= max_colors colors
  EdgeColoring witness;      // a star coloring attaining `index`
  std::uint64_t nodes = 0;   // search nodes visited

  bool exceeds_bound() const { return !index.has_value(); }
};

/// Exact star chromatic index by iterative deepening from Delta(G) with
/// backtracking. Each assignment is checked against every 4-edge path or
/// cycle it completes. The first edge is fixed to color 0 and the second to
/// {0, 1}. Practical up to about 16 edges.
OracleResult star_chromatic_index(const SimpleGraph& graph, int max_colors);

/// Some star coloring of `graph` from `lists`, or nullopt if none exists.
std::optional<EdgeColoring> find_list_star_coloring(const SimpleGraph& graph,
                                                    const ListAssignment& lists);

/// Number of random k-list assignments (palette {0..palette_size-1}) on
/// which the constructive algorithm fails or its output does not verify.
int check_choosability_sample(const HalinInstance& instance, Mode mode, int k, int palette_size,
                              int trials, std::uint64_t seed);

/// Same for an arbitrary small graph, using exhaustive list coloring.
int check_choosability_sample(const SimpleGraph& graph, int k, int palette_size, int trials,
                              std::uint64_t seed);

}  // namespace halinstar
