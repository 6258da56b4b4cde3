#pragma once

#include <optional>
#include <vector>

#include "halinstar/halin.hpp"
#include "halinstar/star_decomp.hpp"

namespace halinstar {

/// Cycle edges split by whether both ends hang from the same father (E1) or
/// not (E2). Indexed by cycle position.
struct CyclePartition {
  std::vector<bool> same_father;

  bool in_e1(std::size_t pos) const { return same_father[pos]; }
};

CyclePartition partition_cycle(const HalinInstance& instance);

/// What was removed from L(uv) to get L'(uv), for one cycle edge uv.
struct RestrictionProvenance {
  bool e1 = false;
  Color a_u = kNoColor;  // color of x-parent(x), x = u's other cycle neighbour
  Color a_v = kNoColor;
  std::vector<Color> b_u;  // low-rho colors at parent(u), E2 only
  std::vector<Color> b_v;
  std::vector<Color> phi_x;  // E1: every color at the common father
  Color pendant_u = kNoColor;  // E2: color of u-parent(u)
  Color pendant_v = kNoColor;
};

struct RestrictedLists {
  std::vector<ColorList> lists;  // by cycle position
  std::vector<RestrictionProvenance> provenance;
};

/// Builds L' from a complete tree coloring (indexed by EdgeIndex).
/// Throws InternalError if some |L'| < 3, naming the inequality that broke.
RestrictedLists build_restricted_lists(const HalinInstance& instance,
                                       const EdgeColoring& tree_coloring,
                                       const StarDecomposition& decomposition,
                                       const ListAssignment& lists, Mode mode);

/// Lexicographically least star coloring of the cycle whose i-th edge takes a
/// color from lists[i] (edges i and i+1 adjacent, the last closes the cycle),
/// or nullopt when none exists. Proper, and no four consecutive edges read
/// a,b,a,b cyclically.
///
/// Top-down dynamic program over (position, last three colors), run once per
/// choice of the first three colors since those close the seam.
std::optional<std::vector<Color>> find_cycle_star_coloring(const std::vector<ColorList>& lists);

/// As above but throws: Refusal for an unsatisfiable 5-cycle, InternalError
/// for any other length (every other length is 3-choosable).
std::vector<Color> star_color_cycle(const std::vector<ColorList>& lists);

struct HalinColoringOptions {
  bool force_c5 = false;
};

/// Full star list coloring of H = T + C. Throws Refusal on |C| = 5 (unless
/// forced), lists shorter than k(mode), or an instance that is not valid in
/// the requested mode.
EdgeColoring color_halin(const HalinInstance& instance, const ListAssignment& lists, Mode mode,
                         HalinColoringOptions options = {});

/// Structural check for complete instances: every E2 edge is isolated within
/// H[E2], i.e. its two cycle neighbours are in E1.
bool e2_components_are_single_edges(const HalinInstance& instance);

}  // namespace halinstar
