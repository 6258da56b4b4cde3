#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "halinstar/halin.hpp"
#include "halinstar/verify.hpp"

namespace halinstar {

/// Reproducible randomness: std::mt19937_64 (its output sequence is fixed by
/// the standard) with our own bounded draws, since the standard
/// distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi], rejection sampled.
  int uniform(int lo, int hi);
  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer over (base, index): independent per-trial seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

enum class GenKind { GeneralizedHalin, CompleteHalin, CubicHalin, Tree, Wheel, Cycle };

std::string to_string(GenKind kind);
/// "generalized-halin", "complete-halin", "cubic-halin", "tree", "wheel", "cycle".
std::optional<GenKind> parse_gen_kind(std::string_view text);

struct GenSpec {
  GenKind kind = GenKind::GeneralizedHalin;
  /// generalized / tree: target vertex count of T (grown past it only to reach
  ///   the requested Delta); complete: soft vertex cap; cubic: number of
  ///   internal vertices; wheel / cycle: order.
  int n = 20;
  /// Target Delta(T) (generalized, complete, tree).
  int delta = 4;
  /// Leaf depth (complete).
  int depth = 2;
  std::uint64_t seed = 1;
  /// Halin kinds other than wheel: never produce |C| = 5.
  bool exclude_c5 = true;
  /// generalized / tree: give a child of the root degree Delta too, so
  /// theta(T) = 2 Delta.
  bool twin_hubs = false;
  int list_size = 0;
  int palette_size = 0;
};

/// Throws std::invalid_argument on an unsatisfiable spec.
HalinInstance gen_instance(const GenSpec& spec);
/// Any kind, including plain cycles.
SimpleGraph gen_graph(const GenSpec& spec);

/// Each edge gets a uniform random `list_size`-subset of {0..palette_size-1}.
ListAssignment gen_lists(std::size_t edge_count, int list_size, int palette_size, std::uint64_t seed);
ListAssignment gen_lists(const HalinInstance& instance, int list_size, int palette_size,
                         std::uint64_t seed);

}  // namespace halinstar
