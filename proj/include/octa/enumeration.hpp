#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "octa/colored_graph.hpp"

namespace octa {

struct EnumerationOptions {
  /// Restrict the class stream to connected graphs (the report's counts are
  /// always over connected pairings).
  bool connected_only = true;
  /// Stream only the face-maximizing classes.
  bool dominant_only = false;
  /// Opt in to b = 3 (12! pairings).
  bool long_running = false;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
  /// Called with (prefixes done, prefixes total) as work completes.
  std::function<void(int, int)> progress;
};

struct IsoClass {
  ColoredGraph graph;  // canonical representative
  int faces = 0;
  std::uint64_t automorphisms = 0;
};

struct EnumerationReport {
  int bubbles = 0;
  std::uint64_t total_pairings = 0;
  std::uint64_t total_connected_pairings = 0;
  int max_faces = 0;
  std::uint64_t dominant_labeled_pairings = 0;
  std::uint64_t dominant_iso_classes = 0;
  std::uint64_t rooted_count = 0;
  /// Automorphism group size of each dominant class, in stream order.
  std::vector<std::uint64_t> automorphism_sizes;
  /// Classes selected by the options, sorted by canonical sigma0.
  std::vector<IsoClass> classes;
};

/// Largest b enumerated without the long-running flag, and the hard limit.
inline constexpr int kQuickBubbleLimit = 2;
inline constexpr int kLongRunningBubbleLimit = 3;

/// Exhaustive search over all (4b)! color-0 pairings, split by the image of
/// label 0 across workers and merged in prefix order. Throws BudgetExceeded
/// when b is over the configured limit and InvalidInput when b < 1.
EnumerationReport enumerate(int b, const EnumerationOptions& options = {});

/// Rooted dominant maps with b squares: the sum over dominant classes of
/// 4b / |Aut|. Throws std::logic_error if the sum is not integral.
std::uint64_t rooted_count(int b, bool long_running = false);

/// Dominant classes reachable from the zero-square map by b square
/// insertions (all corners, all modes), as canonical colored graphs.
std::vector<ColoredGraph> insertion_closure(int b);

}  // namespace octa
