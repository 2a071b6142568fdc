#pragma once

#include <cstdint>
#include <optional>

#include "subsum/series.hpp"

namespace subsum {

struct EnumLimits {
  Index depth_limit = 24;
  Index prefix_depth = 8;   // parallel split depth
  int threads = 0;          // 0 = hardware concurrency
  double dedup_grid = 0x1p-40;  // float-mode duplicate quantization
};

struct ValueGroup {
  Vec value;
  std::uint64_t multiplicity;
};

// The multiset { sum_{n in A, n <= N} term(n) : A subseteq {1..N} } grouped
// by exact value, in canonical (lexicographic) order. Float-mode groups are
// keyed on the configured quantization grid.
std::vector<ValueGroup> enumerate_exact(const SeriesSpec& spec, Index N,
                                        const EnumLimits& limits = {});

// Finite cover of the whole achievement set: one box per distinct depth-N
// prefix sum, inflated by the declared tail enclosure. With a window, boxes
// wholly outside are discarded and unreachable branches are pruned early
// (the cover is then valid only within the window).
struct BoxCover {
  Index depth = 0;
  std::vector<Box> boxes;
  std::string source;
  bool one_sided = false;  // one-sided tail refinement applied on positive coords
};

BoxCover box_cover(const SeriesSpec& spec, Index N,
                   const std::optional<Box>& window = std::nullopt,
                   const EnumLimits& limits = {});

struct SearchLimits {
  Index depth_limit = 100000;
  std::int64_t budget = 4'000'000;
};

// Finite-support selection whose partial sum lies within eps of target in
// the sup norm (verified before returning). The finite sum itself is an
// achievement point, so success certifies dist(target, A) < eps. A nullopt
// is inconclusive: it never proves non-membership.
std::optional<Selection> membership_search(const SeriesSpec& spec, const Vec& target,
                                           const Scalar& eps, const SearchLimits& limits = {});

struct ExtremePointReport {
  Vec point;
  std::vector<Selection> representations;  // exhaustive over {0,1}^N
  bool is_hull_vertex = false;
};

// Convex-hull vertices of the depth-N subsum cloud with every selection
// achieving each vertex exactly. Dimensions 1 and 2.
std::vector<ExtremePointReport> extreme_points(const SeriesSpec& spec, Index N,
                                               const EnumLimits& limits = {});

}  // namespace subsum
