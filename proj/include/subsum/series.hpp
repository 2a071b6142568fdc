#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "subsum/linalg.hpp"
#include "subsum/selection.hpp"

namespace subsum {

enum class ConvergenceTag {
  AbsolutelyConvergent,
  ConditionallyConvergent,
  PotentiallyConditionallyDivergent,
};

// Declared behaviour of n -> f(term(n)) for a basis functional f. Absolutely
// convergent directions may carry an exact tail bound B(N) >= sum_{k>N}
// |f(term(k))| and, when the remainder itself has a closed form, the exact
// remainder R(N) = sum_{k>N} f(term(k)).
struct DirectionTag {
  Vec functional;
  ConvergenceTag tag = ConvergenceTag::ConditionallyConvergent;
  std::function<Scalar(Index)> abs_tail_bound;   // nullable
  std::function<Scalar(Index)> exact_remainder;  // nullable
};

// Which side of the quick-convergence comparison |x_n| vs sum_{k>n} |x_k|
// holds for every n beyond the declared eventual-regime index.
enum class KakeyaBeyond { AlwaysGreater, AlwaysAtMost, Mixed };

struct KakeyaRegime {
  Index eventual_index = 1;
  KakeyaBeyond beyond = KakeyaBeyond::Mixed;
};

// Block-ray shape for series built from sign-alternating blocks: indices in
// (block_end(k-1), block_end(k)] all carry the same magnitude vector ray(k)
// with sign (-1)^i. Drives the structured membership search.
struct BlockStructure {
  std::function<Index(Index)> block_end;  // n_k, with n_0 = 0
  std::function<Vec(Index)> ray;          // positive magnitude vector of block k
  Index max_block = 0;                    // last representable block
};

// A series in R^m: a pure 1-based term generator plus declared analytic
// metadata. Immutable after construction; generators must be pure.
struct SeriesSpec {
  int dimension = 1;
  std::function<Vec(Index)> term;
  std::function<std::vector<double>(Index)> term_f64;  // fast path; derived if absent

  // sum_{k>N} ||term(k)||_inf <= tail_norm_bound(N); present iff the series
  // is declared absolutely convergent.
  std::function<Scalar(Index)> tail_norm_bound;
  // || sum_{k in A, k>N} term(k) ||_inf <= selection_tail_bound(N) for every
  // index set A; declared for unconditionally convergent series.
  std::function<Scalar(Index)> selection_tail_bound;
  // 1-D only: exact value of sum_{k>N} |term(k)|.
  std::function<Scalar(Index)> exact_abs_tail;

  std::vector<DirectionTag> direction_tags;
  bool monotone_nonincreasing_abs = false;
  std::optional<Index> nonzero_count;  // nullopt = infinitely many
  std::optional<Scalar> inf_nonzero_norm;
  bool has_null_subsequence_of_nonzero_terms = false;
  std::vector<bool> positive_coords;  // per-coordinate: all terms >= 0
  std::optional<KakeyaRegime> kakeya_regime;
  std::optional<BlockStructure> blocks;
  std::string name;

  std::vector<double> eval_f64(Index n) const {
    if (term_f64) return term_f64(n);
    return term(n).to_doubles();
  }
  bool coord_positive(std::size_t c) const {
    return c < positive_coords.size() && positive_coords[c];
  }
  bool all_coords_positive() const {
    if (positive_coords.size() != static_cast<std::size_t>(dimension)) return false;
    for (bool b : positive_coords)
      if (!b) return false;
    return true;
  }
  // Bound usable for enclosing arbitrary tail subsums.
  std::function<Scalar(Index)> usable_tail_bound() const {
    if (selection_tail_bound) return selection_tail_bound;
    return tail_norm_bound;
  }
};

// Exact running state of a selective partial sum.
struct PartialSumState {
  Index next_index = 1;
  Vec sum;
  Index terms_used = 0;

  void advance(const SeriesSpec& spec, const Selection& sel, Index upto);
};

// sum_{n <= upto, sel contains n} term(n); exact when the generator is exact.
Vec partial_sum(const SeriesSpec& spec, const Selection& sel, Index upto);
std::vector<double> partial_sum_f64(const SeriesSpec& spec, const Selection& sel, Index upto);

struct TailEnclosure {
  Box box;            // symmetric box [-B, B]^m
  Scalar bound;       // B
  bool one_sided;     // all-positive series: [0, B]^m is also valid
  Box refined;        // per-coordinate one-sided refinement where available
};

// Enclosure of every tail subsum over indices > N.
TailEnclosure tail_box(const SeriesSpec& spec, Index N);

// Series transformed by a finite index permutation (identity beyond the
// permutation's length). perm is 1-based: new term(i) = term(perm[i-1]).
SeriesSpec permuted_series(const SeriesSpec& spec, const std::vector<Index>& perm);

// Projection onto a subset of coordinates, tags filtered accordingly.
SeriesSpec project_series(const SeriesSpec& spec, const std::vector<std::size_t>& coords);

}  // namespace subsum
