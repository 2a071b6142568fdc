#pragma once

#include "subsum/series.hpp"

namespace subsum {

enum class KakeyaLabel { Finite, CantorLike, FiniteUnionOfIntervals, MixedUnknown };
const char* kakeya_label_name(KakeyaLabel l);

struct KakeyaComparison {
  Index n;
  Scalar abs_term;
  Scalar tail;  // sum_{k>n} |x_k|
  int cmp;      // sign of |x_n| - tail
};

struct KakeyaClass {
  KakeyaLabel label;
  std::vector<KakeyaComparison> witness;  // exact comparisons up to the regime index
  Index eventual_index = 0;
  KakeyaBeyond beyond = KakeyaBeyond::Mixed;
};

// Dichotomy for 1-D absolutely convergent series: quickly convergent tails
// give Cantor-type sets, dominated tails of nonincreasing series fill
// intervals. The label is decided from exact comparisons up to the declared
// eventual-regime index plus the declared outcome beyond it.
KakeyaClass kakeya_classify(const SeriesSpec& spec);

enum class CardinalityLabel { Finite, CountablyInfinite, ContainsPerfectSet };
const char* cardinality_label_name(CardinalityLabel l);

CardinalityLabel cardinality_class(const SeriesSpec& spec);

enum class SelectionClass {
  Absolute,
  Conditional,
  PotentiallyConditional,
  NotPotentiallyConditional,
};
const char* selection_class_name(SelectionClass c);

// Convergence type of the selected subseries of a 1-D series.
SelectionClass selection_convergence_class(const SeriesSpec& spec, const Selection& sel);

struct GammaOptions {
  int grid = 720;            // direction resolution for m == 2
  Index fit_min = 1000;
  Index fit_max = 10000;
  double slope_threshold = 0.1;
  double corr_threshold = 0.99;
};

struct ConvergenceFunctionals {
  enum class Mode { Declared, Heuristic };
  std::vector<Vec> gamma_basis;       // functionals f with sum |f(x_n)| finite
  std::vector<Vec> gamma_perp_basis;  // annihilator directions
  Mode mode = Mode::Declared;

  int gamma_dim() const { return static_cast<int>(gamma_basis.size()); }
  int perp_dim() const { return static_cast<int>(gamma_perp_basis.size()); }
};

ConvergenceFunctionals gamma_compute(const SeriesSpec& spec,
                                     ConvergenceFunctionals::Mode mode,
                                     const GammaOptions& opt = {});

struct SteinitzDecomposition {
  int k = 0;                      // dim of the annihilator
  std::vector<Vec> basis_change;  // rows of T, annihilator rows first
  SeriesSpec conditional_part;    // R^k projection (sum range = R^k)
  SeriesSpec absolute_part;       // R^(m-k) projection, absolutely convergent
  bool exact = true;
};

// Adapted coordinates splitting the series into a fully conditionally
// convergent part and an absolutely convergent part. Declared-mode
// functionals only; a heuristic gamma is rejected.
SteinitzDecomposition steinitz_decompose(const SeriesSpec& spec,
                                         const ConvergenceFunctionals* gamma = nullptr);

struct SumRange {
  Vec base_point;
  std::vector<Vec> directions;
};

// base + annihilator span. Coordinates with an exact declared remainder come
// out exact; the rest are partial float sums at the given depth.
SumRange sum_range(const SeriesSpec& spec, Index depth = 1000000);

}  // namespace subsum
