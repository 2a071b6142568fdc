#pragma once

#include "subsum/catalog.hpp"
#include "subsum/enumerate.hpp"

namespace subsum {

// Finite injective rearrangement prefix with running sums (1-D).
struct RearrangementPlan {
  enum class Status { Converged, BudgetExhausted };
  std::vector<Index> order;
  std::vector<double> partial_sums;
  double target = 0;
  double final_error = 0;
  Status status = Status::Converged;
};

// Greedy crossing rearrangement: consume the next unused positive-term index
// while the running sum is at or below the target, else the next negative.
// Converged means |sum - target| < tol and the last consumed magnitude is
// below tol; an exhausted budget returns the best plan so far.
RearrangementPlan riemann_rearrange(const SeriesSpec& spec, const Scalar& target,
                                    const Scalar& tol, std::int64_t max_steps = 10'000'000);

// Witness that (x, y) of a (conditional x absolute) product-form series is
// approached by a selection: lock a finite prefix achieving y, then extend
// past the declared tail cutoff with a greedy sign-steered selection on the
// conditional coordinates. The tail extension pollutes y by less than the
// cutoff bound, so the sup-norm error stays below eps.
Selection density_witness(const SeriesSpec& spec2d, const Vec& target, const Scalar& eps,
                          const SearchLimits& limits = {});

struct OpenSetFamily {
  enum class Variant { CornerPair, FullPlane };
  SeriesSpec v_spec;  // 1-D, positive, interval-filling, nonincreasing, sum X
  SeriesSpec w_spec;  // 1-D, alternating, conditionally convergent, sum Y
  Variant variant = Variant::CornerPair;
  SeriesSpec assembled;
  Scalar X;
  double Y = 0;
};

OpenSetFamily make_open_set_family(const SeriesSpec& v, const SeriesSpec& w,
                                   OpenSetFamily::Variant variant);
// Families behind the assembled catalog entries ("open-corner", "open-plane").
OpenSetFamily open_set_family_for(const std::string& catalog_name);

// Constructive membership witness for the open achievement sets:
//   CornerPair: targets (a,b) with a in (0,2X), plus the two exact corners;
//   FullPlane:  targets with a in (-2X,2X), including the a = 0 line.
Selection open_set_witness(const OpenSetFamily& family, double a, double b, double eps,
                           const SearchLimits& limits = {});

struct Pi03Blocks {
  std::vector<Index> v;
  std::vector<std::vector<Index>> F;  // negative-term index blocks
  std::vector<std::vector<Index>> H;  // positive-term index blocks
  std::vector<Scalar> after_F;        // cumulative sums, |after_F[n]| < 2^-(n+1)
  std::vector<Scalar> after_H;        // |after_H[n] - 2^-v[n]| < 2^-(n+1)
};

// Deterministic greedy block construction: F_n consumes the smallest unused
// admissible negative indices until the cumulative sum enters (-2^-n, 2^-n),
// H_n the smallest positive ones until it enters the band around 2^-v(n).
// Equal v-prefixes yield identical blocks.
Pi03Blocks pi03_blocks(const SeriesSpec& host, const std::vector<Index>& v_prefix,
                       std::int64_t budget = 1'000'000);

struct LiouvilleFamily {
  GapSpec gap;
  SeriesSpec spec;
  Index max_block = 0;
};

LiouvilleFamily liouville_family(const GapSpec& gap);

struct LiouvilleBlockReport {
  Index m = 0;
  Scalar y_block_sum;   // sum of selected y-terms over block m
  BigInt excess;        // signed surplus of one parity over the other
  Scalar x_block_sum;   // = excess * 2^-g(m)
  Scalar bound;         // 2^m / 2^g(m)
};

struct LiouvilleReport {
  Index k0 = 0, K = 0;
  long long r = 1;
  std::vector<LiouvilleBlockReport> blocks;
  BigInt p0;
  long long q0_log2 = 0;  // q0 = 2^(g(k0-1))
  Scalar p0_over_q0;
  Scalar x_partial;       // selected x-sum through block K
  Scalar finite_bound;    // sum of per-block bounds over k0..K
  bool finite_cert_ok = false;
  bool gap_ok = false;        // family-level growth condition g(m+1) >= g(m)+m+2
  bool asymptotic_ok = false; // gap_ok and 1+k0-g(k0) <= -g(k0-1)*r
  Scalar asymptotic_bound;
};

// Exact verification of the block inequality chain: the bounded per-block
// oscillation of the selected y-terms caps the parity excess at 2^m, which
// caps the selected x-terms of block m at 2^m/2^g(m); summing the checked
// blocks certifies |x_partial - p0/q0| <= finite_bound with q0 = 2^g(k0-1).
// With the family growth condition the bound extends to all blocks and
// yields |x - p0/q0| <= 1/q0^r.
LiouvilleReport liouville_bound_check(const LiouvilleFamily& family, const Selection& sel,
                                      Index k0, long long r, Index max_checked_index = 200000,
                                      bool require_asymptotic = false);

// Exact points of the depth-N finite-support achievement set (selections of
// finite support are absolutely convergent, so these points are invariant
// under every rearrangement). Under-approximates the full absolutely
// convergent achievement set, which also contains patterned selections.
std::vector<Vec> a_abs_enumerate(const SeriesSpec& spec2d, Index N, const EnumLimits& = {});

struct SectionWitness {
  std::vector<Index> tau;  // injective consumption order (permutation prefix)
  Selection sel;
  double achieved_x = 0;
  double achieved_y = 0;
};

// Theorem-style section witness: fix a selection achieving y on the
// absolutely convergent coordinate whose conditional subseries is
// potentially conditionally convergent, then rearrange its conditional part
// onto x_target.
SectionWitness section_witness(const SeriesSpec& spec2d, const Scalar& x_target,
                               const Scalar& y_target, const Scalar& eps,
                               const SearchLimits& limits = {});
// Same construction for a caller-supplied selection.
SectionWitness section_witness_for_selection(const SeriesSpec& spec2d, const Scalar& x_target,
                                             const Selection& sel, const Scalar& eps,
                                             const SearchLimits& limits = {});

}  // namespace subsum
