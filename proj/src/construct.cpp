#include "subsum/construct.hpp"

#include <algorithm>
#include <cmath>

namespace subsum {

namespace {

double sup_err(const std::vector<double>& a, const std::vector<double>& b) {
  double w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

}  // namespace

RearrangementPlan riemann_rearrange(const SeriesSpec& spec, const Scalar& target,
                                    const Scalar& tol, std::int64_t max_steps) {
  if (spec.dimension != 1) fail(Errc::NotOneDimensional, "rearrangement needs a 1-D series");
  if (tol.sign() <= 0) fail(Errc::InvalidArgument, "tol must be positive");

  const double t = target.to_double();
  const double told = tol.to_double();

  RearrangementPlan plan;
  plan.target = t;

  double sum = 0, last_mag = std::numeric_limits<double>::infinity();
  Index pos_cursor = 1, neg_cursor = 1;
  std::int64_t steps = 0;

  auto next_of_sign = [&](int sign) -> std::optional<std::pair<Index, double>> {
    Index& cur = sign > 0 ? pos_cursor : neg_cursor;
    while (steps < max_steps) {
      ++steps;
      double v = spec.eval_f64(cur)[0];
      Index i = cur++;
      if ((sign > 0 && v > 0) || (sign < 0 && v < 0)) return std::make_pair(i, v);
    }
    return std::nullopt;
  };

  // cursors share the index space but not indices: positive and negative
  // terms are disjoint, so the consumed order is injective
  while (!(std::abs(sum - t) < told && last_mag < told)) {
    auto pick = next_of_sign(sum <= t ? +1 : -1);
    if (!pick) {
      plan.status = RearrangementPlan::Status::BudgetExhausted;
      plan.final_error = std::abs(sum - t);
      return plan;
    }
    sum += pick->second;
    last_mag = std::abs(pick->second);
    plan.order.push_back(pick->first);
    plan.partial_sums.push_back(sum);
  }
  plan.status = RearrangementPlan::Status::Converged;
  plan.final_error = std::abs(sum - t);
  return plan;
}

// ---- density witness ----------------------------------------------------

Selection density_witness(const SeriesSpec& spec2d, const Vec& target, const Scalar& eps,
                          const SearchLimits& limits) {
  if (eps.sign() <= 0) fail(Errc::InvalidArgument, "eps must be positive");
  const std::size_t m = static_cast<std::size_t>(spec2d.dimension);
  if (target.dim() != m) fail(Errc::InvalidArgument, "target dimension mismatch");

  // split coordinates by declared coordinate-functional tags
  std::vector<std::size_t> abs_coords, cond_coords;
  std::vector<const DirectionTag*> abs_tags;
  for (std::size_t c = 0; c < m; ++c) {
    const DirectionTag* found = nullptr;
    for (const auto& t : spec2d.direction_tags) {
      bool coord = t.functional.dim() == m && t.functional[c] == Scalar(1);
      for (std::size_t o = 0; coord && o < m; ++o)
        if (o != c && t.functional[o].sign() != 0) coord = false;
      if (coord) found = &t;
    }
    if (!found) fail(Errc::InvalidArgument, "series is not in adapted coordinate form");
    if (found->tag == ConvergenceTag::AbsolutelyConvergent && found->abs_tail_bound) {
      abs_coords.push_back(c);
      abs_tags.push_back(found);
    } else {
      cond_coords.push_back(c);
    }
  }
  if (abs_coords.empty() || cond_coords.empty())
    fail(Errc::InvalidArgument, "need both a conditional and an absolute part");

  auto abs_bound = [&](Index N) {
    Scalar b(0);
    for (auto* t : abs_tags) b += t->abs_tail_bound(N);
    return b;
  };

  const double epsd = eps.to_double();

  // 1. prefix achieving the absolute part within eps*7/16
  SeriesSpec y_spec = project_series(spec2d, abs_coords);
  Vec y_target(abs_coords.size());
  for (std::size_t i = 0; i < abs_coords.size(); ++i) y_target[i] = target[abs_coords[i]];
  auto sel_y = membership_search(y_spec, y_target, eps * Scalar::ratio(7, 16), limits);
  if (!sel_y) fail(Errc::YNotApproximable, "absolute part of the target is not approximable");

  // 2. cutoff with tail pollution below eps/16
  Index cutoff = sel_y->max_support().value_or(0) + 1;
  std::int64_t guard = 0;
  while (abs_bound(cutoff).to_double() >= epsd / 16) {
    cutoff += std::max<Index>(1, cutoff / 2);
    if (++guard > 512) fail(Errc::BudgetExhausted, "no usable tail cutoff found");
  }

  // 3. greedy sign-steered extension on each conditional coordinate; the
  //    conditional carriers must be disjoint (product-structured part)
  std::vector<Index> chosen = sel_y->support();
  std::int64_t budget = limits.budget;
  for (std::size_t c : cond_coords) {
    double res = target[c].to_double();
    {
      Index hi = sel_y->max_support().value_or(0);
      auto got = partial_sum_f64(spec2d, *sel_y, hi);
      res -= got[c];
    }
    Index cursor = cutoff + 1;
    double last_mag = std::numeric_limits<double>::infinity();
    while (!(std::abs(res) < epsd * 0.45 && last_mag < epsd * 0.45)) {
      if (budget-- <= 0) fail(Errc::BudgetExhausted, "conditional extension budget exhausted");
      auto t = spec2d.eval_f64(cursor);
      bool other_cond = false;
      for (std::size_t o : cond_coords)
        if (o != c && std::abs(t[o]) > 0) other_cond = true;
      if (other_cond && std::abs(t[c]) > 0)
        fail(Errc::InvalidArgument, "conditional part is not product-structured");
      double v = t[c];
      bool want_pos = res > 0;
      if ((want_pos && v > 0) || (!want_pos && v < 0)) {
        res -= v;
        last_mag = std::abs(v);
        chosen.push_back(cursor);
      }
      ++cursor;
    }
    cutoff = cursor;  // keep carriers disjoint across coordinates
  }

  Selection sel = Selection::finite(std::move(chosen));
  Index hi = sel.max_support().value_or(0);
  auto achieved = partial_sum_f64(spec2d, sel, hi);
  std::vector<double> want(m);
  for (std::size_t c = 0; c < m; ++c) want[c] = target[c].to_double();
  if (sup_err(achieved, want) >= epsd)
    fail(Errc::BudgetExhausted, "constructed witness misses the target");
  return sel;
}

// ---- open achievement sets ----------------------------------------------

OpenSetFamily make_open_set_family(const SeriesSpec& v, const SeriesSpec& w,
                                   OpenSetFamily::Variant variant) {
  if (v.dimension != 1 || w.dimension != 1)
    fail(Errc::InvalidArgument, "family parts must be 1-D");
  if (!v.exact_abs_tail || !v.all_coords_positive() || !v.monotone_nonincreasing_abs)
    fail(Errc::InvalidArgument, "v must be positive, nonincreasing, with an exact tail");
  // interval-filling: v_k <= sum_{j>k} v_j, checked exactly on a prefix
  for (Index k = 1; k <= 48; ++k) {
    if (v.term(k)[0] > v.exact_abs_tail(k))
      fail(Errc::InvalidArgument, "v is not interval-filling");
  }

  OpenSetFamily fam;
  fam.v_spec = v;
  fam.w_spec = w;
  fam.variant = variant;
  fam.X = v.exact_abs_tail(0);
  fam.Y = partial_sum_f64(w, Selection::all(), 1'000'000)[0];

  SeriesSpec a;
  a.dimension = 2;
  auto vt = v.term, wt = w.term;
  auto vf = v.term_f64, wf = w.term_f64;
  if (variant == OpenSetFamily::Variant::CornerPair) {
    a.name = v.name + "+" + w.name + "#corner-pair";
    a.term = [vt, wt](Index n) {
      Index k = (n + 1) / 2;
      return Vec{vt(k)[0], n % 2 == 1 ? wt(k)[0] : Scalar(0)};
    };
    a.term_f64 = [vf, wf](Index n) {
      Index k = (n + 1) / 2;
      return std::vector<double>{vf(k)[0], n % 2 == 1 ? wf(k)[0] : 0.0};
    };
    a.positive_coords = {true, false};
  } else {
    a.name = v.name + "+" + w.name + "#full-plane";
    a.term = [vt, wt](Index n) {
      Index k = (n + 3) / 4;
      bool neg = ((n - 1) / 2) % 2 == 1;
      Scalar x = vt(k)[0];
      if (neg) x = -x;
      return Vec{x, n % 2 == 1 ? wt((n + 1) / 2)[0] : Scalar(0)};
    };
    a.term_f64 = [vf, wf](Index n) {
      Index k = (n + 3) / 4;
      bool neg = ((n - 1) / 2) % 2 == 1;
      double x = vf(k)[0];
      if (neg) x = -x;
      return std::vector<double>{x, n % 2 == 1 ? wf((n + 1) / 2)[0] : 0.0};
    };
    a.positive_coords = {false, false};
  }
  a.has_null_subsequence_of_nonzero_terms = true;
  fam.assembled = std::move(a);
  return fam;
}

OpenSetFamily open_set_family_for(const std::string& catalog_name) {
  std::string n = catalog_name;
  if (n == "example-4.3") n = "open-corner";
  if (n == "example-4.4") n = "open-plane";
  if (n == "open-corner")
    return make_open_set_family(catalog_get("geometric-half").spec,
                                catalog_get("alt-harmonic").spec,
                                OpenSetFamily::Variant::CornerPair);
  if (n == "open-plane")
    return make_open_set_family(catalog_get("geometric-half").spec,
                                catalog_get("alt-harmonic").spec,
                                OpenSetFamily::Variant::FullPlane);
  fail(Errc::UnknownEntry, "no open-set family named '" + catalog_name + "'");
}

namespace {

struct VData {
  const SeriesSpec* v;
  double vk(Index k) const { return v->eval_f64(k)[0]; }
  double tail(Index k) const { return v->exact_abs_tail(k).to_double(); }
};

// greedy subsum representation of z over the positive nonincreasing v,
// stopping when the residual drops below stop
std::vector<Index> greedy_represent(const VData& vd, double z, double stop, Index max_k) {
  std::vector<Index> picks;
  double g = 0;
  for (Index k = 1; k <= max_k && z - g >= stop; ++k) {
    if (g + vd.vk(k) <= z) {
      g += vd.vk(k);
      picks.push_back(k);
    }
  }
  return picks;
}

}  // namespace

Selection open_set_witness(const OpenSetFamily& family, double a, double b, double eps,
                           const SearchLimits& limits) {
  if (eps <= 0) fail(Errc::InvalidArgument, "eps must be positive");
  const double X = family.X.to_double();
  const double corner_tol = 1e-9;
  VData vd{&family.v_spec};
  const SeriesSpec& w = family.w_spec;

  const bool corner_variant = family.variant == OpenSetFamily::Variant::CornerPair;
  if (corner_variant) {
    if (std::abs(a) <= corner_tol && std::abs(b) <= corner_tol) return Selection::empty();
    if (std::abs(a - 2 * X) <= corner_tol && std::abs(b - family.Y) <= 1e-5)
      return Selection::all();
    if (a <= 0 || a >= 2 * X)
      fail(Errc::TargetOnBoundary, "first coordinate outside the open range");
  } else {
    if (std::abs(a) >= 2 * X)
      fail(Errc::TargetOnBoundary, "first coordinate outside the open range");
  }

  std::int64_t budget = limits.budget;

  // greedy selection on w driving sum_w to b; pick(j) marks w-index j chosen
  auto w_greedy = [&](double start, Index from, const std::function<void(Index)>& pick) {
    double sum = start;
    double last = std::numeric_limits<double>::infinity();
    Index cursor = from;
    while (!(std::abs(sum - b) < eps * 0.45 && last < eps * 0.45)) {
      if (budget-- <= 0) fail(Errc::BudgetExhausted, "w-greedy budget exhausted");
      double wv = w.eval_f64(cursor)[0];
      bool need_pos = sum <= b;
      if ((need_pos && wv > 0) || (!need_pos && wv < 0)) {
        sum += wv;
        pick(cursor);
        last = std::abs(wv);
      }
      ++cursor;
    }
    return sum;
  };

  if (corner_variant) {
    // interval lock around a
    const double margin = X / 1024.0;
    double lo = std::max(0.0, a - X) + margin;
    double hi = std::min(X, a) - margin;
    if (hi - lo <= 0) fail(Errc::TargetOnBoundary, "target too close to the boundary");
    double mid = (lo + hi) / 2;

    Index ka = 1;
    while (vd.tail(ka) > (hi - lo) / 6) ++ka;

    // prefix on v-indices 1..ka held inside the lock for every continuation
    std::vector<bool> prefix(static_cast<std::size_t>(ka) + 1, false);
    double p = 0;
    for (Index k = 1; k <= ka; ++k) {
      if (p + vd.vk(k) <= mid) {
        p += vd.vk(k);
        prefix[static_cast<std::size_t>(k)] = true;
      }
    }

    double start = 0;
    for (Index k = 1; k <= ka; ++k)
      if (prefix[static_cast<std::size_t>(k)]) start += w.eval_f64(k)[0];

    double t = p;
    std::vector<Index> odd_slots;
    for (Index k = 1; k <= ka; ++k)
      if (prefix[static_cast<std::size_t>(k)]) odd_slots.push_back(2 * k - 1);
    w_greedy(start, ka + 1, [&](Index k) {
      odd_slots.push_back(2 * k - 1);
      t += vd.vk(k);
    });

    double z = a - t;
    if (z <= 0 || z >= X) fail(Errc::BudgetExhausted, "lock failed to keep the split feasible");
    std::vector<Index> even_slots;
    for (Index k : greedy_represent(vd, z, eps * 0.45, 4096)) even_slots.push_back(2 * k);

    std::vector<Index> support = odd_slots;
    support.insert(support.end(), even_slots.begin(), even_slots.end());
    Selection sel = Selection::finite(std::move(support));
    auto achieved = partial_sum_f64(family.assembled, sel, sel.max_support().value_or(0));
    if (sup_err(achieved, {a, b}) >= eps)
      fail(Errc::BudgetExhausted, "constructed witness misses the target");
    return sel;
  }

  // full-plane variant; slots of v-pair k:
  //   4k-3: (+v_k, w_{2k-1})   4k-2: (+v_k, 0)
  //   4k-1: (-v_k, w_{2k})     4k:   (-v_k, 0)
  auto w_slot = [](Index j) { return 2 * j - 1; };  // w_j lives here
  auto silent_slot = [](Index k, bool positive) { return positive ? 4 * k - 2 : 4 * k; };

  if (std::abs(a) <= corner_tol) {
    // zero line: every chosen w_j is paired with the opposite-sign silent
    // slot of the same v-pair, cancelling the first coordinate exactly
    std::vector<Index> support;
    w_greedy(0.0, 1, [&](Index j) {
      Index k = (j + 1) / 2;
      bool j_on_positive_rail = j % 2 == 1;
      support.push_back(w_slot(j));
      support.push_back(silent_slot(k, !j_on_positive_rail));
    });
    Selection sel = Selection::finite(std::move(support));
    auto achieved = partial_sum_f64(family.assembled, sel, sel.max_support().value_or(0));
    if (sup_err(achieved, {a, b}) >= eps)
      fail(Errc::BudgetExhausted, "constructed witness misses the target");
    return sel;
  }

  const int sgn = a > 0 ? +1 : -1;
  const double am = std::abs(a);
  const double margin = X / 1024.0;
  double lo = std::max(0.0, am - X) + margin;
  double hi = std::min(X, am) - margin;
  if (hi - lo <= 0) fail(Errc::TargetOnBoundary, "target too close to the boundary");
  double mid = (lo + hi) / 2;

  Index ka = 1;
  while (vd.tail(ka) > (hi - lo) / 6) ++ka;

  // prefix lock on the matching-sign w-carrying slots of pairs 1..ka;
  // pair k's matching odd slot carries w_{2k-1} (positive rail) or w_{2k}
  std::vector<Index> support;
  double p = 0, start = 0;
  for (Index k = 1; k <= ka; ++k) {
    if (p + vd.vk(k) <= mid) {
      p += vd.vk(k);
      Index j = sgn > 0 ? 2 * k - 1 : 2 * k;
      support.push_back(w_slot(j));
      start += w.eval_f64(j)[0];
    }
  }

  // w-greedy over w-indices beyond the lock; drift of the first coordinate
  // stays within the tail of v beyond ka
  double drift = 0;
  w_greedy(start, 2 * ka + 1, [&](Index j) {
    Index k = (j + 1) / 2;
    support.push_back(w_slot(j));
    drift += (j % 2 == 1 ? +1.0 : -1.0) * vd.vk(k);
  });

  double t = sgn * p + drift;
  double z = a - t;  // same sign as a by the lock
  if (z * sgn <= 0 || z * sgn >= X)
    fail(Errc::BudgetExhausted, "lock failed to keep the split feasible");
  for (Index k : greedy_represent(vd, std::abs(z), eps * 0.45, 4096))
    support.push_back(silent_slot(k, sgn > 0));

  Selection sel = Selection::finite(std::move(support));
  auto achieved = partial_sum_f64(family.assembled, sel, sel.max_support().value_or(0));
  if (sup_err(achieved, {a, b}) >= eps)
    fail(Errc::BudgetExhausted, "constructed witness misses the target");
  return sel;
}

// ---- block constructions ------------------------------------------------

Pi03Blocks pi03_blocks(const SeriesSpec& host, const std::vector<Index>& v_prefix,
                       std::int64_t budget) {
  if (host.dimension != 1) fail(Errc::NotOneDimensional, "host must be 1-D");
  if (v_prefix.empty()) fail(Errc::InvalidArgument, "empty v prefix");
  for (Index m : v_prefix)
    if (m < 0) fail(Errc::InvalidArgument, "v entries must be naturals");

  Pi03Blocks out;
  out.v = v_prefix;

  BigRational cum = 0;
  Index frontier = 0;

  auto probe = [&](int sign, const BigRational& lo, const BigRational& hi)
      -> std::optional<std::pair<Index, BigRational>> {
    // smallest unused index of the given sign whose term keeps cum in (lo, hi)
    for (Index i = frontier + 1;; ++i) {
      if (budget-- <= 0) return std::nullopt;
      BigRational x = host.term(i)[0].as_rational();
      if ((sign < 0 && x >= 0) || (sign > 0 && x <= 0)) continue;
      BigRational next = cum + x;
      if (next > lo && next < hi) return std::make_pair(i, next);
      // too large a step; smaller terms appear later
    }
  };

  for (std::size_t n1 = 1; n1 <= v_prefix.size(); ++n1) {
    const Index n = static_cast<Index>(n1);
    BigRational band = Scalar::pow_int(BigRational(1, 2), n).rational();

    std::vector<Index> F;
    while (cum >= band) {
      // descend; each step stays above -band, the loop exit gives (ii)
      auto got = probe(-1, -band, cum);
      if (!got) fail(Errc::BudgetExhausted, "block construction budget exhausted");
      F.push_back(got->first);
      frontier = got->first;
      cum = got->second;
    }
    out.F.push_back(std::move(F));
    out.after_F.push_back(Scalar(cum));

    BigRational target = Scalar::pow_int(BigRational(1, 2), v_prefix[n1 - 1]).rational();
    BigRational q = std::min(band, target) / 2;
    std::vector<Index> H;
    while (cum <= target - q) {
      // ascend; each step stays below target + q, the loop exit gives (iii)
      auto got = probe(+1, cum, target + q);
      if (!got) fail(Errc::BudgetExhausted, "block construction budget exhausted");
      H.push_back(got->first);
      frontier = got->first;
      cum = got->second;
    }
    out.H.push_back(std::move(H));
    out.after_H.push_back(Scalar(cum));
  }
  return out;
}

LiouvilleFamily liouville_family(const GapSpec& gap) {
  CatalogEntry e = catalog_get("liouville(" + gap.str() + ")");
  LiouvilleFamily fam;
  fam.gap = gap;
  fam.spec = e.spec;
  fam.max_block = e.spec.blocks ? e.spec.blocks->max_block : 0;
  return fam;
}

LiouvilleReport liouville_bound_check(const LiouvilleFamily& family, const Selection& sel,
                                      Index k0, long long r, Index max_checked_index,
                                      bool require_asymptotic) {
  if (k0 < 1) fail(Errc::InvalidArgument, "k0 must be >= 1");
  if (r < 1) fail(Errc::InvalidArgument, "r must be >= 1");
  if (!family.spec.blocks) fail(Errc::InvalidArgument, "family lacks block structure");
  const BlockStructure& bs = *family.spec.blocks;

  Index K = 0;
  for (Index k = 1; k <= family.max_block; ++k) {
    if (bs.block_end(k) <= max_checked_index) K = k;
  }
  if (K < k0) fail(Errc::LimitExceeded, "no complete block beyond k0 is checkable");

  LiouvilleReport rep;
  rep.k0 = k0;
  rep.K = K;
  rep.r = r;
  rep.gap_ok = family.gap.growth_certified();
  if (require_asymptotic && !rep.gap_ok)
    fail(Errc::GapTooSmall, "gap family does not satisfy g(m+1) >= g(m)+m+2");

  const GapSpec& g = family.gap;
  const Index prefix_end = bs.block_end(k0 - 1);

  // exact prefix before block k0: a dyadic with denominator dividing 2^g(k0-1)
  BigRational prefix = 0;
  for (Index i = 1; i <= prefix_end; ++i) {
    if (sel.contains(i)) prefix += family.spec.term(i)[0].rational();
  }
  rep.q0_log2 = g.eval(k0 - 1);
  BigRational scaled = prefix * BigRational(Scalar::pow2(rep.q0_log2));
  if (denominator(scaled) != 1)
    fail(Errc::InvalidArgument, "prefix is not a multiple of 2^-g(k0-1)");
  rep.p0 = numerator(scaled);
  rep.p0_over_q0 = Scalar(prefix);

  BigRational x_partial = prefix;
  BigRational finite_bound = 0;
  for (Index m = k0; m <= K; ++m) {
    LiouvilleBlockReport br;
    br.m = m;
    BigRational ysum = 0;
    BigInt pos = 0, neg = 0;
    for (Index i = bs.block_end(m - 1) + 1; i <= bs.block_end(m); ++i) {
      if (!sel.contains(i)) continue;
      if (i % 2 == 0) {
        ++pos;
      } else {
        ++neg;
      }
      ysum += family.spec.term(i)[1].rational();
    }
    br.excess = pos - neg;
    br.y_block_sum = Scalar(ysum);
    if (abs(ysum) > 1)
      fail(Errc::HypothesisViolated,
           "block " + std::to_string(m) + " oscillates beyond the unit bound");
    BigRational xstep = Scalar::pow_int(BigRational(1, 2), g.eval(m)).rational();
    BigRational xm = BigRational(br.excess) * xstep;
    br.x_block_sum = Scalar(xm);
    BigRational bm = BigRational(Scalar::pow2(m)) * xstep;
    br.bound = Scalar(bm);
    if (abs(xm) > bm)
      fail(Errc::HypothesisViolated, "block x-sum exceeds its certified bound");
    x_partial += xm;
    finite_bound += bm;
    rep.blocks.push_back(std::move(br));
  }
  rep.x_partial = Scalar(x_partial);
  rep.finite_bound = Scalar(finite_bound);

  // independent re-computation of the selected x-sum through block K
  BigRational direct = 0;
  for (Index i = 1; i <= bs.block_end(K); ++i) {
    if (sel.contains(i)) direct += family.spec.term(i)[0].rational();
  }
  rep.finite_cert_ok = (direct == x_partial) && (abs(x_partial - prefix) <= finite_bound);

  if (rep.gap_ok) {
    long long gk = g.eval(k0);
    rep.asymptotic_bound = Scalar::pow_int(BigRational(1, 2), gk - k0 - 1);
    rep.asymptotic_ok = (1 + k0 - gk) <= -(g.eval(k0 - 1) * r);
  }
  return rep;
}

std::vector<Vec> a_abs_enumerate(const SeriesSpec& spec2d, Index N, const EnumLimits& limits) {
  auto groups = enumerate_exact(spec2d, N, limits);
  std::vector<Vec> pts;
  pts.reserve(groups.size());
  for (auto& gr : groups) pts.push_back(std::move(gr.value));
  return pts;
}

// ---- section witnesses --------------------------------------------------

namespace {

struct SplitCoords {
  std::size_t abs_c = 0, cond_c = 0;
  const DirectionTag* abs_tag = nullptr;
};

SplitCoords section_split(const SeriesSpec& spec) {
  if (spec.dimension != 2) fail(Errc::InvalidArgument, "section witnesses need a 2-D series");
  SplitCoords s;
  bool have_abs = false, have_cond = false;
  for (const auto& t : spec.direction_tags) {
    for (std::size_t c = 0; c < 2; ++c) {
      bool coord = t.functional[c] == Scalar(1) && t.functional[1 - c].sign() == 0;
      if (!coord) continue;
      if (t.tag == ConvergenceTag::AbsolutelyConvergent && t.abs_tail_bound) {
        s.abs_c = c;
        s.abs_tag = &t;
        have_abs = true;
      } else if (t.tag == ConvergenceTag::ConditionallyConvergent) {
        s.cond_c = c;
        have_cond = true;
      }
    }
  }
  if (!have_abs || !have_cond)
    fail(Errc::InvalidArgument, "need one absolute and one conditional coordinate");
  return s;
}

}  // namespace

SectionWitness section_witness_for_selection(const SeriesSpec& spec2d, const Scalar& x_target,
                                             const Selection& sel, const Scalar& eps,
                                             const SearchLimits& limits) {
  if (eps.sign() <= 0) fail(Errc::InvalidArgument, "eps must be positive");
  SplitCoords sc = section_split(spec2d);
  const double x_t = x_target.to_double();
  const double epsd = eps.to_double();

  if (sel.is_finite()) {
    // finite sums are rigid: only the exact value is reachable
    Index hi = sel.max_support().value_or(0);
    Vec got = partial_sum(spec2d, sel, hi);
    if ((got[sc.cond_c] - x_target).abs().to_double() >= epsd)
      fail(Errc::SelectionNotPotentiallyConditional,
           "finite selection has a fixed conditional sum");
    SectionWitness out;
    out.sel = sel;
    for (Index i : sel.indices_upto(hi)) out.tau.push_back(i);
    out.achieved_x = got[sc.cond_c].to_double();
    out.achieved_y = got[sc.abs_c].to_double();
    return out;
  }

  // both signs of the conditional coordinate must recur within the selection
  Index probe_from = 1;
  for (const auto& p : sel.patterns()) probe_from = std::max(probe_from, p.start);
  bool pos = false, neg = false;
  for (Index i = probe_from; i < probe_from + 8192; ++i) {
    if (!sel.contains(i)) continue;
    double v = spec2d.eval_f64(i)[sc.cond_c];
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  if (!pos || !neg)
    fail(Errc::SelectionNotPotentiallyConditional,
         "selected conditional subseries cannot be rearranged");

  SectionWitness out;
  out.sel = sel;
  double x_run = 0, y_run = 0;
  for (Index i : sel.support()) {
    auto t = spec2d.eval_f64(i);
    x_run += t[sc.cond_c];
    y_run += t[sc.abs_c];
    out.tau.push_back(i);
  }

  // greedy consumption of the patterned tail onto the target
  double last = std::numeric_limits<double>::infinity();
  Index pos_cur = probe_from, neg_cur = probe_from;
  std::int64_t budget = limits.budget;
  auto next_sel_of_sign = [&](int sign) -> std::optional<Index> {
    Index& cur = sign > 0 ? pos_cur : neg_cur;
    while (budget-- > 0) {
      Index i = cur++;
      if (!sel.contains(i)) continue;
      double v = spec2d.eval_f64(i)[sc.cond_c];
      if ((sign > 0 && v > 0) || (sign < 0 && v < 0)) return i;
    }
    return std::nullopt;
  };
  while (!(std::abs(x_run - x_t) < epsd / 2 && last < epsd / 2)) {
    auto i = next_sel_of_sign(x_run <= x_t ? +1 : -1);
    if (!i) fail(Errc::BudgetExhausted, "section rearrangement budget exhausted");
    auto t = spec2d.eval_f64(*i);
    x_run += t[sc.cond_c];
    y_run += t[sc.abs_c];
    last = std::abs(t[sc.cond_c]);
    out.tau.push_back(*i);
  }
  out.achieved_x = x_run;
  out.achieved_y = y_run;
  return out;
}

SectionWitness section_witness(const SeriesSpec& spec2d, const Scalar& x_target,
                               const Scalar& y_target, const Scalar& eps,
                               const SearchLimits& limits) {
  if (eps.sign() <= 0) fail(Errc::InvalidArgument, "eps must be positive");
  SplitCoords sc = section_split(spec2d);

  SeriesSpec y_spec = project_series(spec2d, {sc.abs_c});
  auto sel_y = membership_search(y_spec, Vec{y_target}, eps / Scalar(4), limits);
  if (!sel_y) fail(Errc::YNotApproximable, "absolute coordinate target not approximable");

  Index start = sel_y->max_support().value_or(0) + 1;
  std::int64_t guard = 0;
  while (sc.abs_tag->abs_tail_bound(start).to_double() >= eps.to_double() / 4) {
    start += std::max<Index>(1, start / 2);
    if (++guard > 512) fail(Errc::BudgetExhausted, "no usable tail cutoff");
  }
  Selection sel = Selection::patterned(sel_y->support(), {TailPattern{start, 1, 0}});
  return section_witness_for_selection(spec2d, x_target, sel, eps, limits);
}

}  // namespace subsum
