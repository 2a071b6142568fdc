#include "subsum/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace subsum {

const char* kakeya_label_name(KakeyaLabel l) {
  switch (l) {
    case KakeyaLabel::Finite: return "Finite";
    case KakeyaLabel::CantorLike: return "CantorLike";
    case KakeyaLabel::FiniteUnionOfIntervals: return "FiniteUnionOfIntervals";
    case KakeyaLabel::MixedUnknown: return "Mixed/Unknown";
  }
  return "?";
}

const char* cardinality_label_name(CardinalityLabel l) {
  switch (l) {
    case CardinalityLabel::Finite: return "Finite";
    case CardinalityLabel::CountablyInfinite: return "CountablyInfinite";
    case CardinalityLabel::ContainsPerfectSet: return "ContainsPerfectSet";
  }
  return "?";
}

const char* selection_class_name(SelectionClass c) {
  switch (c) {
    case SelectionClass::Absolute: return "Absolute";
    case SelectionClass::Conditional: return "Conditional";
    case SelectionClass::PotentiallyConditional: return "PotentiallyConditional";
    case SelectionClass::NotPotentiallyConditional: return "NotPotentiallyConditional";
  }
  return "?";
}

KakeyaClass kakeya_classify(const SeriesSpec& spec) {
  if (spec.dimension != 1) fail(Errc::NotOneDimensional, "classification needs a 1-D series");
  KakeyaClass out;
  if (spec.nonzero_count) {
    out.label = KakeyaLabel::Finite;
    return out;
  }
  if (!spec.exact_abs_tail || !spec.kakeya_regime)
    fail(Errc::UndecidableComparison,
         "series must declare an exact |.|-tail formula and an eventual-regime index");

  const KakeyaRegime& reg = *spec.kakeya_regime;
  out.eventual_index = reg.eventual_index;
  out.beyond = reg.beyond;
  for (Index n = 1; n <= reg.eventual_index; ++n) {
    Scalar a = spec.term(n)[0].abs();
    Scalar t = spec.exact_abs_tail(n);
    out.witness.push_back({n, a, t, compare(a, t)});
  }
  switch (reg.beyond) {
    case KakeyaBeyond::AlwaysGreater:
      out.label = KakeyaLabel::CantorLike;
      break;
    case KakeyaBeyond::AlwaysAtMost:
      out.label = spec.monotone_nonincreasing_abs ? KakeyaLabel::FiniteUnionOfIntervals
                                                  : KakeyaLabel::MixedUnknown;
      break;
    case KakeyaBeyond::Mixed:
      out.label = KakeyaLabel::MixedUnknown;
      break;
  }
  return out;
}

CardinalityLabel cardinality_class(const SeriesSpec& spec) {
  if (spec.nonzero_count) return CardinalityLabel::Finite;
  if (spec.inf_nonzero_norm && spec.inf_nonzero_norm->sign() > 0)
    return CardinalityLabel::CountablyInfinite;
  if (!spec.has_null_subsequence_of_nonzero_terms)
    fail(Errc::InsufficientMetadata,
         "need inf_nonzero_norm or a declared null subsequence of nonzero terms");
  return CardinalityLabel::ContainsPerfectSet;
}

namespace {

bool patterns_pairwise_disjoint(const std::vector<TailPattern>& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      Index g = std::gcd(ps[i].modulus, ps[j].modulus);
      Index d = (ps[i].residue % ps[i].modulus) - (ps[j].residue % ps[j].modulus);
      if (((d % g) + g) % g == 0) return false;  // common solutions exist
    }
  }
  return true;
}

// densities of odd and even members of an arithmetic progression
std::pair<double, double> parity_densities(const TailPattern& p) {
  if (p.modulus % 2 == 0) {
    bool odd = ((p.residue % 2) + 2) % 2 == 1;
    double d = 1.0 / static_cast<double>(p.modulus);
    return odd ? std::make_pair(d, 0.0) : std::make_pair(0.0, d);
  }
  double d = 1.0 / static_cast<double>(2 * p.modulus);
  return {d, d};
}

}  // namespace

SelectionClass selection_convergence_class(const SeriesSpec& spec, const Selection& sel) {
  if (spec.dimension != 1) fail(Errc::NotOneDimensional, "selection classes need a 1-D series");
  if (sel.is_finite()) return SelectionClass::Absolute;
  if (spec.tail_norm_bound) return SelectionClass::Absolute;  // subseries of an l1 series

  // Remaining supported shape: alternating sign with |x_n| ~ c/n (positive on
  // odd indices), the harmonic regime where arithmetic-progression densities
  // decide divergence of the signed parts.
  if (!spec.monotone_nonincreasing_abs)
    fail(Errc::UnsupportedPattern, "series lacks declared monotone magnitudes");
  bool harmonic_like = true;
  for (Index n = 1; n <= 64; ++n) {
    double t = spec.eval_f64(n)[0];
    if ((n % 2 == 1 && t <= 0) || (n % 2 == 0 && t >= 0)) harmonic_like = false;
    double mag = std::abs(t) * static_cast<double>(n);
    if (mag < 0.1 || mag > 10.0) harmonic_like = false;
  }
  if (!harmonic_like)
    fail(Errc::UnsupportedPattern, "selection classes support alternating harmonic-type series");
  if (!patterns_pairwise_disjoint(sel.patterns()))
    fail(Errc::UnsupportedPattern, "overlapping tail patterns");

  double odd = 0, even = 0;
  for (const auto& p : sel.patterns()) {
    auto [o, e] = parity_densities(p);
    odd += o;
    even += e;
  }
  if (odd > 0 && even > 0) {
    return std::abs(odd - even) < 1e-15 ? SelectionClass::Conditional
                                        : SelectionClass::PotentiallyConditional;
  }
  return SelectionClass::NotPotentiallyConditional;
}

namespace {

struct FitResult {
  double slope = 0;
  double corr = 0;
};

FitResult fit_against_log(const std::vector<double>& lnN, const std::vector<double>& S) {
  const std::size_t n = lnN.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lnN[i];
    my += S[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lnN[i] - mx) * (lnN[i] - mx);
    syy += (S[i] - my) * (S[i] - my);
    sxy += (lnN[i] - mx) * (S[i] - my);
  }
  FitResult r;
  if (sxx > 0) r.slope = sxy / sxx;
  if (sxx > 0 && syy > 1e-30) r.corr = sxy / std::sqrt(sxx * syy);
  return r;
}

ConvergenceFunctionals gamma_declared(const SeriesSpec& spec) {
  if (spec.direction_tags.empty()) fail(Errc::NoDeclaredTags, "no direction tags declared");
  std::vector<Vec> all;
  std::vector<Vec> absf;
  for (const auto& t : spec.direction_tags) {
    all.push_back(t.functional);
    if (t.tag == ConvergenceTag::AbsolutelyConvergent) absf.push_back(t.functional);
  }
  if (rank(all, spec.dimension) != spec.dimension)
    fail(Errc::NoDeclaredTags, "declared functionals do not span the space");
  ConvergenceFunctionals out;
  out.mode = ConvergenceFunctionals::Mode::Declared;
  out.gamma_basis = orthogonalize(absf);
  out.gamma_perp_basis = orthogonal_complement(out.gamma_basis, spec.dimension);
  return out;
}

ConvergenceFunctionals gamma_heuristic(const SeriesSpec& spec, const GammaOptions& opt) {
  const std::size_t m = static_cast<std::size_t>(spec.dimension);
  std::vector<std::vector<double>> dirs;
  if (m == 1) {
    dirs.push_back({1.0});
  } else if (m == 2) {
    for (int i = 0; i < opt.grid; ++i) {
      double th = M_PI * static_cast<double>(i) / opt.grid;
      dirs.push_back({std::cos(th), std::sin(th)});
    }
  } else {
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<double> e(m, 0.0);
      e[c] = 1.0;
      dirs.push_back(std::move(e));
    }
  }

  // log-spaced checkpoints for the growth fit
  std::vector<Index> chk;
  for (int i = 0; i <= 7; ++i) {
    double t = static_cast<double>(i) / 7.0;
    chk.push_back(static_cast<Index>(std::llround(
        std::pow(10.0, std::log10(double(opt.fit_min)) * (1 - t) +
                           std::log10(double(opt.fit_max)) * t))));
  }

  std::vector<double> acc(dirs.size(), 0.0);
  std::vector<std::vector<double>> at(dirs.size());
  std::size_t next_chk = 0;
  for (Index n = 1; n <= opt.fit_max; ++n) {
    auto t = spec.eval_f64(n);
    for (std::size_t d = 0; d < dirs.size(); ++d) {
      double v = 0;
      for (std::size_t c = 0; c < m; ++c) v += dirs[d][c] * t[c];
      acc[d] += std::abs(v);
    }
    while (next_chk < chk.size() && n == chk[next_chk]) {
      for (std::size_t d = 0; d < dirs.size(); ++d) at[d].push_back(acc[d]);
      ++next_chk;
    }
  }
  std::vector<double> lnN;
  for (Index n : chk) lnN.push_back(std::log(double(n)));

  std::vector<bool> bounded(dirs.size());
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    FitResult f = fit_against_log(lnN, at[d]);
    bounded[d] = !(f.slope > opt.slope_threshold && f.corr >= opt.corr_threshold);
  }

  ConvergenceFunctionals out;
  out.mode = ConvergenceFunctionals::Mode::Heuristic;
  auto fvec = [&](const std::vector<double>& d) {
    Vec v(m);
    for (std::size_t c = 0; c < m; ++c) v[c] = Scalar(d[c]);
    return v;
  };
  if (m == 1) {
    if (bounded[0]) {
      out.gamma_basis.push_back(fvec(dirs[0]));
    } else {
      out.gamma_perp_basis.push_back(fvec(dirs[0]));
    }
    return out;
  }
  if (m == 2) {
    std::size_t cnt = static_cast<std::size_t>(std::count(bounded.begin(), bounded.end(), true));
    if (cnt == bounded.size()) {
      out.gamma_basis = {fvec({1, 0}), fvec({0, 1})};
      return out;
    }
    if (cnt == 0) {
      out.gamma_perp_basis = {fvec({1, 0}), fvec({0, 1})};
      return out;
    }
    // one antipodal arc of bounded directions: take the arc midpoint
    // (circular over theta in [0, pi))
    std::size_t n = bounded.size();
    std::size_t start = 0;
    while (start < n && bounded[start]) ++start;  // exists: cnt < n
    std::size_t best_len = 0, best_start = 0, run = 0, run_start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (bounded[(start + i) % n]) {
        if (run == 0) run_start = start + i;
        if (++run > best_len) {
          best_len = run;
          best_start = run_start;
        }
      } else {
        run = 0;
      }
    }
    double mid = M_PI * (static_cast<double>(best_start % n) + (best_len - 1) / 2.0) /
                 static_cast<double>(n);
    out.gamma_basis = {fvec({std::cos(mid), std::sin(mid)})};
    out.gamma_perp_basis = {fvec({-std::sin(mid), std::cos(mid)})};
    return out;
  }
  // m > 2: coordinate directions only
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    if (bounded[d]) {
      out.gamma_basis.push_back(fvec(dirs[d]));
    } else {
      out.gamma_perp_basis.push_back(fvec(dirs[d]));
    }
  }
  return out;
}

}  // namespace

ConvergenceFunctionals gamma_compute(const SeriesSpec& spec, ConvergenceFunctionals::Mode mode,
                                     const GammaOptions& opt) {
  if (mode == ConvergenceFunctionals::Mode::Declared) return gamma_declared(spec);
  return gamma_heuristic(spec, opt);
}

SteinitzDecomposition steinitz_decompose(const SeriesSpec& spec,
                                         const ConvergenceFunctionals* gamma) {
  ConvergenceFunctionals g;
  if (gamma) {
    if (gamma->mode == ConvergenceFunctionals::Mode::Heuristic)
      fail(Errc::HeuristicGammaRejected, "decomposition requires declared-mode functionals");
    g = *gamma;
  } else {
    g = gamma_compute(spec, ConvergenceFunctionals::Mode::Declared);
  }

  const std::size_t m = static_cast<std::size_t>(spec.dimension);
  SteinitzDecomposition out;
  out.k = g.perp_dim();

  std::vector<std::vector<Scalar>> combo;
  std::vector<Vec> gamma_rows = orthogonalize(g.gamma_basis, &combo);

  out.basis_change = g.gamma_perp_basis;
  for (const auto& r : gamma_rows) out.basis_change.push_back(r);
  out.exact = true;
  for (const auto& row : out.basis_change)
    for (std::size_t c = 0; c < row.dim(); ++c)
      if (!row[c].is_exact()) out.exact = false;

  auto rows = std::make_shared<std::vector<Vec>>(out.basis_change);
  const std::size_t k = static_cast<std::size_t>(out.k);
  auto base_term = spec.term;

  out.conditional_part.dimension = static_cast<int>(k);
  out.conditional_part.name = spec.name + "#conditional";
  out.conditional_part.term = [rows, base_term, k](Index n) {
    Vec x = base_term(n);
    Vec r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = dot((*rows)[i], x);
    return r;
  };
  for (std::size_t i = 0; i < k; ++i) {
    Vec f(k);
    f[i] = Scalar(1);
    DirectionTag t;
    t.functional = std::move(f);
    t.tag = ConvergenceTag::ConditionallyConvergent;
    out.conditional_part.direction_tags.push_back(std::move(t));
  }
  out.conditional_part.has_null_subsequence_of_nonzero_terms =
      spec.has_null_subsequence_of_nonzero_terms;

  out.absolute_part.dimension = static_cast<int>(m - k);
  out.absolute_part.name = spec.name + "#absolute";
  out.absolute_part.term = [rows, base_term, k, m](Index n) {
    Vec x = base_term(n);
    Vec r(m - k);
    for (std::size_t i = k; i < m; ++i) r[i - k] = dot((*rows)[i], x);
    return r;
  };
  out.absolute_part.has_null_subsequence_of_nonzero_terms =
      spec.has_null_subsequence_of_nonzero_terms;

  // tail bound for the absolute part: each adapted row is a combination of
  // declared absolutely convergent functionals, so its |.|-tail is bounded
  // by the |coefficient|-weighted declared bounds
  std::vector<std::function<Scalar(Index)>> decl_bounds;
  std::vector<Vec> decl_f;
  for (const auto& t : spec.direction_tags) {
    if (t.tag == ConvergenceTag::AbsolutelyConvergent && t.abs_tail_bound) {
      decl_bounds.push_back(t.abs_tail_bound);
      decl_f.push_back(t.functional);
    }
  }
  if (m - k > 0 && decl_bounds.size() == g.gamma_basis.size() && !decl_bounds.empty() &&
      out.exact) {
    auto combos = std::make_shared<std::vector<std::vector<Scalar>>>(combo);
    auto bounds = std::make_shared<std::vector<std::function<Scalar(Index)>>>(decl_bounds);
    out.absolute_part.tail_norm_bound = [combos, bounds](Index N) {
      Scalar worst(0);
      for (const auto& row : *combos) {
        Scalar b(0);
        for (std::size_t i = 0; i < row.size() && i < bounds->size(); ++i)
          b += row[i].abs() * (*bounds)[i](N);
        worst = max(worst, b);
      }
      return worst;
    };
    out.absolute_part.selection_tail_bound = out.absolute_part.tail_norm_bound;
  }
  return out;
}

SumRange sum_range(const SeriesSpec& spec, Index depth) {
  ConvergenceFunctionals g = gamma_compute(spec, ConvergenceFunctionals::Mode::Declared);
  const std::size_t m = static_cast<std::size_t>(spec.dimension);

  // exact base coordinates where a coordinate functional has a declared
  // exact remainder
  std::vector<const DirectionTag*> exact_coord(m, nullptr);
  for (const auto& t : spec.direction_tags) {
    if (t.tag != ConvergenceTag::AbsolutelyConvergent || !t.exact_remainder) continue;
    int nz = -1;
    bool coordinate = true;
    for (std::size_t c = 0; c < m; ++c) {
      if (t.functional[c].sign() != 0) {
        if (nz >= 0 || t.functional[c] != Scalar(1)) coordinate = false;
        nz = static_cast<int>(c);
      }
    }
    if (coordinate && nz >= 0) exact_coord[static_cast<std::size_t>(nz)] = &t;
  }

  Vec base(m);
  const Index exact_depth = 64;
  Vec exact_prefix;
  bool have_exact_prefix = false;
  std::vector<double> float_sum(m, 0.0);
  bool need_float = false;
  for (std::size_t c = 0; c < m; ++c)
    if (!exact_coord[c]) need_float = true;

  if (need_float) {
    Selection all = Selection::all();
    float_sum = partial_sum_f64(spec, all, depth);
  }
  for (std::size_t c = 0; c < m; ++c) {
    if (exact_coord[c]) {
      if (!have_exact_prefix) {
        exact_prefix = partial_sum(spec, Selection::all(), exact_depth);
        have_exact_prefix = true;
      }
      base[c] = exact_prefix[c] + exact_coord[c]->exact_remainder(exact_depth);
    } else {
      base[c] = Scalar(float_sum[c]);
    }
  }
  return SumRange{std::move(base), g.gamma_perp_basis};
}

}  // namespace subsum
