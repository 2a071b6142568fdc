#include "subsum/series.hpp"

#include <algorithm>

namespace subsum {

void PartialSumState::advance(const SeriesSpec& spec, const Selection& sel, Index upto) {
  if (sum.dim() == 0) sum = Vec::zero(spec.dimension);
  for (Index n = next_index; n <= upto; ++n) {
    if (sel.contains(n)) {
      sum += spec.term(n);
      ++terms_used;
    }
  }
  next_index = std::max(next_index, upto + 1);
}

Vec partial_sum(const SeriesSpec& spec, const Selection& sel, Index upto) {
  if (upto < 0) fail(Errc::InvalidArgument, "upto must be >= 0");
  PartialSumState st;
  st.advance(spec, sel, upto);
  return st.sum;
}

std::vector<double> partial_sum_f64(const SeriesSpec& spec, const Selection& sel, Index upto) {
  if (upto < 0) fail(Errc::InvalidArgument, "upto must be >= 0");
  std::vector<double> acc(spec.dimension, 0.0);
  for (Index n = 1; n <= upto; ++n) {
    if (!sel.contains(n)) continue;
    auto t = spec.eval_f64(n);
    for (int c = 0; c < spec.dimension; ++c) acc[c] += t[c];
  }
  return acc;
}

TailEnclosure tail_box(const SeriesSpec& spec, Index N) {
  auto bound_fn = spec.usable_tail_bound();
  if (!bound_fn)
    fail(Errc::MissingBound, "series '" + spec.name + "' declares no tail bound");
  Scalar B = bound_fn(N);

  const std::size_t m = static_cast<std::size_t>(spec.dimension);
  Vec lo(m), hi(m), rlo(m), rhi(m);
  bool all_pos = true;
  for (std::size_t c = 0; c < m; ++c) {
    lo[c] = -B;
    hi[c] = B;
    if (spec.coord_positive(c)) {
      rlo[c] = Scalar(0);
      rhi[c] = B;
    } else {
      rlo[c] = -B;
      rhi[c] = B;
      all_pos = false;
    }
  }
  return TailEnclosure{Box{lo, hi}, B, all_pos, Box{rlo, rhi}};
}

SeriesSpec permuted_series(const SeriesSpec& spec, const std::vector<Index>& perm) {
  auto p = std::make_shared<std::vector<Index>>(perm);
  for (std::size_t i = 0; i < p->size(); ++i) {
    if ((*p)[i] < 1) fail(Errc::InvalidArgument, "permutation is 1-based");
  }
  SeriesSpec out = spec;
  out.name = spec.name + "#permuted";
  auto base_term = spec.term;
  out.term = [p, base_term](Index n) {
    Index src = (n <= static_cast<Index>(p->size())) ? (*p)[n - 1] : n;
    return base_term(src);
  };
  if (spec.term_f64) {
    auto base_f = spec.term_f64;
    out.term_f64 = [p, base_f](Index n) {
      Index src = (n <= static_cast<Index>(p->size())) ? (*p)[n - 1] : n;
      return base_f(src);
    };
  }
  // Tail bounds survive a finite permutation only beyond its reach; keep the
  // declared bound shifted past the permuted prefix.
  Index reach = static_cast<Index>(perm.size());
  for (Index v : perm) reach = std::max(reach, v);
  auto shift = [reach](std::function<Scalar(Index)> f) -> std::function<Scalar(Index)> {
    if (!f) return nullptr;
    return [f, reach](Index N) { return f(std::max(N, reach)); };
  };
  // A permuted prefix can move early terms late, so the plain shifted bound
  // is not valid for N < reach; expose bounds only from `reach` on.
  auto guard = [reach](std::function<Scalar(Index)> f) -> std::function<Scalar(Index)> {
    if (!f) return nullptr;
    return [f, reach](Index N) -> Scalar {
      if (N < reach) fail(Errc::MissingBound, "bound unavailable inside permuted prefix");
      return f(N);
    };
  };
  out.tail_norm_bound = guard(shift(spec.tail_norm_bound));
  out.selection_tail_bound = guard(shift(spec.selection_tail_bound));
  out.exact_abs_tail = guard(shift(spec.exact_abs_tail));
  out.kakeya_regime.reset();
  out.blocks.reset();
  return out;
}

SeriesSpec project_series(const SeriesSpec& spec, const std::vector<std::size_t>& coords) {
  auto cs = std::make_shared<std::vector<std::size_t>>(coords);
  SeriesSpec out;
  out.dimension = static_cast<int>(coords.size());
  out.name = spec.name + "#proj";
  auto base_term = spec.term;
  out.term = [cs, base_term](Index n) {
    Vec t = base_term(n);
    Vec r(cs->size());
    for (std::size_t i = 0; i < cs->size(); ++i) r[i] = t[(*cs)[i]];
    return r;
  };
  auto base_f = spec.term_f64;
  if (base_f) {
    out.term_f64 = [cs, base_f](Index n) {
      auto t = base_f(n);
      std::vector<double> r(cs->size());
      for (std::size_t i = 0; i < cs->size(); ++i) r[i] = t[(*cs)[i]];
      return r;
    };
  }
  out.positive_coords.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    out.positive_coords[i] = spec.coord_positive(coords[i]);
  // Direction tags whose functional lives on the kept coordinates transfer.
  for (const auto& tag : spec.direction_tags) {
    bool supported = true;
    for (std::size_t c = 0; c < tag.functional.dim(); ++c) {
      bool kept = std::find(coords.begin(), coords.end(), c) != coords.end();
      if (!kept && tag.functional[c].sign() != 0) supported = false;
    }
    if (!supported) continue;
    DirectionTag t;
    t.functional = Vec(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) t.functional[i] = tag.functional[coords[i]];
    t.tag = tag.tag;
    t.abs_tail_bound = tag.abs_tail_bound;
    t.exact_remainder = tag.exact_remainder;
    out.direction_tags.push_back(std::move(t));
  }
  // A single absolutely convergent coordinate inherits its tag bound as the
  // projected tail bound; the exact |.|-tail transfers only when the
  // coordinate is positive (then it equals the exact remainder).
  if (coords.size() == 1) {
    for (const auto& t : out.direction_tags) {
      if (t.tag == ConvergenceTag::AbsolutelyConvergent && t.abs_tail_bound &&
          t.functional.dim() == 1 && t.functional[0] == Scalar(1)) {
        out.tail_norm_bound = t.abs_tail_bound;
        out.selection_tail_bound = t.abs_tail_bound;
        if (out.coord_positive(0) && t.exact_remainder) out.exact_abs_tail = t.exact_remainder;
      }
    }
  }
  return out;
}

}  // namespace subsum
