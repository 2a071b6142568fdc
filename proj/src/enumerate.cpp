#include "subsum/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace subsum {

namespace {

std::vector<Vec> collect_terms(const SeriesSpec& spec, Index N) {
  std::vector<Vec> t;
  t.reserve(static_cast<std::size_t>(N));
  for (Index n = 1; n <= N; ++n) t.push_back(spec.term(n));
  return t;
}

bool all_exact(const std::vector<Vec>& terms) {
  for (const auto& t : terms)
    for (std::size_t c = 0; c < t.dim(); ++c)
      if (!t[c].is_exact()) return false;
  return true;
}

// depth-first expansion of all subset sums of terms[from..], seeded with a
// prefix sum
void expand(const std::vector<Vec>& terms, std::size_t from, Vec sum, std::vector<Vec>& out) {
  if (from == terms.size()) {
    out.push_back(std::move(sum));
    return;
  }
  expand(terms, from + 1, sum, out);
  sum += terms[from];
  expand(terms, from + 1, std::move(sum), out);
}

int effective_threads(const EnumLimits& limits) {
  if (limits.threads > 0) return limits.threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

std::vector<ValueGroup> enumerate_exact(const SeriesSpec& spec, Index N,
                                        const EnumLimits& limits) {
  if (N < 0) fail(Errc::InvalidArgument, "negative depth");
  if (N > limits.depth_limit)
    fail(Errc::LimitExceeded, "enumeration depth " + std::to_string(N) + " exceeds limit " +
                                  std::to_string(limits.depth_limit));
  const auto terms = collect_terms(spec, N);
  const std::size_t m = static_cast<std::size_t>(spec.dimension);

  const Index P = std::min(N, limits.prefix_depth);
  const std::size_t nprefix = std::size_t(1) << P;
  const int T = std::max(1, std::min<int>(effective_threads(limits), static_cast<int>(nprefix)));

  std::vector<std::vector<Vec>> partial(static_cast<std::size_t>(T));
  auto worker = [&](int ti) {
    auto& out = partial[static_cast<std::size_t>(ti)];
    for (std::size_t p = static_cast<std::size_t>(ti); p < nprefix; p += static_cast<std::size_t>(T)) {
      Vec sum = Vec::zero(m);
      for (Index b = 0; b < P; ++b)
        if (p >> b & 1) sum += terms[static_cast<std::size_t>(b)];
      expand(terms, static_cast<std::size_t>(P), std::move(sum), out);
    }
  };
  if (T == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int ti = 0; ti < T; ++ti) pool.emplace_back(worker, ti);
    for (auto& th : pool) th.join();
  }

  std::vector<Vec> sums;
  sums.reserve(std::size_t(1) << N);
  for (auto& part : partial)
    for (auto& v : part) sums.push_back(std::move(v));

  // canonical order makes the merge independent of thread count
  if (all_exact(terms)) {
    std::sort(sums.begin(), sums.end(), [](const Vec& a, const Vec& b) { return a < b; });
    std::vector<ValueGroup> groups;
    for (auto& v : sums) {
      if (!groups.empty() && groups.back().value == v) {
        ++groups.back().multiplicity;
      } else {
        groups.push_back({std::move(v), 1});
      }
    }
    return groups;
  }

  // float mode: group on the quantization grid
  const double grid = limits.dedup_grid;
  auto key = [&](const Vec& v) {
    std::vector<long long> k(v.dim());
    for (std::size_t c = 0; c < v.dim(); ++c) k[c] = std::llround(v[c].to_double() / grid);
    return k;
  };
  std::vector<std::pair<std::vector<long long>, std::size_t>> keyed(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) keyed[i] = {key(sums[i]), i};
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ValueGroup> groups;
  for (auto& [k, i] : keyed) {
    if (!groups.empty() && key(groups.back().value) == k) {
      ++groups.back().multiplicity;
    } else {
      groups.push_back({sums[i], 1});
    }
  }
  return groups;
}

BoxCover box_cover(const SeriesSpec& spec, Index N, const std::optional<Box>& window,
                   const EnumLimits& limits) {
  if (N < 0) fail(Errc::InvalidArgument, "negative depth");
  if (N > limits.depth_limit) fail(Errc::LimitExceeded, "cover depth exceeds limit");
  TailEnclosure tail = tail_box(spec, N);
  const Box& tb = tail.one_sided ? tail.refined : tail.box;

  const auto terms = collect_terms(spec, N);
  const std::size_t m = static_cast<std::size_t>(spec.dimension);

  // per-coordinate attainable range of the remaining indices (suffix + tail)
  std::vector<Vec> suf_lo(static_cast<std::size_t>(N) + 1, tb.lo);
  std::vector<Vec> suf_hi(static_cast<std::size_t>(N) + 1, tb.hi);
  for (Index d = N - 1; d >= 0; --d) {
    Vec lo = suf_lo[static_cast<std::size_t>(d) + 1];
    Vec hi = suf_hi[static_cast<std::size_t>(d) + 1];
    const Vec& t = terms[static_cast<std::size_t>(d)];
    for (std::size_t c = 0; c < m; ++c) {
      if (t[c].sign() < 0) lo[c] += t[c];
      if (t[c].sign() > 0) hi[c] += t[c];
    }
    suf_lo[static_cast<std::size_t>(d)] = std::move(lo);
    suf_hi[static_cast<std::size_t>(d)] = std::move(hi);
  }

  std::vector<Vec> prefixes;
  // DFS over indices in natural order; a branch survives iff its reachable
  // box intersects the window.
  auto reach_ok = [&](const Vec& s, Index d) {
    if (!window) return true;
    for (std::size_t c = 0; c < m; ++c) {
      Scalar lo = s[c] + suf_lo[static_cast<std::size_t>(d)][c];
      Scalar hi = s[c] + suf_hi[static_cast<std::size_t>(d)][c];
      if (hi < window->lo[c] || lo > window->hi[c]) return false;
    }
    return true;
  };
  std::function<void(Index, Vec)> dfs = [&](Index d, Vec s) {
    if (!reach_ok(s, d)) return;
    if (d == N) {
      prefixes.push_back(std::move(s));
      return;
    }
    dfs(d + 1, s);
    s += terms[static_cast<std::size_t>(d)];
    dfs(d + 1, std::move(s));
  };
  dfs(0, Vec::zero(m));

  std::sort(prefixes.begin(), prefixes.end(), [](const Vec& a, const Vec& b) { return a < b; });
  prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());

  BoxCover cover;
  cover.depth = N;
  cover.source = spec.name;
  cover.one_sided = tail.one_sided;
  for (const auto& p : prefixes) {
    Box b{p + tb.lo, p + tb.hi};
    if (window && !b.intersects(*window)) continue;
    cover.boxes.push_back(std::move(b));
  }
  return cover;
}

namespace {

// ---- structured search over block-ray series ----------------------------

std::optional<Selection> block_plan_search(const SeriesSpec& spec, const Vec& target,
                                           const Scalar& eps) {
  const BlockStructure& bs = *spec.blocks;
  if (spec.dimension != 2) return std::nullopt;
  BigRational rx = target[0].as_rational(), ry = target[1].as_rational();
  BigRational e = eps.as_rational();

  auto round_div = [](const BigRational& a, const BigRational& step) -> BigInt {
    BigRational q = a / step + BigRational(1, 2);
    BigInt fl = numerator(q) / denominator(q);
    if (q < 0 && fl * denominator(q) != numerator(q)) --fl;
    return fl;
  };

  std::vector<std::pair<Index, BigInt>> picks;  // (block, signed count)
  BigRational resx = rx, resy = ry;

  // coarse coordinate first: its per-block step is the smaller one
  Index k = 1;
  for (; k <= bs.max_block; ++k) {
    if (abs(resx) <= e / 8) break;
    Vec ray = bs.ray(k);
    BigRational step = ray[0].rational();
    BigInt cap = (bs.block_end(k) - bs.block_end(k - 1)) / 2;
    BigInt t = round_div(resx, step);
    if (t > cap) t = cap;
    if (t < -cap) t = -cap;
    if (t != 0) {
      picks.emplace_back(k, t);
      resx -= BigRational(t) * step;
      resy -= BigRational(t) * ray[1].rational();
    }
  }
  // second coordinate from the first block whose leakage into the first
  // coordinate is negligible
  Index ky = k;
  for (; ky <= bs.max_block; ++ky) {
    Vec ray = bs.ray(ky);
    BigRational leak = (abs(resy) + 1) / ray[1].rational() * ray[0].rational();
    if (leak < e / 8) break;
  }
  for (Index kk = ky; kk <= bs.max_block; ++kk) {
    if (abs(resy) <= e / 8) break;
    Vec ray = bs.ray(kk);
    BigRational step = ray[1].rational();
    BigInt cap = (bs.block_end(kk) - bs.block_end(kk - 1)) / 2;
    BigInt t = round_div(resy, step);
    if (t > cap) t = cap;
    if (t < -cap) t = -cap;
    if (t != 0) {
      picks.emplace_back(kk, t);
      resx -= BigRational(t) * ray[0].rational();
      resy -= BigRational(t) * step;
    }
  }
  if (abs(resx) >= e || abs(resy) >= e) return std::nullopt;

  // realize signed counts: sign of index i inside a block is (-1)^i
  std::vector<Index> support;
  for (auto& [blk, t] : picks) {
    Index start = bs.block_end(blk - 1);
    BigInt cnt = abs(t);
    Index first = t > 0 ? start + 2 : start + 1;  // even indices are positive
    for (BigInt i = 0; i < cnt; ++i)
      support.push_back(first + 2 * static_cast<Index>(i));
  }
  return Selection::finite(std::move(support));
}

struct DfsFrame {
  Index i;               // next index to decide (0-based into terms)
  int stage;             // 0: none tried, 1: first child tried, 2: done
  bool take_first;
  std::vector<double> residual;
};

}  // namespace

std::optional<Selection> membership_search(const SeriesSpec& spec, const Vec& target,
                                           const Scalar& eps, const SearchLimits& limits) {
  if (eps.sign() <= 0) fail(Errc::InvalidArgument, "eps must be positive");
  const std::size_t m = static_cast<std::size_t>(spec.dimension);
  if (target.dim() != m) fail(Errc::InvalidArgument, "target dimension mismatch");

  auto verify = [&](const Selection& sel) {
    Index hi = sel.max_support().value_or(0);
    auto achieved = partial_sum_f64(spec, sel, hi);
    double worst = 0;
    for (std::size_t c = 0; c < m; ++c)
      worst = std::max(worst, std::abs(achieved[c] - target[c].to_double()));
    return worst < eps.to_double();
  };

  if (spec.blocks) {
    auto planned = block_plan_search(spec, target, eps);
    if (planned && verify(*planned)) return planned;
    return std::nullopt;
  }

  const Index D = limits.depth_limit;
  const double epsd = eps.to_double();

  std::vector<std::vector<double>> terms(static_cast<std::size_t>(D));
  for (Index n = 1; n <= D; ++n) terms[static_cast<std::size_t>(n - 1)] = spec.eval_f64(n);

  // suffix attainable ranges
  std::vector<std::vector<double>> suf_lo(static_cast<std::size_t>(D) + 1,
                                          std::vector<double>(m, 0.0));
  std::vector<std::vector<double>> suf_hi = suf_lo;
  for (Index d = D - 1; d >= 0; --d) {
    for (std::size_t c = 0; c < m; ++c) {
      double t = terms[static_cast<std::size_t>(d)][c];
      suf_lo[static_cast<std::size_t>(d)][c] =
          suf_lo[static_cast<std::size_t>(d) + 1][c] + std::min(t, 0.0);
      suf_hi[static_cast<std::size_t>(d)][c] =
          suf_hi[static_cast<std::size_t>(d) + 1][c] + std::max(t, 0.0);
    }
  }
  auto viable = [&](const std::vector<double>& r, Index d) {
    for (std::size_t c = 0; c < m; ++c) {
      if (r[c] < suf_lo[static_cast<std::size_t>(d)][c] - epsd) return false;
      if (r[c] > suf_hi[static_cast<std::size_t>(d)][c] + epsd) return false;
    }
    return true;
  };
  auto sup = [&](const std::vector<double>& r) {
    double w = 0;
    for (double v : r) w = std::max(w, std::abs(v));
    return w;
  };

  std::vector<double> r0(m);
  for (std::size_t c = 0; c < m; ++c) r0[c] = target[c].to_double();

  std::vector<DfsFrame> stack;
  stack.push_back({0, 0, false, r0});
  std::vector<bool> taken(static_cast<std::size_t>(D), false);
  std::int64_t budget = limits.budget;

  while (!stack.empty()) {
    DfsFrame& f = stack.back();
    if (f.stage == 0) {
      if (sup(f.residual) < epsd) {
        std::vector<Index> support;
        for (Index n = 0; n < f.i; ++n)
          if (taken[static_cast<std::size_t>(n)]) support.push_back(n + 1);
        auto sel = Selection::finite(std::move(support));
        if (verify(sel)) return sel;
        return std::nullopt;  // float drift beyond eps; treat as inconclusive
      }
      if (f.i >= D || budget-- <= 0) {
        stack.pop_back();
        continue;
      }
      std::vector<double> took(m);
      for (std::size_t c = 0; c < m; ++c)
        took[c] = f.residual[c] - terms[static_cast<std::size_t>(f.i)][c];
      f.take_first = sup(took) < sup(f.residual);
      f.stage = 1;
      bool take = f.take_first;
      std::vector<double> r = take ? took : f.residual;
      if (viable(r, f.i + 1)) {
        taken[static_cast<std::size_t>(f.i)] = take;
        stack.push_back({f.i + 1, 0, false, std::move(r)});
      }
      continue;
    }
    if (f.stage == 1) {
      f.stage = 2;
      bool take = !f.take_first;
      std::vector<double> r = f.residual;
      if (take)
        for (std::size_t c = 0; c < m; ++c) r[c] -= terms[static_cast<std::size_t>(f.i)][c];
      if (viable(r, f.i + 1)) {
        taken[static_cast<std::size_t>(f.i)] = take;
        stack.push_back({f.i + 1, 0, false, std::move(r)});
      }
      continue;
    }
    stack.pop_back();
  }
  return std::nullopt;
}

std::vector<ExtremePointReport> extreme_points(const SeriesSpec& spec, Index N,
                                               const EnumLimits& limits) {
  if (spec.dimension != 1 && spec.dimension != 2)
    fail(Errc::InvalidArgument, "extreme points support dimensions 1 and 2");
  if (N < 0 || N > std::min<Index>(limits.depth_limit, 20))
    fail(Errc::LimitExceeded, "depth out of range for exhaustive representations");
  const auto terms = collect_terms(spec, N);
  for (Index n = 0; n < N; ++n) {
    if (terms[static_cast<std::size_t>(n)].is_zero())
      fail(Errc::ZeroTermPresent, "term " + std::to_string(n + 1) + " is zero");
  }
  const std::size_t m = static_cast<std::size_t>(spec.dimension);
  const std::uint32_t total = std::uint32_t(1) << N;

  std::vector<std::pair<Vec, std::uint32_t>> sums;
  sums.reserve(total);
  std::function<void(Index, Vec, std::uint32_t)> go = [&](Index d, Vec s, std::uint32_t mask) {
    if (d == N) {
      sums.emplace_back(std::move(s), mask);
      return;
    }
    go(d + 1, s, mask);
    s += terms[static_cast<std::size_t>(d)];
    go(d + 1, std::move(s), mask | (std::uint32_t(1) << d));
  };
  go(0, Vec::zero(m), 0);

  std::sort(sums.begin(), sums.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Vec> points;
  std::vector<std::vector<std::uint32_t>> masks;
  for (auto& [v, mask] : sums) {
    if (!points.empty() && points.back() == v) {
      masks.back().push_back(mask);
    } else {
      points.push_back(v);
      masks.push_back({mask});
    }
  }

  auto vertex_ids = hull_vertices(points);
  std::sort(vertex_ids.begin(), vertex_ids.end());

  std::vector<ExtremePointReport> out;
  for (std::size_t id : vertex_ids) {
    ExtremePointReport rep;
    rep.point = points[id];
    rep.is_hull_vertex = true;
    for (std::uint32_t mask : masks[id]) {
      std::vector<Index> sup;
      for (Index b = 0; b < N; ++b)
        if (mask >> b & 1) sup.push_back(b + 1);
      rep.representations.push_back(Selection::finite(std::move(sup)));
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace subsum
