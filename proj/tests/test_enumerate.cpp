#include <algorithm>
#include <random>

#include "doctest.h"
#include "subsum/catalog.hpp"
#include "subsum/enumerate.hpp"

using namespace subsum;

namespace {

SeriesSpec finite_123() {
  SeriesSpec s;
  s.dimension = 1;
  s.name = "finite-123";
  s.term = [](Index n) {
    if (n <= 3) return Vec{Scalar(n)};
    return Vec{Scalar(0)};
  };
  s.nonzero_count = 3;
  auto tail = [](Index N) {
    Scalar acc(0);
    for (Index i = N + 1; i <= 3; ++i) acc += Scalar(i);
    return acc;
  };
  s.tail_norm_bound = tail;
  s.selection_tail_bound = tail;
  s.positive_coords = {true};
  return s;
}

// independent brute-force oracle over bitmasks
std::vector<Vec> brute_subsums(const SeriesSpec& spec, Index N) {
  std::vector<Vec> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << N); ++mask) {
    Vec s = Vec::zero(spec.dimension);
    for (Index b = 0; b < N; ++b)
      if (mask >> b & 1) s += spec.term(b + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return a < b; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("zero terms collapse values and multiply counts") {
  auto groups = enumerate_exact(finite_123(), 5);
  REQUIRE(groups.size() == 7);  // {0..6}
  for (int v = 0; v <= 6; ++v) CHECK(groups[v].value[0] == Scalar(v));
  // each achievable value of {1,2,3} comes with 4 free zero-term choices
  for (const auto& g : groups) CHECK(g.multiplicity % 4 == 0);
  CHECK(groups[0].multiplicity == 4);   // 0: empty on {1,2,3}
  CHECK(groups[3].multiplicity == 8);   // 3 = {3} or {1,2}
  std::uint64_t total = 0;
  for (const auto& g : groups) total += g.multiplicity;
  CHECK(total == 32);
}

TEST_CASE("dyadic depth-3 enumeration") {
  auto groups = enumerate_exact(catalog_get("geometric-half").spec, 3);
  REQUIRE(groups.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(groups[i].value[0] == Scalar::ratio(static_cast<long long>(i), 8));
    CHECK(groups[i].multiplicity == 1);
  }
}

TEST_CASE("ternary depth-10 subsums are distinct with the predicted gap") {
  SeriesSpec c = catalog_get("cantor-ternary").spec;
  auto groups = enumerate_exact(c, 10);
  REQUIRE(groups.size() == 1024);
  Scalar min_gap = Scalar(2);
  for (std::size_t i = 1; i < groups.size(); ++i) {
    CHECK(groups[i].multiplicity == 1);
    min_gap = min(min_gap, groups[i].value[0] - groups[i - 1].value[0]);
  }
  CHECK(min_gap >= Scalar::pow_int(BigRational(1, 3), 10));

  auto oracle = brute_subsums(c, 10);
  REQUIRE(oracle.size() == 1024);
  for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(oracle[i] == groups[i].value);
}

TEST_CASE("merge determinism across thread counts") {
  SeriesSpec s = catalog_get("geometric-2d").spec;
  EnumLimits one;
  one.threads = 1;
  EnumLimits four;
  four.threads = 4;
  four.prefix_depth = 3;
  auto a = enumerate_exact(s, 11, one);
  auto b = enumerate_exact(s, 11, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].multiplicity == b[i].multiplicity);
  }
}

TEST_CASE("depth limit is enforced") {
  EnumLimits lim;
  lim.depth_limit = 6;
  CHECK_THROWS_AS(enumerate_exact(catalog_get("geometric-half").spec, 7, lim), Error);
}

TEST_CASE("box cover of the dyadic series covers the unit interval") {
  SeriesSpec g = catalog_get("geometric-half").spec;
  BoxCover cover = box_cover(g, 6);
  REQUIRE(cover.boxes.size() == 64);
  CHECK(cover.one_sided);
  Scalar hw = Scalar::pow_int(BigRational(1, 2), 7);  // one-sided halfwidth 2^-6 / 2
  for (const auto& b : cover.boxes) CHECK(b.halfwidth()[0] == hw);

  // sweep oracle: the union contains [0,1] and sits inside [-2^-6, 1+2^-6]
  auto sorted = cover.boxes;
  std::sort(sorted.begin(), sorted.end(),
            [](const Box& a, const Box& b) { return a.lo[0] < b.lo[0]; });
  Scalar reach = sorted.front().lo[0];
  CHECK(reach <= Scalar(0));
  for (const auto& b : sorted) {
    CHECK(b.lo[0] <= reach);  // no gap
    reach = max(reach, b.hi[0]);
  }
  CHECK(reach >= Scalar(1));
  CHECK(sorted.front().lo[0] >= Scalar(0) - Scalar::ratio(1, 64));
  CHECK(reach <= Scalar(1) + Scalar::ratio(1, 64));
}

TEST_CASE("depth-0 cover is a single tail box") {
  auto cover = box_cover(catalog_get("geometric-half").spec, 0);
  REQUIRE(cover.boxes.size() == 1);
  CHECK(cover.boxes[0].lo[0] == Scalar(0));
  CHECK(cover.boxes[0].hi[0] == Scalar(1));
}

TEST_CASE("windowed cover discards far boxes and stays valid inside") {
  SeriesSpec g = catalog_get("geometric-half").spec;
  auto window = Box{Vec{Scalar(0)}, Vec{Scalar::ratio(1, 4)}};
  BoxCover cover = box_cover(g, 8, window);
  BoxCover full = box_cover(g, 8);
  CHECK(cover.boxes.size() < full.boxes.size());
  for (const auto& b : cover.boxes) CHECK(b.intersects(window));
  // in-window subsums remain covered
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<Index> sup;
    for (Index n = 3; n <= 40; ++n)
      if (rng() & 1) sup.push_back(n);
    Vec p = partial_sum(g, Selection::finite(sup), 40);
    if (!(p[0] <= Scalar::ratio(1, 4))) continue;
    bool covered = false;
    for (const auto& b : cover.boxes) covered = covered || b.contains(p);
    CHECK(covered);
  }
}

TEST_CASE("cover soundness for deep random selections") {
  std::mt19937_64 rng(20240818);
  for (const auto& name : {"geometric-half", "cantor-ternary", "geometric-2d"}) {
    SeriesSpec s = catalog_get(name).spec;
    BoxCover cover = box_cover(s, 10);
    for (int t = 0; t < 170; ++t) {
      std::vector<Index> sup;
      for (Index n = 1; n <= 40; ++n)
        if (rng() & 1) sup.push_back(n);
      Vec p = partial_sum(s, Selection::finite(sup), 40);
      bool covered = false;
      for (const auto& b : cover.boxes) covered = covered || b.contains(p);
      INFO(name);
      CHECK(covered);
    }
  }
}

TEST_CASE("cover refinement nests depth 11 into depth 10") {
  for (const auto& name : {"geometric-half", "cantor-ternary", "geometric-2d", "c0-truncated(4)"}) {
    SeriesSpec s = catalog_get(name).spec;
    BoxCover fine = box_cover(s, 11);
    BoxCover coarse = box_cover(s, 10);
    Scalar slack(0);
    if (!coarse.one_sided) {
      // signed series: inflate by the difference of the tail bounds
      slack = s.usable_tail_bound()(10) - s.usable_tail_bound()(11);
    }
    for (const auto& b : fine.boxes) {
      bool nested = false;
      for (const auto& c : coarse.boxes) nested = nested || b.inside_of(c, slack);
      INFO(name);
      CHECK(nested);
    }
  }
}

TEST_CASE("membership search follows the binary expansion of 1/3") {
  SeriesSpec g = catalog_get("geometric-half").spec;
  auto sel = membership_search(g, Vec{Scalar::ratio(1, 3)}, Scalar::dyadic(1, 10));
  REQUIRE(sel);
  CHECK(sel->support() == std::vector<Index>{2, 4, 6, 8, 10});
}

TEST_CASE("membership search: trivial and structured targets") {
  SeriesSpec g = catalog_get("geometric-half").spec;
  auto zero = membership_search(g, Vec{Scalar(0)}, Scalar(0.5));
  REQUIRE(zero);
  CHECK(zero->support().empty());

  SeriesSpec e31 = catalog_get("alt-harmonic-dyadic").spec;
  SearchLimits lim;
  lim.depth_limit = 4000;
  auto sel = membership_search(e31, Vec{Scalar(std::log(2.0)), Scalar(1)}, Scalar(1e-3), lim);
  REQUIRE(sel);
  // the only way to push the dyadic coordinate to 1 is the all-ones prefix
  const auto& sup = sel->support();
  for (std::size_t i = 0; i < sup.size(); ++i) CHECK(sup[i] == static_cast<Index>(i + 1));
  CHECK(sup.size() >= 400);
}

TEST_CASE("membership search on the block-ray series") {
  SeriesSpec s = catalog_get("liouville(k^2+3)").spec;
  for (auto [x, y] : {std::pair{0.7, -1.3}, {-1.2, 3.0}, {1.9, 0.1}}) {
    auto sel = membership_search(s, Vec{Scalar(x), Scalar(y)}, Scalar(1e-2));
    REQUIRE(sel);
    auto got = partial_sum_f64(s, *sel, sel->max_support().value_or(0));
    CHECK(std::abs(got[0] - x) < 1e-2);
    CHECK(std::abs(got[1] - y) < 1e-2);
  }
}

TEST_CASE("extreme points of the dyadic series") {
  auto reps = extreme_points(catalog_get("geometric-half").spec, 5);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].point[0] == Scalar(0));
  CHECK(reps[1].point[0] == Scalar::ratio(31, 32));
  CHECK(reps[0].representations.size() == 1);
  CHECK(reps[1].representations.size() == 1);
}

TEST_CASE("every 2-D hull vertex of the geometric pair has one selection") {
  auto reps = extreme_points(catalog_get("geometric-2d").spec, 6);
  CHECK(reps.size() >= 3);
  for (const auto& r : reps) {
    CHECK(r.is_hull_vertex);
    CHECK(r.representations.size() == 1);
  }
}

TEST_CASE("repeated values keep hull vertices unique") {
  // terms 1/2, 1/4, 1/4: the value 1/2 has two selections, the extremes one
  SeriesSpec s;
  s.dimension = 1;
  s.term = [](Index n) {
    if (n == 1) return Vec{Scalar::ratio(1, 2)};
    if (n <= 3) return Vec{Scalar::ratio(1, 4)};
    return Vec{Scalar(0)};
  };
  s.nonzero_count = 3;

  // brute-force oracle over the 8 subsets: values {0, 1/4, 1/2, 3/4, 1}
  std::vector<Vec> all = brute_subsums(s, 3);
  CHECK(all.size() == 5);

  auto reps = extreme_points(s, 3);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].point[0] == Scalar(0));
  CHECK(reps[1].point[0] == Scalar(1));
  CHECK(reps[0].representations.size() == 1);
  CHECK(reps[1].representations.size() == 1);

  auto groups = enumerate_exact(s, 3);
  for (const auto& g : groups) {
    if (g.value[0] == Scalar::ratio(1, 2)) CHECK(g.multiplicity == 2);
  }
}

TEST_CASE("zero terms are rejected by the extreme point scan") {
  CHECK_THROWS_AS(extreme_points(finite_123(), 5), Error);
}
