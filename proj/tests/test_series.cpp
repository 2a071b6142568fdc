#include <cmath>
#include <random>

#include "doctest.h"
#include "subsum/catalog.hpp"

using namespace subsum;

TEST_CASE("partial sums of the dyadic geometric series") {
  SeriesSpec g = catalog_get("geometric-half").spec;
  CHECK(partial_sum(g, Selection::all(), 3)[0] == Scalar::ratio(7, 8));
  CHECK(partial_sum(g, Selection::empty(), 100)[0] == Scalar(0));

  PartialSumState st;
  st.advance(g, Selection::all(), 2);
  st.advance(g, Selection::all(), 3);
  CHECK(st.sum[0] == Scalar::ratio(7, 8));
  CHECK(st.terms_used == 3);
}

TEST_CASE("natural-order sum of the harmonic-dyadic pair series") {
  SeriesSpec s = catalog_get("alt-harmonic-dyadic").spec;
  auto v = partial_sum_f64(s, Selection::all(), 1'000'000);
  CHECK(std::abs(v[0] - std::log(2.0)) < 1e-5);
  CHECK(std::abs(v[1] - 1.0) < 1e-5);
}

TEST_CASE("tail boxes") {
  SeriesSpec g = catalog_get("geometric-half").spec;
  auto t = tail_box(g, 4);
  CHECK(t.bound == Scalar::ratio(1, 16));
  CHECK(t.one_sided);
  CHECK(t.box.lo[0] == Scalar::ratio(-1, 16));
  CHECK(t.refined.lo[0] == Scalar(0));

  SeriesSpec e31 = catalog_get("alt-harmonic-dyadic").spec;
  CHECK_THROWS_AS(tail_box(e31, 4), Error);  // no usable whole-vector bound
}

TEST_CASE("ternary tail formula agrees with direct summation") {
  // oracle: sum 2/3^k over k = 4..120 plus a crude remainder envelope
  SeriesSpec c = catalog_get("cantor-ternary").spec;
  Scalar direct(0);
  for (Index k = 4; k <= 120; ++k) direct += c.term(k)[0];
  Scalar declared = c.exact_abs_tail(3);
  CHECK(declared == Scalar::ratio(1, 27));
  CHECK(direct < declared);
  CHECK(declared - direct < Scalar::pow_int(BigRational(1, 3), 119));
}

TEST_CASE("tail soundness under random selections") {
  std::mt19937_64 rng(20240817);
  auto specs = {catalog_get("geometric-half").spec, catalog_get("cantor-ternary").spec,
                catalog_get("geometric-2d").spec};
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 340; ++trial) {
      Index N = static_cast<Index>(rng() % 30);
      std::vector<Index> sup;
      for (Index n = N + 1; n <= N + 200; ++n)
        if (rng() & 1) sup.push_back(n);
      Selection sel = Selection::finite(sup);
      Vec tail_sum = partial_sum(spec, sel, N + 200) - partial_sum(spec, sel, N);
      auto enc = tail_box(spec, N);
      Scalar slack = spec.usable_tail_bound()(N + 200);
      CHECK(enc.box.contains(tail_sum, slack));
      if (enc.one_sided) CHECK(enc.refined.contains(tail_sum, slack));
    }
  }
}

TEST_CASE("permuted series evaluate through the permutation") {
  SeriesSpec g = catalog_get("geometric-half").spec;
  SeriesSpec p = permuted_series(g, {3, 1, 2});
  CHECK(p.term(1)[0] == Scalar::ratio(1, 8));
  CHECK(p.term(2)[0] == Scalar::ratio(1, 2));
  CHECK(p.term(4)[0] == Scalar::ratio(1, 16));
  // totals agree at any depth covering the permuted prefix
  CHECK(partial_sum(p, Selection::all(), 5) == partial_sum(g, Selection::all(), 5));
  CHECK_THROWS_AS(p.tail_norm_bound(1), Error);
  CHECK(p.tail_norm_bound(3) == Scalar::ratio(1, 8));
}

TEST_CASE("projection keeps coordinate tags and bounds") {
  SeriesSpec e31 = catalog_get("alt-harmonic-dyadic").spec;
  SeriesSpec y = project_series(e31, {1});
  CHECK(y.dimension == 1);
  CHECK(y.term(3)[0] == Scalar::ratio(1, 8));
  REQUIRE(y.tail_norm_bound);
  CHECK(y.tail_norm_bound(2) == Scalar::ratio(1, 4));
  CHECK(y.exact_abs_tail);

  SeriesSpec x = project_series(e31, {0});
  CHECK(!x.tail_norm_bound);
  CHECK(x.term(2)[0] == Scalar::ratio(-1, 2));
}

TEST_CASE("selection membership and patterns") {
  Selection odd = Selection::patterned({}, {TailPattern{1, 2, 1}});
  CHECK(odd.contains(1));
  CHECK(!odd.contains(2));
  CHECK(odd.contains(999));
  CHECK(!odd.is_finite());

  Selection mixed = Selection::patterned({2, 4}, {TailPattern{10, 2, 0}});
  CHECK(mixed.contains(2));
  CHECK(mixed.contains(12));
  CHECK(!mixed.contains(11));
  CHECK(!mixed.contains(8));
  auto upto = mixed.indices_upto(14);
  CHECK(upto == std::vector<Index>{2, 4, 10, 12, 14});

  // support entries swallowed by a pattern are deduplicated
  Selection dedup = Selection::patterned({10, 3}, {TailPattern{9, 1, 0}});
  CHECK(dedup.support() == std::vector<Index>{3});
}
