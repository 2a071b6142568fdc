#include <cmath>

#include "doctest.h"
#include "subsum/catalog.hpp"

using namespace subsum;

TEST_CASE("catalog lookup, aliases and errors") {
  CHECK(catalog_get("example-3.1").name == "alt-harmonic-dyadic");
  CHECK(catalog_get("example-3.4").name == "cantor-graph");
  CHECK(catalog_get("example-4.4").name == "open-plane");
  CHECK(catalog_get("geometric-two-thirds").name == "cantor-ternary");
  CHECK(catalog_get("example-3.3(3)").name == "c0-truncated(3)");
  CHECK(catalog_get("liouville(k+3)").spec.blocks.has_value());
  CHECK_THROWS_AS(catalog_get("no-such-series"), Error);
  for (const auto& n : catalog_names()) CHECK(catalog_get(n).name == n);
}

TEST_CASE("pair-series terms match their defining formulas") {
  SeriesSpec e31 = catalog_get("example-3.1").spec;
  CHECK(e31.dimension == 2);
  CHECK(e31.term(1) == Vec{Scalar(1), Scalar::ratio(1, 2)});
  CHECK(e31.term(4) == Vec{Scalar::ratio(-1, 4), Scalar::ratio(1, 16)});

  SeriesSpec e44 = catalog_get("example-4.4").spec;
  CHECK(e44.term(1) == Vec{Scalar::ratio(1, 2), Scalar(1)});
  CHECK(e44.term(2) == Vec{Scalar::ratio(1, 2), Scalar(0)});
  CHECK(e44.term(3) == Vec{Scalar::ratio(-1, 2), Scalar::ratio(-1, 2)});
  CHECK(e44.term(4) == Vec{Scalar::ratio(-1, 2), Scalar(0)});
  CHECK(e44.term(5) == Vec{Scalar::ratio(1, 4), Scalar::ratio(1, 3)});
  CHECK(e44.term(8) == Vec{Scalar::ratio(-1, 4), Scalar(0)});

  SeriesSpec e43 = catalog_get("example-4.3").spec;
  CHECK(e43.term(1) == Vec{Scalar::ratio(1, 2), Scalar(1)});
  CHECK(e43.term(2) == Vec{Scalar::ratio(1, 2), Scalar(0)});
  CHECK(e43.term(3) == Vec{Scalar::ratio(1, 4), Scalar::ratio(-1, 2)});
  CHECK(e43.term(6) == Vec{Scalar::ratio(1, 8), Scalar(0)});
}

TEST_CASE("coordinate-block series structure") {
  SeriesSpec c = catalog_get("c0-truncated(3)").spec;
  CHECK(c.dimension == 3);
  CHECK(*c.nonzero_count == 12);
  CHECK(c.term(1) == Vec{Scalar(1), Scalar(0), Scalar(0)});
  CHECK(c.term(2) == Vec{Scalar(-1), Scalar(0), Scalar(0)});
  CHECK(c.term(3)[1] == Scalar::ratio(1, 2));
  CHECK(c.term(6)[1] == Scalar::ratio(-1, 2));
  CHECK(c.term(7)[2] == Scalar::ratio(1, 3));
  CHECK(c.term(12)[2] == Scalar::ratio(-1, 3));
  CHECK(c.term(13).is_zero());
  // natural sum is zero and the declared tail vanishes past the support
  CHECK(partial_sum(c, Selection::all(), 12).is_zero());
  CHECK(c.tail_norm_bound(12) == Scalar(0));
  CHECK(c.tail_norm_bound(0) == Scalar(6));
}

TEST_CASE("block-interleaved series: lengths, signs, values") {
  GapSpec g = GapSpec::parse("k+3");
  CHECK(g.eval(1) == 4);
  CHECK(g.eval(0) == 3);
  SeriesSpec s = catalog_get("liouville(k+3)").spec;
  REQUIRE(s.blocks);
  CHECK(s.blocks->block_end(0) == 0);
  CHECK(s.blocks->block_end(1) == 32);   // 2^(4+1)
  CHECK(s.blocks->block_end(2) == 96);   // + 2^(5+1)
  CHECK(s.term(1) == Vec{Scalar::ratio(-1, 16), Scalar::ratio(-1, 2)});
  CHECK(s.term(2) == Vec{Scalar::ratio(1, 16), Scalar::ratio(1, 2)});
  CHECK(s.term(33) == Vec{Scalar::ratio(-1, 32), Scalar::ratio(-1, 4)});

  GapSpec q = GapSpec::parse("k^2+3");
  CHECK(q.eval(2) == 7);
  CHECK(q.growth_certified());
  CHECK(!g.growth_certified());
  SeriesSpec sq = catalog_get("example-3.8").spec;
  CHECK(sq.name == "liouville(k^2+3)");
  CHECK(sq.blocks->block_end(1) == 32);
  CHECK(sq.blocks->block_end(2) == 32 + 256);

  GapSpec t = GapSpec::parse("10^k^2");
  CHECK(t.eval(1) == 10);
  SeriesSpec st = catalog_get("liouville(10^k^2)").spec;
  CHECK(st.blocks->max_block == 1);
  CHECK(st.blocks->block_end(1) == 2048);
  CHECK(st.term(2) == Vec{Scalar::ratio(1, 1024), Scalar::ratio(1, 2)});

  CHECK_THROWS_AS(GapSpec::parse("2^k"), Error);
}

TEST_CASE("doubled series carry each harmonic magnitude twice") {
  SeriesSpec d31 = catalog_get("doubled-example-3.1").spec;
  CHECK(d31.term(1) == Vec{Scalar(1), Scalar::ratio(1, 2)});
  CHECK(d31.term(2) == Vec{Scalar(1), Scalar::ratio(1, 4)});
  CHECK(d31.term(3) == Vec{Scalar::ratio(-1, 2), Scalar::ratio(1, 8)});
  SeriesSpec d34 = catalog_get("doubled-example-3.4").spec;
  CHECK(d34.term(3) == Vec{Scalar::ratio(2, 27), Scalar::ratio(-1, 2)});
  CHECK(d34.term(4) == Vec{Scalar::ratio(2, 81), Scalar::ratio(-1, 2)});
}

TEST_CASE("catalog consistency: declared tags match numeric growth") {
  // absolutely convergent tags stay under their declared bound at 0;
  // conditionally convergent tags must clear a harmonic-type growth floor
  const double floor = 3.0;
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_get(name);
    for (const auto& tag : e.spec.direction_tags) {
      double acc = 0;
      std::vector<double> f(tag.functional.dim());
      for (std::size_t c = 0; c < f.size(); ++c) f[c] = tag.functional[c].to_double();
      for (Index n = 1; n <= 10'000; ++n) {
        auto t = e.spec.eval_f64(n);
        double v = 0;
        for (std::size_t c = 0; c < f.size(); ++c) v += f[c] * t[c];
        acc += std::abs(v);
      }
      INFO(name, " functional ", tag.functional.str());
      if (tag.tag == ConvergenceTag::AbsolutelyConvergent) {
        REQUIRE(tag.abs_tail_bound);
        CHECK(acc <= tag.abs_tail_bound(0).to_double() + 1e-9);
      } else {
        CHECK(acc >= floor);
      }
    }
  }
}

TEST_CASE("declared tail bounds match direct summation on a window") {
  // oracle: the |.|-tail between N and N+400 never exceeds the declared bound
  for (const auto& name : {"guthrie-nymann", "open-corner", "open-plane"}) {
    SeriesSpec s = catalog_get(name).spec;
    const DirectionTag* xtag = nullptr;
    for (const auto& t : s.direction_tags)
      if (t.tag == ConvergenceTag::AbsolutelyConvergent) xtag = &t;
    REQUIRE(xtag);
    for (Index N : {0, 1, 2, 3, 7, 10, 15}) {
      Scalar acc(0);
      for (Index i = N + 1; i <= N + 400; ++i) {
        Scalar v(0);
        Vec term = s.term(i);
        for (std::size_t c = 0; c < term.dim(); ++c) v += xtag->functional[c] * term[c];
        acc += v.abs();
      }
      INFO(name, " N=", N);
      CHECK(acc <= xtag->abs_tail_bound(N));
      if (xtag->exact_remainder) {
        // remainder telescopes: R(N) - R(N+400) equals the signed window sum
        Scalar signed_acc(0);
        for (Index i = N + 1; i <= N + 400; ++i) {
          Scalar v(0);
          Vec term = s.term(i);
          for (std::size_t c = 0; c < term.dim(); ++c) v += xtag->functional[c] * term[c];
          signed_acc += v;
        }
        CHECK(xtag->exact_remainder(N) - xtag->exact_remainder(N + 400) == signed_acc);
      }
    }
  }
}
