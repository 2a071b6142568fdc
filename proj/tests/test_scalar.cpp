#include "doctest.h"
#include "subsum/linalg.hpp"

using namespace subsum;

TEST_CASE("exact arithmetic stays exact and normalized") {
  Scalar a = Scalar::ratio(1, 3), b = Scalar::ratio(1, 6);
  Scalar c = a + b;
  CHECK(c.is_exact());
  CHECK(c == Scalar::ratio(1, 2));
  CHECK(numerator(c.rational()) == 1);
  CHECK(denominator(c.rational()) == 2);

  Scalar d = Scalar::ratio(-2, 4);
  CHECK(d.str() == "-1/2");
  CHECK(denominator(d.rational()) == 2);  // positive denominator, lowest terms
}

TEST_CASE("float contagion") {
  Scalar a = Scalar::ratio(1, 3);
  Scalar f(0.5);
  CHECK(!(a * f).is_exact());
  CHECK((a + a).is_exact());
  CHECK((a / Scalar(3)).is_exact());
}

TEST_CASE("mixed comparison is exact") {
  // 0.1 as a double is slightly above 1/10
  CHECK(Scalar(0.1) > Scalar::ratio(1, 10));
  CHECK(Scalar(0.5) == Scalar::ratio(1, 2));
}

TEST_CASE("string round trips") {
  CHECK(Scalar::parse("3/4").str() == "3/4");
  CHECK(Scalar::parse("-7").str() == "-7");
  CHECK(Scalar::parse("1").str() == "1");
  Scalar f(0.1);
  CHECK(Scalar::parse(f.str()).to_double() == 0.1);
  CHECK_THROWS_AS(Scalar::parse("x"), Error);
  CHECK_THROWS_AS(Scalar::ratio(1, 0), Error);
}

TEST_CASE("pow_int and dyadics") {
  CHECK(Scalar::pow_int(BigRational(1, 2), 10) == Scalar::ratio(1, 1024));
  CHECK(Scalar::pow_int(BigRational(3), 4) == Scalar(81));
  CHECK(Scalar::pow_int(BigRational(2), -3) == Scalar::ratio(1, 8));
  CHECK(Scalar::dyadic(3, 5) == Scalar::ratio(3, 32));
}

TEST_CASE("vector ops and sup norm") {
  Vec a{Scalar(1), Scalar::ratio(-1, 2)};
  Vec b{Scalar::ratio(1, 2), Scalar::ratio(1, 2)};
  Vec c = a + b;
  CHECK(c[0] == Scalar::ratio(3, 2));
  CHECK(c[1] == Scalar(0));
  CHECK(a.sup_norm() == Scalar(1));
  CHECK(dot(a, b) == Scalar::ratio(1, 4));
  CHECK(compare(a, b) > 0);
}

TEST_CASE("hull vertices, exact") {
  // degenerate: collinear points give the two extremes
  std::vector<Vec> line = {Vec{Scalar(0), Scalar(0)}, Vec{Scalar(1), Scalar(1)},
                           Vec{Scalar(2), Scalar(2)}};
  auto hv = hull_vertices(line);
  REQUIRE(hv.size() == 2);

  // unit square plus center and an edge midpoint: 4 corners only
  std::vector<Vec> sq = {Vec{Scalar(0), Scalar(0)}, Vec{Scalar(1), Scalar(0)},
                         Vec{Scalar(0), Scalar(1)}, Vec{Scalar(1), Scalar(1)},
                         Vec{Scalar::ratio(1, 2), Scalar::ratio(1, 2)},
                         Vec{Scalar::ratio(1, 2), Scalar(0)}};
  auto hv2 = hull_vertices(sq);
  CHECK(hv2.size() == 4);
}

TEST_CASE("orthogonal complement") {
  auto comp = orthogonal_complement({Vec{Scalar(0), Scalar(1)}}, 2);
  REQUIRE(comp.size() == 1);
  CHECK(comp[0][0] != Scalar(0));
  CHECK(comp[0][1] == Scalar(0));

  auto full = orthogonal_complement({}, 2);
  CHECK(full.size() == 2);

  auto none = orthogonal_complement({Vec{Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(1)}}, 2);
  CHECK(none.empty());
}
