#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dioph/core.hpp"
#include "dioph/rng.hpp"

using namespace dioph;

TEST_CASE("error function pure power") {
  ErrorFunction f(Rational(1), Rational(2), Rational(0));
  auto v = f.eval_exact(10);
  REQUIRE(v.has_value());
  CHECK(*v == Rational(1, 100));
}

TEST_CASE("error function pure log at the guard boundary") {
  // (c=1, a=0, b=1) at r=3: 1/log 3
  ErrorFunction f(Rational(1), Rational(0), Rational(1));
  Interval v = f.eval(3);
  // oracle: mpfr log at 256 bits
  Interval lg = Interval::from_long(3, 256).log();
  Interval expect = Interval::from_long(1, 256).div(lg);
  CHECK(v.compare(expect) == 0);
  CHECK(std::abs(v.midpoint() - 0.91023922662683739) < 1e-12);
}

TEST_CASE("log guard applies below r=3, power does not") {
  ErrorFunction f(Rational(2), Rational(1), Rational(0));
  auto v = f.eval_exact(1);
  REQUIRE(v.has_value());
  CHECK(*v == Rational(2));
  // with a log factor, r=1 and r=3 agree on the log part
  ErrorFunction g(Rational(1), Rational(0), Rational(2));
  CHECK(std::abs(g.eval(1).midpoint() - g.eval(3).midpoint()) < 1e-30);
}

TEST_CASE("error function rejects non-vanishing parameters") {
  CHECK_THROWS(ErrorFunction(Rational(0), Rational(1), Rational(0)));
  CHECK_THROWS(ErrorFunction(Rational(1), Rational(0), Rational(0)));
  CHECK_THROWS(ErrorFunction(Rational(1), Rational(0), Rational(-1)));
  CHECK_THROWS(ErrorFunction(Rational(1), Rational(-1), Rational(0)));
}

TEST_CASE("monotone flag") {
  CHECK(ErrorFunction(Rational(1), Rational(1), Rational(0)).monotone());
  CHECK(ErrorFunction(Rational(1), Rational(1), Rational(2)).monotone());
  CHECK_FALSE(ErrorFunction(Rational(1), Rational(1), Rational(-2)).monotone());
  CHECK_FALSE(ErrorFunction(Rational(1), Rational(0), Rational(1)).monotone());
}

TEST_CASE("error function string round-trip") {
  ErrorFunction f(Rational(1), Rational(3, 2), Rational(0));
  CHECK(f.str() == "1*r^-3/2*logr^-0");
  ErrorFunction g = ErrorFunction::parse(f.str());
  CHECK(g.scale() == f.scale());
  CHECK(g.power() == f.power());
  CHECK(g.log_power() == f.log_power());
  ErrorFunction h = ErrorFunction::parse("2*r^-1*logr^--2");
  CHECK(h.log_power() == Rational(-2));
}

TEST_CASE("positivity and monotonicity over random parameters") {
  for (int trial = 0; trial < 50; ++trial) {
    SampleRng rng(11, trial);
    Rational c(1 + (rng.next_u64() % 9), 1 + (rng.next_u64() % 4));
    Rational a(1 + (rng.next_u64() % 5), 1 + (rng.next_u64() % 3));
    Rational b(rng.next_u64() % 4);
    ErrorFunction f(c, a, b);
    long r1 = 3 + static_cast<long>(rng.next_u64() % 1000);
    long r2 = r1 + 1 + static_cast<long>(rng.next_u64() % 1000);
    Interval v1 = f.eval(r1), v2 = f.eval(r2);
    CHECK(v1.is_positive());
    CHECK(v2.is_positive());
    if (f.monotone()) CHECK(v2.compare(v1) <= 0);
  }
}

TEST_CASE("halving ratio tends to 2^-a") {
  ErrorFunction f(Rational(3), Rational(3, 2), Rational(0));
  double expect = std::pow(2.0, -1.5);
  for (long k : {10L, 20L}) {
    Integer r = Integer(1) << k;
    double ratio = f.eval(2 * r).midpoint() / f.eval(r).midpoint();
    CHECK(std::abs(ratio / expect - 1.0) < 0.01);
  }
  // the log factor's correction dies off as r grows
  ErrorFunction g(Rational(3), Rational(3, 2), Rational(1));
  double d10, d20;
  {
    Integer r = Integer(1) << 10;
    d10 = std::abs(g.eval(2 * r).midpoint() / g.eval(r).midpoint() / expect - 1);
    r = Integer(1) << 20;
    d20 = std::abs(g.eval(2 * r).midpoint() / g.eval(r).midpoint() / expect - 1);
  }
  CHECK(d20 < d10);
}

TEST_CASE("exact dot") {
  IntegerVector q({Integer(3), Integer(-4)});
  RationalVector e{Rational(1, 3), Rational(1, 4)};
  CHECK(dot(q, e) == 0);
  IntegerVector u({Integer(1), Integer(0)});
  RationalVector x{Rational(7, 13), Rational(5, 11)};
  CHECK(dot(u, x) == Rational(7, 13));
  IntegerVector w({Integer(2), Integer(1), Integer(-1)});
  RationalVector y{Rational(1), Rational(1), Rational(0)};
  CHECK(dot(w, y) == 3);
  CHECK_THROWS(dot(u, y));
}

TEST_CASE("dot is bilinear over random exact inputs") {
  for (int trial = 0; trial < 30; ++trial) {
    SampleRng rng(7, trial);
    int m = 2 + static_cast<int>(rng.next_u64() % 4);
    IntegerVector a, b;
    RationalVector e;
    for (int j = 0; j < m; ++j) {
      a.v.push_back(Integer(static_cast<long>(rng.next_u64() % 2001) - 1000));
      b.v.push_back(Integer(static_cast<long>(rng.next_u64() % 2001) - 1000));
      e.push_back(rng.next_dyadic_half());
    }
    IntegerVector s;
    for (int j = 0; j < m; ++j) s.v.push_back(a.v[j] + b.v[j]);
    CHECK(dot(s, e) == dot(a, e) + dot(b, e));
  }
}

TEST_CASE("point tuple validation and json round-trip") {
  PointTuple pts(2, {{Rational(1, 3), Rational(-1, 4)}});
  CHECK(pts.in_unit_box());
  PointTuple back = PointTuple::from_json(pts.to_json());
  CHECK(back.m() == 2);
  CHECK(back.point(0) == pts.point(0));
  CHECK_THROWS(PointTuple(2, {{Rational(1)}}));
  PointTuple wide(2, {{Rational(2), Rational(0)}});
  CHECK_FALSE(wide.in_unit_box());
}

TEST_CASE("approximation system validation") {
  std::vector<ErrorFunction> w{ErrorFunction(Rational(1), Rational(1), Rational(0))};
  CHECK_THROWS(ApproximationSystem(1, 1, w));
  CHECK_THROWS(ApproximationSystem(3, 2, w));
  ApproximationSystem sys(3, 1, w);
  CHECK(sys.all_monotone());
}

TEST_CASE("rational subspace rejects dependent columns") {
  CHECK_THROWS(RationalSubspace(
      3, {{Integer(1), Integer(1), Integer(0)}, {Integer(2), Integer(2), Integer(0)}}));
  RationalSubspace ok(
      3, {{Integer(1), Integer(1), Integer(0)}, {Integer(0), Integer(1), Integer(1)}});
  CHECK(ok.dim() == 2);
}

TEST_CASE("dyadic sampler stays in the box and is reproducible") {
  SampleRng a(42, 5), b(42, 5);
  for (int i = 0; i < 100; ++i) {
    Rational x = a.next_dyadic_half();
    CHECK(x >= Rational(-1, 2));
    CHECK(x < Rational(1, 2));
    CHECK(x == b.next_dyadic_half());
  }
}
