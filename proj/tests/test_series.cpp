#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dioph/series.hpp"

#include "dioph/errors.hpp"

using namespace dioph;

namespace {

ApproximationSystem make_sys(int m, int n, std::vector<ErrorFunction> w) {
  return ApproximationSystem(m, n, std::move(w));
}

ErrorFunction power_log(long a, long b) {
  return ErrorFunction(Rational(1), Rational(a), Rational(b));
}

}  // namespace

TEST_CASE("partial sums: hand values") {
  auto s1 = make_sys(3, 1, {power_log(3, 0)});
  CHECK(std::abs(partial_sum(s1, 2).midpoint() - 1.25) < 1e-30);

  auto s2 = make_sys(2, 1, {power_log(1, 0)});
  CHECK(std::abs(partial_sum(s2, 3).midpoint() - 11.0 / 6.0) < 1e-12);
}

TEST_CASE("partial sums approach the zeta(2) tail bound") {
  auto sys = make_sys(3, 2, {power_log(1, 0), power_log(1, 0)});
  double a = partial_sum(sys, 1000).midpoint();
  double b = partial_sum(sys, 100000).midpoint();
  CHECK(b > a);
  CHECK(b - a < 1e-2);
  CHECK(std::abs(b - 1.6449340668) < 1e-4);  // zeta(2) minus a small tail
}

TEST_CASE("partial sum is monotone in N") {
  auto sys = make_sys(3, 1, {power_log(2, 0)});
  double prev = 0;
  for (long N : {1L, 2L, 5L, 10L, 100L}) {
    double v = partial_sum(sys, N).midpoint();
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("classification on the family") {
  auto c = classify(make_sys(3, 1, {power_log(3, 0)}));
  CHECK(c.classification == Classification::Convergent);
  CHECK(c.predicted_measure == 0);
  CHECK_FALSE(c.critical);

  auto d = classify(make_sys(3, 1, {power_log(2, 0)}));
  CHECK(d.classification == Classification::Divergent);
  CHECK(d.predicted_measure == 1);
  CHECK(d.critical);

  auto e = classify(make_sys(3, 1, {power_log(2, 2)}));
  CHECK(e.classification == Classification::Convergent);
  CHECK(e.critical);

  // critical line with log sum exactly 1 stays divergent (sum 1/(r log r))
  auto f = classify(make_sys(3, 1, {power_log(2, 1)}));
  CHECK(f.classification == Classification::Divergent);
}

TEST_CASE("(2,1) monotonicity proviso") {
  std::vector<ErrorFunction> nonmono{
      ErrorFunction(Rational(1), Rational(1), Rational(-3))};
  CHECK_THROWS_AS(classify(make_sys(2, 1, nonmono)), HypothesisViolation);
  // the same weights are fine away from (2,1)
  CHECK_NOTHROW(classify(make_sys(3, 1, nonmono)));
}

TEST_CASE("classification is invariant under permuting weights") {
  std::vector<ErrorFunction> w{power_log(1, 0), power_log(2, 3)};
  auto a = classify(make_sys(4, 2, w));
  std::swap(w[0], w[1]);
  auto b = classify(make_sys(4, 2, w));
  CHECK(a.classification == b.classification);
  CHECK(a.exponent_sum == b.exponent_sum);
  CHECK(a.log_sum == b.log_sum);
}

TEST_CASE("classification consistency with partial sums") {
  // Convergent: Cauchy tails shrink. Divergent: visible growth.
  auto conv = make_sys(3, 1, {power_log(3, 0)});
  double gap = partial_sum(conv, 2000).midpoint() -
               partial_sum(conv, 1000).midpoint();
  CHECK(classify(conv).classification == Classification::Convergent);
  CHECK(gap < 1e-3);

  auto div = make_sys(3, 1, {power_log(2, 0)});
  CHECK(classify(div).classification == Classification::Divergent);
  CHECK(partial_sum(div, 1000000).midpoint() >
        partial_sum(div, 1000).midpoint() + 0.5);
}

TEST_CASE("verdict serializes to json") {
  auto v = classify(make_sys(3, 1, {power_log(2, 0)}));
  std::string j = v.to_json();
  CHECK(j.find("\"classification\":\"Divergent\"") != std::string::npos);
  CHECK(j.find("\"predicted_measure\":1") != std::string::npos);
}
