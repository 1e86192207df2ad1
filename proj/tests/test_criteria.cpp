#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dioph/criteria.hpp"
#include "dioph/errors.hpp"
#include "dioph/minima.hpp"
#include "dioph/rng.hpp"

using namespace dioph;

namespace {

const Rational kGolden(Integer("11400714819323198485"), Integer(1) << 64);

Interval golden_interval(mpfr_prec_t prec = 256) {
  // (sqrt(5) - 1) / 2
  return Interval::from_long(5, prec)
      .sqrt()
      .sub(Interval::from_long(1, prec))
      .div(Interval::from_long(2, prec));
}

Rational from_quotients(const std::vector<Integer>& a) {
  Integer p1(1), p0(0), q1(0), q0(1);  // p_{k-1}, p_{k-2}
  for (const auto& ak : a) {
    Integer p = ak * p1 + p0;
    Integer q = ak * q1 + q0;
    p0 = p1;
    p1 = p;
    q0 = q1;
    q1 = q;
  }
  return Rational(p1, q1);
}

// Quotients exploding like powers of the running denominator, so that
// log q_{k+1} / log q_k grows without bound (genuine Liouville behavior).
std::vector<Integer> liouville_quotients() {
  std::vector<Integer> a{Integer(0), Integer(2), Integer(1), Integer(1),
                         Integer(1)};
  Integer q1(0), q0(1);
  for (size_t k = 0; k < a.size(); ++k) {
    Integer q = a[k] * q1 + q0;
    q0 = q1;
    q1 = q;
  }
  for (unsigned long e : {6UL, 8UL, 10UL}) {
    Integer big;
    mpz_pow_ui(big.get_mpz_t(), q1.get_mpz_t(), e);
    a.push_back(big);
    Integer q = big * q1 + q0;
    q0 = q1;
    q1 = q;
  }
  for (int i = 0; i < 3; ++i) a.push_back(Integer(1));
  return a;
}

}  // namespace

TEST_CASE("dimension lower bound examples") {
  auto b1 = dimension_lower_bound(1, {Rational(3)});
  CHECK(b1.value == 4);
  CHECK(b1.ceiling == 4);
  auto b2 = dimension_lower_bound(1, {Rational(158, 100)});
  CHECK(b2.value == Rational(129, 50));
  CHECK(b2.ceiling == 3);
  auto b3 = dimension_lower_bound(2, {Rational(1, 2), Rational(1, 4)});
  CHECK(b3.value == Rational(11, 4));
  CHECK(b3.ceiling == 3);
  CHECK_THROWS(dimension_lower_bound(1, {Rational(0)}));
}

TEST_CASE("dimension lower bound is monotone and symmetric") {
  for (int trial = 0; trial < 20; ++trial) {
    SampleRng rng(3, trial);
    Rational a(1 + (rng.next_u64() % 9), 1 + (rng.next_u64() % 4));
    Rational b(1 + (rng.next_u64() % 9), 1 + (rng.next_u64() % 4));
    CHECK(dimension_lower_bound(2, {a, b}).value ==
          dimension_lower_bound(2, {b, a}).value);
    CHECK(dimension_lower_bound(2, {a + 1, b}).value >
          dimension_lower_bound(2, {a, b}).value);
  }
}

TEST_CASE("criterion input validation") {
  CriterionInput in;
  in.mode = CriterionMode::Nesterenko;
  in.n = 2;
  in.tau_hat = {Rational(1), Rational(1)};
  CHECK_THROWS_AS(in.validate(), HypothesisViolation);
  in.tau_hat = {Rational(1), Rational(2)};
  CHECK_NOTHROW(in.validate());

  CriterionInput si;
  si.mode = CriterionMode::Siegel;
  si.n = 1;
  si.tau_hat = {Rational(1)};
  EvidenceRecord rec;
  rec.Q = 100;
  rec.witnesses = {IntegerVector({Integer(1), Integer(0)}),
                   IntegerVector({Integer(2), Integer(0)})};
  si.evidence = {rec};
  CHECK_THROWS_AS(si.validate(), HypothesisViolation);
  si.evidence[0].witnesses[1] = IntegerVector({Integer(0), Integer(1)});
  CHECK_NOTHROW(si.validate());
}

TEST_CASE("exponent estimation on an exact power law") {
  std::vector<std::pair<Integer, Rational>> data;
  for (long e = 2; e <= 6; ++e) {
    Integer Q = 1;
    for (long i = 0; i < e; ++i) Q *= 10;
    data.emplace_back(Q, Rational(Integer(1), Q * Q));
  }
  auto est = estimate_exponents(data);
  CHECK(est.tau_hat == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(est.band < 1e-9);
}

TEST_CASE("log factors bias the slope predictably") {
  auto make = [](double lo_exp, double hi_exp, int pts) {
    std::vector<std::pair<Integer, Rational>> data;
    for (int k = 0; k < pts; ++k) {
      double le = lo_exp + (hi_exp - lo_exp) * k / (pts - 1);
      double Qd = std::pow(10.0, le);
      Integer Q(static_cast<long>(Qd));
      double lq = std::log(Qd);
      data.emplace_back(Q, Rational(std::pow(lq, 3) / Qd));
    }
    return estimate_exponents(data);
  };
  auto wide = make(4.0, 18.0, 8);
  CHECK(wide.tau_hat > 0.8);
  CHECK(wide.tau_hat < 1.0);
  auto narrow = make(4.0, 8.0, 8);
  // the log-factor bias dies off as the Q-range grows
  CHECK(std::abs(wide.tau_hat - 1.0) < std::abs(narrow.tau_hat - 1.0));
}

TEST_CASE("exponent estimation rejections") {
  std::vector<std::pair<Integer, Rational>> few = {
      {100, Rational(1, 100)}, {1000, Rational(1, 1000)}, {10000, Rational(1, 10000)}};
  CHECK_THROWS(estimate_exponents(few));
  std::vector<std::pair<Integer, Rational>> narrow;
  for (long Q = 100; Q < 105; ++Q) narrow.emplace_back(Q, Rational(1, Q));
  CHECK_THROWS(estimate_exponents(narrow));
  std::vector<std::pair<Integer, Rational>> collapse;
  for (long e = 2; e <= 6; ++e)
    collapse.emplace_back(Integer(long(std::pow(10, e))), Rational(0));
  CHECK_THROWS(estimate_exponents(collapse));
}

TEST_CASE("golden-ratio pipeline recovers tau = 1") {
  PointTuple pts(2, {{kGolden, Rational(-1)}});
  std::vector<std::pair<Integer, Rational>> data;
  for (long Q : {100L, 316L, 1000L, 3162L, 10000L}) {
    auto body = ConvexBody::from_exponents(pts, Q, {Rational(1)}, {Rational(0)});
    auto res = successive_minima(body);
    data.emplace_back(Q, rational_abs(dot(res.witnesses[0], pts.point(0))));
  }
  auto est = estimate_exponents(data);
  CHECK(std::abs(est.tau_hat - 1.0) < 0.1);
}

TEST_CASE("continued fraction of rationals") {
  auto cf = continued_fraction(Rational(355, 113), 20);
  CHECK(cf.terminated);
  CHECK(cf.quotients ==
        std::vector<Integer>{Integer(3), Integer(7), Integer(16)});
  CHECK(cf.p.back() == 355);
  CHECK(cf.q.back() == 113);
  auto half = continued_fraction(Rational(1, 2), 5);
  CHECK(half.quotients == std::vector<Integer>{Integer(0), Integer(2)});
  CHECK(half.terminated);
}

TEST_CASE("continued fraction of the golden ratio is all ones") {
  auto cf = continued_fraction(golden_interval(), 20);
  REQUIRE(cf.quotients.size() == 20);
  CHECK_FALSE(cf.precision_exhausted);
  CHECK(cf.quotients[0] == 0);
  for (size_t k = 1; k < cf.quotients.size(); ++k) CHECK(cf.quotients[k] == 1);
  // convergents are consecutive Fibonacci numbers
  Integer f1(1), f2(1);
  for (size_t k = 1; k < cf.q.size(); ++k) {
    CHECK(cf.q[k] == f2);
    Integer t = f1 + f2;
    f1 = f2;
    f2 = t;
  }
}

TEST_CASE("determinant identity and convergent quality") {
  auto check_identity = [](const ContinuedFractionExpansion& cf) {
    for (size_t k = 1; k < cf.p.size(); ++k) {
      Integer det = cf.p[k] * cf.q[k - 1] - cf.p[k - 1] * cf.q[k];
      CHECK((det == 1 || det == -1));
      if (k >= 2) CHECK(cf.q[k] > cf.q[k - 1]);
    }
  };
  check_identity(continued_fraction(Rational(355, 113), 20));
  check_identity(continued_fraction(golden_interval(), 25));
  check_identity(continued_fraction(from_quotients(liouville_quotients()), 20));

  // |q_k xi - p_k| < 1 / q_{k+1}, certified with intervals
  Interval xi = golden_interval();
  auto cf = continued_fraction(xi, 25);
  for (size_t k = 0; k + 1 < cf.p.size(); ++k) {
    Interval r = xi.mul(Interval::from_rational(Rational(cf.q[k]), 256))
                     .sub(Interval::from_rational(Rational(cf.p[k]), 256))
                     .abs();
    CHECK(r.compare(Rational(Integer(1), cf.q[k + 1])) < 0);
  }
}

TEST_CASE("shallow precision flags exhaustion instead of guessing") {
  auto cf = continued_fraction(golden_interval(24), 40);
  CHECK(cf.precision_exhausted);
  CHECK(cf.quotients.size() < 40);
  for (const auto& a : cf.quotients) CHECK(a <= 1);
}

TEST_CASE("irrationality exponent of the golden ratio") {
  auto cf = continued_fraction(golden_interval(512), 60);
  auto mu = irrationality_exponent_estimate(cf);
  CHECK(std::abs(mu.mu_hat - 2.0) < 0.05);
  CHECK_FALSE(mu.infinite);
}

TEST_CASE("irrationality exponent of an e-like expansion") {
  std::vector<Integer> a{2};
  for (int k = 1; static_cast<int>(a.size()) < 91; ++k) {
    a.push_back(Integer(1));
    a.push_back(Integer(2 * k));
    a.push_back(Integer(1));
  }
  a.resize(91);
  auto cf = continued_fraction(from_quotients(a), 120);
  auto mu = irrationality_exponent_estimate(cf);
  CHECK(std::abs(mu.mu_hat - 2.0) < 0.1);
}

TEST_CASE("Liouville-style quotients blow up the exponent") {
  auto cf = continued_fraction(from_quotients(liouville_quotients()), 40);
  auto mu = irrationality_exponent_estimate(cf);
  CHECK(mu.infinite);
  CHECK(mu.mu_hat > 10.0);
  CHECK_THROWS(irrationality_exponent_estimate(
      continued_fraction(Rational(355, 113), 20)));
}

TEST_CASE("eqdimun: golden ratio below the threshold") {
  auto rep = eqdimun_check(golden_interval(), Rational(9, 10),
                           {Integer(100), Integer(1000), Integer(10000)});
  CHECK(rep.holds);
  for (const auto& r : rep.per_q) CHECK(r.found);
  CHECK(rep.prediction == "holds");
  CHECK(rep.agrees);
  CHECK(std::abs(rep.mu_hat - 2.0) < 0.1);
}

TEST_CASE("eqdimun: golden ratio above the threshold") {
  auto rep = eqdimun_check(golden_interval(), Rational(2),
                           {Integer(100), Integer(1000), Integer(10000)});
  CHECK_FALSE(rep.holds);
  CHECK(rep.prediction == "fails");
  CHECK(rep.agrees);
  std::string csv = rep.to_csv();
  CHECK(csv.find("Q,found,best_residual,verdict") != std::string::npos);
  CHECK(csv.find("false") != std::string::npos);
}

TEST_CASE("eqdimun: Liouville numbers fail at tau = 1") {
  Interval xi =
      Interval::from_rational(from_quotients(liouville_quotients()), 8192);
  auto rep = eqdimun_check(xi, Rational(1), {Integer(100), Integer(1000)});
  CHECK_FALSE(rep.holds);
  CHECK(rep.prediction == "fails");
  CHECK(rep.agrees);
  CHECK(rep.mu_hat > 10.0);
}

TEST_CASE("collinearity probe around Fibonacci heights") {
  std::vector<Integer> grid;
  for (long Q = 8; Q <= 13; ++Q) grid.push_back(Integer(Q));
  auto rep = collinearity_probe(golden_interval(), grid, Rational(1));
  bool saw_rank1 = false, saw_rank2 = false;
  for (const auto& r : rep.per_q) {
    if (r.rank == 1) saw_rank1 = true;
    if (r.rank == 2) saw_rank2 = true;
    if (r.Q == 12) {
      CHECK(r.rank == 1);
      CHECK(r.count == 1);
    }
  }
  CHECK(saw_rank1);
  CHECK(saw_rank2);
  std::string csv = rep.to_csv();
  CHECK(csv.find("Q,count,rank") != std::string::npos);
}

TEST_CASE("huge constants trivially give rank 2, rationals are rejected") {
  auto rep = collinearity_probe(golden_interval(), {Integer(10)}, Rational(10));
  CHECK(rep.per_q[0].rank == 2);
  CHECK_THROWS(collinearity_probe(Rational(2, 3), {Integer(10)}, Rational(1)));
}

TEST_CASE("schedule equivalence grids") {
  auto g2 = schedule_equivalence(Rational(2), 5);
  CHECK(g2 == std::vector<Integer>{Integer(2), Integer(4), Integer(8),
                                   Integer(16), Integer(32)});
  auto g15 = schedule_equivalence(Rational(3, 2), 4);
  CHECK(g15 == std::vector<Integer>{Integer(2), Integer(3), Integer(5),
                                    Integer(8)});
  auto g20 = schedule_equivalence(Rational(2), 21);
  double ratio = std::log(g20[20].get_d()) / std::log(g20[19].get_d());
  CHECK(ratio == doctest::Approx(21.0 / 20.0));
  CHECK_THROWS(schedule_equivalence(Rational(1), 5));
}
