#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dioph/errors.hpp"
#include "dioph/experiments.hpp"

using namespace dioph;

namespace {

ApproximationSystem power_system(int m, int n, long a) {
  std::vector<ErrorFunction> w(
      n, ErrorFunction(Rational(1), Rational(a), Rational(0)));
  return ApproximationSystem(m, n, w);
}

}  // namespace

TEST_CASE("near-constant weight saturates at the first height") {
  // psi(r) = (log r)^-1 >= 1/log 3 > 1/2 everywhere relevant: q = e_1 works
  // for every tuple, so with h_min = 1 the fraction is 1 immediately.
  std::vector<ErrorFunction> w{ErrorFunction(Rational(1), Rational(0), Rational(1))};
  ApproximationSystem sys(3, 1, w);
  ZeroOneConfig cfg;
  cfg.sample_count = 50;
  cfg.heights = {1, 5};
  cfg.h_min = 1;
  cfg.seed = 11;
  auto rep = run_zero_one(sys, cfg);
  CHECK(rep.fractions[0] == 1.0);
  CHECK(rep.fractions[1] == 1.0);
  CHECK(rep.verdict.predicted_measure == 1);
}

TEST_CASE("hard-zero control never finds a solution") {
  ZeroOneConfig cfg;
  cfg.sample_count = 50;
  cfg.heights = {10, 100};
  cfg.seed = 3;
  cfg.hard_zero = true;
  auto rep = run_zero_one(power_system(2, 1, 1), cfg);
  for (double f : rep.fractions) CHECK(f == 0.0);
  for (long h : rep.hit_counts) CHECK(h == 0);
}

TEST_CASE("convergent m=2 system stays rare and shrinks with h_min") {
  // The finite-height surrogate observes the union over [h_min, H]; from
  // h_min = 2 that union has expectation ~ sum 8/r^2 ~ 4 and the fraction
  // saturates at 1 even for a convergent series. h_min = 50 (pilot-fixed)
  // pushes the expected count below 0.2 so the measure-zero prediction is
  // visible.
  ZeroOneConfig cfg;
  cfg.sample_count = 50;
  cfg.heights = {500, 2000};
  cfg.h_min = 50;
  cfg.seed = 42;
  auto rep = run_zero_one(power_system(2, 1, 2), cfg);
  CHECK(rep.verdict.predicted_measure == 0);
  CHECK(rep.fractions.back() < 0.2);
  ZeroOneConfig strict = cfg;
  strict.h_min = 100;
  auto rep100 = run_zero_one(power_system(2, 1, 2), strict);
  CHECK(rep100.fractions.back() <= rep.fractions.back());
}

TEST_CASE("fractions are non-decreasing in the height grid") {
  ZeroOneConfig cfg;
  cfg.sample_count = 60;
  cfg.heights = {5, 20, 60, 150};
  cfg.seed = 9;
  auto rep = run_zero_one(power_system(3, 1, 2), cfg);
  for (size_t k = 1; k < rep.fractions.size(); ++k)
    CHECK(rep.fractions[k] >= rep.fractions[k - 1]);
}

TEST_CASE("divergent dominates convergent at the top height") {
  ZeroOneConfig cfg;
  cfg.sample_count = 50;
  cfg.heights = {150};
  cfg.h_min = 30;  // pilot-fixed: from h_min = 2 both unions saturate at 1
  cfg.seed = 5;
  auto div = run_zero_one(power_system(3, 1, 2), cfg);   // sum 1/r
  auto conv = run_zero_one(power_system(3, 1, 3), cfg);  // sum 1/r^2
  CHECK(div.verdict.predicted_measure == 1);
  CHECK(conv.verdict.predicted_measure == 0);
  CHECK(div.fractions.back() > conv.fractions.back());
}

TEST_CASE("zero-one reports are deterministic and thread-invariant") {
  ZeroOneConfig cfg;
  cfg.sample_count = 50;
  cfg.heights = {50, 200};
  cfg.seed = 77;
  auto a = run_zero_one(power_system(2, 1, 2), cfg);
  auto b = run_zero_one(power_system(2, 1, 2), cfg);
  CHECK(a.to_json() == b.to_json());
  ZeroOneConfig par = cfg;
  par.threads = 4;
  auto c = run_zero_one(power_system(2, 1, 2), par);
  CHECK(a.to_json() == c.to_json());
  CHECK(a.to_csv() == c.to_csv());
}

TEST_CASE("zero-one validation and budget") {
  ZeroOneConfig cfg;
  cfg.sample_count = 10;
  cfg.heights = {100};
  CHECK_THROWS(run_zero_one(power_system(2, 1, 2), cfg));
  cfg.sample_count = 50;
  cfg.heights = {};
  CHECK_THROWS(run_zero_one(power_system(2, 1, 2), cfg));
  cfg.heights = {100, 50};
  CHECK_THROWS(run_zero_one(power_system(2, 1, 2), cfg));
  cfg.heights = {2000};
  cfg.h_min = 500;  // most samples have no solution: the scan runs long
  cfg.budget = 10;
  CHECK_THROWS_AS(run_zero_one(power_system(2, 1, 2), cfg), BudgetExceeded);
  cfg.h_min = 2;
  // the (2,1) monotonicity proviso propagates from classification
  std::vector<ErrorFunction> nm{
      ErrorFunction(Rational(1), Rational(2), Rational(-3))};
  ApproximationSystem bad(2, 1, nm);
  cfg.budget = 1'000'000'000ULL;
  CHECK_THROWS_AS(run_zero_one(bad, cfg), HypothesisViolation);
}

TEST_CASE("full-space optimality run") {
  OptimalityConfig cfg;
  cfg.m = 2;
  cfg.sample_count = 10;
  cfg.q_grid = {Integer(100), Integer(1000)};
  cfg.tau = {Rational(1)};
  cfg.beta = {Rational(11, 10)};
  cfg.seed = 7;
  auto rep = run_optimality(cfg);
  REQUIRE(rep.per_q.size() == 2);
  CHECK(rep.witness_count == 2);
  for (const auto& r : rep.per_q) {
    CHECK(r.flagged == 0);
    CHECK(r.fraction >= 0.0);
    CHECK(r.fraction <= 1.0);
  }
  for (double c : rep.empirical_constants) CHECK(c >= 1.0);
  CHECK(rep.empirical_constants.size() == 10);
}

TEST_CASE("subspace optimality lifts witnesses exactly") {
  OptimalityConfig cfg;
  cfg.m = 3;
  cfg.subspace = RationalSubspace(3, {{Integer(1), Integer(1), Integer(0)},
                                      {Integer(0), Integer(1), Integer(1)}});
  cfg.sample_count = 5;
  cfg.q_grid = {Integer(100)};
  cfg.tau = {Rational(1)};
  cfg.beta = {Rational(11, 10)};
  cfg.seed = 21;
  // the run itself asserts the exact lift identity per witness
  auto rep = run_optimality(cfg);
  CHECK(rep.witness_count == 3);
  CHECK(rep.per_q[0].flagged == 0);
}

TEST_CASE("optimality reports are deterministic and thread-invariant") {
  OptimalityConfig cfg;
  cfg.m = 2;
  cfg.sample_count = 8;
  cfg.q_grid = {Integer(100)};
  cfg.tau = {Rational(1)};
  cfg.beta = {Rational(11, 10)};
  cfg.seed = 13;
  auto a = run_optimality(cfg);
  OptimalityConfig par = cfg;
  par.threads = 3;
  auto b = run_optimality(par);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_csv() == b.to_csv());
}

TEST_CASE("optimality hypothesis rejection") {
  OptimalityConfig cfg;
  cfg.m = 2;
  cfg.sample_count = 5;
  cfg.q_grid = {Integer(100)};
  cfg.tau = {Rational(1)};
  cfg.beta = {Rational(2)};  // wrong sum
  CHECK_THROWS_AS(run_optimality(cfg), HypothesisViolation);
  cfg.beta = {Rational(11, 10)};
  cfg.tau = {Rational(2)};  // sum tau > dim F - n
  CHECK_THROWS_AS(run_optimality(cfg), HypothesisViolation);
  cfg.tau = {Rational(1)};
  cfg.q_grid = {};
  CHECK_THROWS(run_optimality(cfg));
}
