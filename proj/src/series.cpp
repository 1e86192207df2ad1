#include "dioph/series.hpp"

#include <nlohmann/json.hpp>

#include "dioph/errors.hpp"

namespace dioph {

std::string SeriesVerdict::to_json() const {
  nlohmann::ordered_json j;
  j["classification"] =
      classification == Classification::Convergent ? "Convergent" : "Divergent";
  j["predicted_measure"] = predicted_measure;
  j["exponent_sum"] = rational_string(exponent_sum);
  j["log_sum"] = rational_string(log_sum);
  j["critical"] = critical;
  return j.dump();
}

Interval partial_sum(const ApproximationSystem& sys, long N) {
  if (N < 1) throw std::invalid_argument("partial_sum: N must be >= 1");
  const mpfr_prec_t prec = 128;
  Interval acc(prec);
  long power = sys.m() - sys.n() - 1;
  for (long r = 1; r <= N; ++r) {
    Interval term = Interval::from_long(1, prec);
    for (const auto& w : sys.weights()) term = term.mul(w.eval(Integer(r), prec));
    if (power != 0)
      term = term.mul(Interval::from_long(r, prec).pow(Rational(power)));
    acc = acc.add(term);
  }
  return acc;
}

SeriesVerdict classify(const ApproximationSystem& sys) {
  if (sys.m() == 2 && sys.n() == 1 && !sys.all_monotone())
    throw HypothesisViolation(
        "classify: the (m,n) = (2,1) zero-one law requires a monotone error "
        "function; refusing non-monotone weights");
  SeriesVerdict v;
  v.exponent_sum = 0;
  v.log_sum = 0;
  for (const auto& w : sys.weights()) {
    v.exponent_sum += w.power();
    v.log_sum += w.log_power();
  }
  Rational gap(sys.m() - sys.n());
  v.critical = (v.exponent_sum == gap);
  // Bertrand criterion on C r^(m-n-1-sum a) (log r)^(-sum b); sum b == 1
  // exactly is divergent.
  bool convergent =
      v.exponent_sum > gap || (v.critical && v.log_sum > 1);
  v.classification =
      convergent ? Classification::Convergent : Classification::Divergent;
  v.predicted_measure = convergent ? 0 : 1;
  return v;
}

}  // namespace dioph
