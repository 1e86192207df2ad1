#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dioph/core.hpp"
#include "dioph/interval.hpp"

namespace dioph {

// C = {q in R^m : |q| <= Q, |q . e_i| <= eps_i} -- symmetric, compact, convex.
// Half-widths are either exact rationals (hand-specified bodies) or certified
// interval enclosures of Q^{-tau_i} (log Q)^{beta_i}.
class ConvexBody {
 public:
  static ConvexBody from_half_widths(PointTuple pts, Integer Q,
                                     std::vector<Rational> eps);
  static ConvexBody from_exponents(PointTuple pts, Integer Q,
                                   std::vector<Rational> tau,
                                   std::vector<Rational> beta,
                                   mpfr_prec_t prec = 256);

  int m() const { return pts_.m(); }
  int n() const { return pts_.n(); }
  const PointTuple& points() const { return pts_; }
  const Integer& Q() const { return Q_; }
  bool exact() const { return exact_; }
  const Interval& eps(int i) const { return eps_[i]; }
  const Rational& eps_exact(int i) const { return eps_exact_[i]; }
  mpfr_prec_t precision() const { return prec_; }

 private:
  ConvexBody(PointTuple pts, Integer Q);

  PointTuple pts_;
  Integer Q_;
  bool exact_ = false;
  std::vector<Rational> eps_exact_;  // meaningful only when exact_
  std::vector<Interval> eps_;        // always a valid enclosure
  mpfr_prec_t prec_ = 256;
};

// gauge(q) = max(|q|/Q, max_i |q . e_i| / eps_i); exact is set for exact
// bodies, and the interval always encloses the true value.
struct GaugeValue {
  Interval value;
  std::optional<Rational> exact;

  GaugeValue() : value(Interval::from_long(0)) {}
};

GaugeValue gauge(const IntegerVector& q, const ConvexBody& body);

// Remark-style rescaling: returns (tau_i / eta, eta) with eta = sum tau / (d-n)
// so that the scaled exponents sum to d - n; caller substitutes Q^eta for Q.
std::pair<std::vector<Rational>, Rational> normalize_exponents(
    const std::vector<Rational>& tau, int d, int n);

struct VolumeEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  double parallelepiped_proxy = 0.0;
};

// Monte Carlo volume with reported standard error. Thin bodies are sampled
// inside the form-constraint slab (importance sampling); wide bodies are
// sampled uniformly in the cube. Both estimators are unbiased.
VolumeEstimate body_volume(const ConvexBody& body, long samples,
                           std::uint64_t seed);

struct MinimaOptions {
  unsigned long long budget = 100000000;  // enumeration node limit
  long volume_samples = 20000;
  std::uint64_t volume_seed = 1;
};

struct SuccessiveMinimaResult {
  std::vector<GaugeValue> lambdas;       // lambda_1 <= ... <= lambda_m
  std::vector<IntegerVector> witnesses;  // independent, j-th attains lambda_j
  VolumeEstimate volume;
  double minkowski_product = 0.0;  // lambda_1 ... lambda_m * vol estimate

  std::string to_json() const;
};

// Exact successive minima of the gauge: LLL (delta = 0.99, floating point) on
// the embedding q -> (q/Q, q.e_i/eps_i), then complete Fincke-Pohst
// enumeration of G(q) <= (m+n) Lambda^2 where gauge >= sqrt(G/(m+n)).
SuccessiveMinimaResult successive_minima(const ConvexBody& body,
                                         const MinimaOptions& opts = {});

struct WitnessBoundReport {
  std::vector<IntegerVector> witnesses;  // m independent vectors
  Rational eta;                          // normalization exponent
  Integer q_effective;                   // height after Q -> Q^eta
  std::vector<double> height_ratio;      // |q^(j)| / Q_eff
  // residual_over_upper[i][j] = |q^(j) . e_i| / (Q^-tau_i (log Q)^beta_i);
  // residual_over_lower divides by the (log Q)^{-(1+epsilon) m} smaller bound.
  std::vector<std::vector<double>> residual_over_upper;
  std::vector<std::vector<double>> residual_over_lower;
  bool upper_flag = false;       // some residual above constant * upper bound
  bool lower_flag = false;       // some residual below lower bound / constant
  bool rational_collapse = false;  // a residual vanished exactly
  double constant = 0.0;

  std::string to_json() const;
};

// Theorem-3 pipeline on F = R^m: normalize exponents, build the body at
// Q_eff = Q^eta, compute minima, and report each residual against the upper
// and lower comparators at the given constant. Flags record violations; they
// are not assertions (the theorem's constants are tuple-dependent).
WitnessBoundReport optimality_witnesses(const PointTuple& pts,
                                        const std::vector<Rational>& tau,
                                        const std::vector<Rational>& beta,
                                        const Rational& epsilon,
                                        const Integer& Q,
                                        double constant = 64.0,
                                        const MinimaOptions& opts = {});

}  // namespace dioph
