#pragma once

#include <string>
#include <vector>

#include "dioph/core.hpp"
#include "dioph/interval.hpp"

namespace dioph {

enum class CriterionMode { Siegel, Nesterenko };

// Per-Q record backing a criterion application: witness vectors found at
// height Q and the best residual |q . e_i| observed for each form.
struct EvidenceRecord {
  Integer Q;
  std::vector<IntegerVector> witnesses;
  std::vector<Rational> best_residual;  // one per form
};

struct CriterionInput {
  CriterionMode mode = CriterionMode::Siegel;
  int n = 0;
  std::vector<Rational> tau_hat;
  std::vector<EvidenceRecord> evidence;

  // Throws when the mode's structural hypothesis fails: Nesterenko needs
  // pairwise distinct tau, Siegel needs m independent vectors per record.
  void validate() const;
};

// n + sum tau, and its ceiling (a dimension is an integer).
struct DimensionBound {
  Rational value;
  Integer ceiling;
};

DimensionBound dimension_lower_bound(int n, const std::vector<Rational>& tau);

struct ExponentEstimate {
  double tau_hat = 0.0;
  double band = 0.0;  // 2 standard errors of the fitted slope
};

// Least-squares slope of -log(residual) against log Q. Needs >= 5 heights
// spanning >= 2 decades; zero residuals (rational collapse) are rejected.
ExponentEstimate estimate_exponents(
    const std::vector<std::pair<Integer, Rational>>& data);

struct ContinuedFractionExpansion {
  std::vector<Integer> quotients;  // a_0; a_1, ..., a_K
  std::vector<Integer> p, q;       // convergents p_k / q_k
  bool terminated = false;         // rational input exhausted
  bool precision_exhausted = false;

  std::string to_json() const;
};

// Euclid on an exact rational (finite expansion when K allows).
ContinuedFractionExpansion continued_fraction(const Rational& xi, int K);
// Interval-backed real: quotients emitted only while both endpoints agree on
// the floor; stops early with precision_exhausted otherwise.
ContinuedFractionExpansion continued_fraction(const Interval& xi, int K);

struct MuEstimate {
  double mu_hat = 0.0;
  std::vector<double> sequence;  // log q_{k+1} / log q_k, divergence visible
  bool infinite = false;         // flagged above threshold 10
};

// mu_hat = 1 + max over the last half of log q_{k+1} / log q_k.
MuEstimate irrationality_exponent_estimate(const ContinuedFractionExpansion& cf);

struct EqdimunPerQ {
  Integer Q;
  bool found = false;
  double best_residual = 0.0;  // smallest residual seen during the scan
};

struct EqdimunReport {
  std::vector<EqdimunPerQ> per_q;
  bool holds = false;            // found at every grid height
  double mu_hat = 0.0;
  double threshold = 0.0;        // 1 / (mu_hat - 1)
  std::string prediction;        // "holds" | "fails" | "boundary -- not settled"
  bool agrees = false;

  std::string to_csv() const;
};

// For each Q: can |q_1 xi - q_2| land in [Q^{-tau-delta}, Q^{-tau+delta}]
// with |q| <= Q? Aggregate verdict compared against tau vs 1/(mu-1).
EqdimunReport eqdimun_check(const Interval& xi, const Rational& tau,
                            const std::vector<Integer>& q_grid,
                            const Rational& delta = Rational(1, 5));

struct CollinearityPerQ {
  Integer Q;
  long count = 0;  // solutions up to sign
  int rank = 0;
};

struct CollinearityReport {
  std::vector<CollinearityPerQ> per_q;

  std::string to_csv() const;
};

// All q with |q| <= C Q and |q_1 xi - q_2| <= C / Q; rank 1 means collinear.
CollinearityReport collinearity_probe(const Interval& xi,
                                      const std::vector<Integer>& q_grid,
                                      const Rational& C);
// Rational xi admits residual 0: rejected.
CollinearityReport collinearity_probe(const Rational& xi,
                                      const std::vector<Integer>& q_grid,
                                      const Rational& C);

// Q_k = round(beta^k), deduplicated, until `count` distinct heights exist.
std::vector<Integer> schedule_equivalence(const Rational& beta, int count);

}  // namespace dioph
