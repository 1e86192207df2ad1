#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dioph/core.hpp"
#include "dioph/minima.hpp"
#include "dioph/series.hpp"

namespace dioph {

// Zero-one-law experiment: sample dyadic tuples, ask for each height H in
// the grid whether a solution with h_min <= |q| <= H exists, and compare the
// empirical fraction against the series prediction. A finite grid observes
// only ">= 1 solution in [h_min, H]" -- a surrogate for the limsup event.
struct ZeroOneConfig {
  int sample_count = 100;          // N >= 50
  std::vector<long> heights;       // increasing height grid
  long h_min = 2;                  // suppress the trivial height-1 solutions
  std::uint64_t seed = 0;
  unsigned long long budget = 1'000'000'000ULL;  // per-sample point tests
  int threads = 1;
  bool hard_zero = false;  // psi == 0 control: no solutions by definition
};

struct ZeroOneReport {
  SeriesVerdict verdict;
  std::vector<long> heights;
  std::vector<long> hit_counts;    // per height, out of sample_count
  std::vector<double> fractions;   // hit_counts / N, non-decreasing in H
  int sample_count = 0;
  long h_min = 2;
  std::uint64_t seed = 0;
  unsigned long long undecidable = 0;
  double runtime_seconds = 0.0;  // excluded from serialization (determinism)

  std::string to_json() const;
  std::string to_csv() const;
};

ZeroOneReport run_zero_one(const ApproximationSystem& sys,
                           const ZeroOneConfig& cfg);

// Optimality experiment: sample tuples (lifted into F when F is a proper
// subspace), build the theorem's witnesses at every grid height, and record
// how often both sides of the bound hold at the configured constant.
struct OptimalityConfig {
  int m = 0;  // ambient dimension; must match the subspace when one is given
  int sample_count = 100;
  std::vector<Integer> q_grid;
  std::vector<Rational> tau;   // n entries, sum <= dim F - n
  std::vector<Rational> beta;  // n entries, sum == (1 + epsilon)(dim F - 1)
  Rational epsilon = Rational(1, 10);
  double constant = 64.0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::optional<RationalSubspace> subspace;  // F; full space when absent
  MinimaOptions minima;
};

struct OptimalityPerQ {
  Integer Q;
  long ok = 0;       // unflagged samples with both bounds satisfied at C
  long flagged = 0;  // rational collapse, excluded from the fraction
  double fraction = 0.0;
};

struct OptimalityReport {
  std::vector<OptimalityPerQ> per_q;
  // per sample: the smallest constant that would clear every bound and Q
  std::vector<double> empirical_constants;
  int witness_count = 0;  // m ambient witnesses per sample per Q
  std::uint64_t seed = 0;
  double runtime_seconds = 0.0;

  std::string to_json() const;
  std::string to_csv() const;
};

OptimalityReport run_optimality(const OptimalityConfig& cfg);

}  // namespace dioph
