#pragma once

#include <string>

#include "dioph/core.hpp"
#include "dioph/interval.hpp"

namespace dioph {

enum class Classification { Convergent, Divergent };

struct SeriesVerdict {
  Classification classification;
  int predicted_measure;  // 0 iff Convergent
  Rational exponent_sum;  // sum of the a_i
  Rational log_sum;       // sum of the b_i
  bool critical;          // exponent_sum == m - n exactly

  std::string to_json() const;
};

// Partial sum of sum_r psi_1(r)...psi_n(r) r^(m-n-1), at 128-bit precision.
Interval partial_sum(const ApproximationSystem& sys, long N);

// Closed-form convergence classification on the power-log family:
// convergent iff sum a_i > m-n, or (sum a_i == m-n and sum b_i > 1).
// (2,1) systems require monotone weights, per the zero-one law's proviso.
SeriesVerdict classify(const ApproximationSystem& sys);

}  // namespace dioph
