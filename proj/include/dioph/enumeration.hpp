#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dioph/core.hpp"
#include "dioph/errors.hpp"
#include "dioph/interval.hpp"

namespace dioph {

enum class Ternary { False, True, Undecidable };

struct SolutionRecord {
  IntegerVector q;
  Integer height;
  std::vector<Rational> residuals;   // |q . e_i|, exact
  std::vector<Interval> thresholds;  // psi_i(|q|)
};

// Strict membership test for the system |q . e_i| < psi_i(|q|). Comparisons
// run against a 192-bit interval enclosure of each threshold; a straddle
// escalates once to 1024 bits and is then reported as Undecidable, never
// silently resolved.
Ternary is_solution(const IntegerVector& q, const PointTuple& pts,
                    const ApproximationSystem& sys, mpfr_prec_t prec = 192);

// Per-height threshold cache shared across samples of one experiment.
class ShellThresholds {
 public:
  ShellThresholds(const ApproximationSystem& sys, long h_max,
                  mpfr_prec_t prec = 192);

  const ApproximationSystem& system() const { return sys_; }
  long h_max() const { return h_max_; }
  const Interval& threshold(int i, long r) const;
  const std::optional<Rational>& exact(int i, long r) const;
  // Rational upper bound on psi_i(r), used to bracket candidate coordinates.
  const Rational& upper(int i, long r) const;

 private:
  ApproximationSystem sys_;
  long h_max_;
  std::vector<std::vector<Interval>> thresholds_;      // [i][r-1]
  std::vector<std::vector<std::optional<Rational>>> exact_;
  std::vector<std::vector<Rational>> upper_;
};

struct EnumerationOptions {
  unsigned long long budget = 1'000'000'000ULL;  // point-tests
  bool dedup_sign = true;
};

struct EnumerationResult {
  std::vector<SolutionRecord> solutions;  // sorted by (height, lex q)
  unsigned long long tested = 0;
  unsigned long long undecidable = 0;
};

// All solutions with h_min <= |q| <= h_max, shell by shell.
EnumerationResult enumerate_solutions(const PointTuple& pts,
                                      const ApproximationSystem& sys,
                                      long h_min, long h_max,
                                      const EnumerationOptions& opts = {});

// Existence query: smallest shell in [h_min, h_max] holding a solution.
struct ExistenceResult {
  std::optional<long> first_height;
  unsigned long long tested = 0;
  unsigned long long undecidable = 0;
};
ExistenceResult first_solution_height(const PointTuple& pts,
                                      const ShellThresholds& cache, long h_min,
                                      long h_max,
                                      unsigned long long budget =
                                          1'000'000'000ULL);

// Exact number of q in Z^m with |q|_inf = r, i.e. (2r+1)^m - (2r-1)^m.
// Also checks the shell count is comparable to r^(m-1) with explicit
// constants 2 <= count / r^(m-1) <= 2m * 3^(m-1).
Integer count_per_shell(int m, const Integer& r);

// Exact Lebesgue measure of {x in [-1/2,1/2]^m : |q . x| < delta}.
Rational slab_volume(const IntegerVector& q, const Rational& delta);

struct NeighborhoodMeasure {
  Rational measure;     // prod_i slab_volume(q, delta_i)
  Rational comparator;  // prod_i delta_i * |q|^(-n)
  Rational ratio;       // measure / comparator
  Rational window_low;
  Rational window_high;
  bool applicable;  // all delta_i <= |q| / 4
  bool in_window;
};

// Exact measure of B(q, psi) together with the comparison ratio against the
// product comparator; degenerate wide slabs are flagged, never asserted.
NeighborhoodMeasure neighborhood_measure(const IntegerVector& q,
                                         const std::vector<Rational>& deltas);

}  // namespace dioph
