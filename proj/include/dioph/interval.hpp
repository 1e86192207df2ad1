#pragma once

#include <mpfr.h>

#include <string>

#include "dioph/rational.hpp"

namespace dioph {

// Closed interval [lo, hi] with outward-rounded MPFR endpoints. Every
// arithmetic operation rounds the lower endpoint down and the upper endpoint
// up, so the true real value is always enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 192);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  static Interval from_rational(const Rational& q, mpfr_prec_t prec = 192);
  static Interval from_long(long v, mpfr_prec_t prec = 192);
  static Interval from_bounds(const Rational& lo, const Rational& hi,
                              mpfr_prec_t prec = 192);

  mpfr_prec_t precision() const { return prec_; }

  Interval add(const Interval& o) const;
  Interval sub(const Interval& o) const;
  Interval mul(const Interval& o) const;
  Interval div(const Interval& o) const;  // o must not contain 0
  Interval neg() const;
  Interval abs() const;
  Interval log() const;   // requires lo > 0
  Interval exp() const;
  Interval sqrt() const;  // requires lo >= 0

  // x^a for positive x and exact rational exponent a, via exp(a log x).
  Interval pow(const Rational& a) const;

  // -1 if hi < q, +1 if lo > q, 0 if q is inside (straddle).
  int compare(const Rational& q) const;
  // -1 if this.hi < o.lo, +1 if this.lo > o.hi, 0 on overlap.
  int compare(const Interval& o) const;

  bool contains_zero() const;
  bool is_positive() const;  // lo > 0

  Rational lower_rational() const;
  Rational upper_rational() const;
  double lower_double() const;
  double upper_double() const;
  double midpoint() const;
  double width() const;

  std::string str(int digits = 12) const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;

  friend void swap(Interval& a, Interval& b) noexcept;
};

void swap(Interval& a, Interval& b) noexcept;

}  // namespace dioph
