#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dioph/interval.hpp"
#include "dioph/rational.hpp"

namespace dioph {

// One weight of the parametric family psi(r) = c * r^(-a) * log(max(r,3))^(-b).
// The log guard keeps the log factor >= log 3 > 1 for every r >= 1.
class ErrorFunction {
 public:
  ErrorFunction(Rational scale, Rational power, Rational log_power);

  const Rational& scale() const { return scale_; }
  const Rational& power() const { return power_; }
  const Rational& log_power() const { return log_power_; }

  // Sufficient monotonicity condition within the family; required by the
  // zero-one law when (m, n) = (2, 1).
  bool monotone() const { return power_ > 0 && log_power_ >= 0; }

  Interval eval(const Integer& r, mpfr_prec_t prec = 192) const;

  // Exact value when the log factor is trivial (b == 0) and a is an integer.
  std::optional<Rational> eval_exact(const Integer& r) const;

  // Serialized as "c*r^-a*logr^-b" with exact rational fields.
  std::string str() const;
  static ErrorFunction parse(const std::string& s);

 private:
  Rational scale_;      // c > 0
  Rational power_;      // a >= 0
  Rational log_power_;  // b; a > 0 or (a == 0 and b > 0)
};

class ApproximationSystem {
 public:
  ApproximationSystem(int m, int n, std::vector<ErrorFunction> weights);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<ErrorFunction>& weights() const { return weights_; }
  bool all_monotone() const;

 private:
  int m_;
  int n_;
  std::vector<ErrorFunction> weights_;
};

// The targets (e_1, ..., e_n), each an exact rational vector in Q^m.
class PointTuple {
 public:
  PointTuple(int m, std::vector<RationalVector> points);

  int m() const { return m_; }
  int n() const { return static_cast<int>(points_.size()); }
  const RationalVector& point(int i) const { return points_[i]; }
  const std::vector<RationalVector>& points() const { return points_; }

  // All coordinates in [-1/2, 1/2] (required by zero-one experiments).
  bool in_unit_box() const;

  std::string to_json() const;
  static PointTuple from_json(const std::string& text);

 private:
  int m_;
  std::vector<RationalVector> points_;
};

struct IntegerVector {
  std::vector<Integer> v;

  IntegerVector() = default;
  explicit IntegerVector(std::vector<Integer> c) : v(std::move(c)) {}

  int dim() const { return static_cast<int>(v.size()); }
  bool is_zero() const;
  Integer sup_norm() const;
  IntegerVector negated() const;

  bool operator==(const IntegerVector& o) const { return v == o.v; }
};

// Deterministic ordering used for tie-breaking: by sup norm, then lex.
bool lex_less(const IntegerVector& a, const IntegerVector& b);

// Exact rational scalar product; throws on dimension mismatch.
Rational dot(const IntegerVector& q, const RationalVector& e);

// Subspace F of R^m defined over Q, given by an integer basis (columns).
class RationalSubspace {
 public:
  RationalSubspace(int m, std::vector<std::vector<Integer>> basis_columns);

  int ambient_dim() const { return m_; }
  int dim() const { return static_cast<int>(columns_.size()); }
  const std::vector<Integer>& column(int j) const { return columns_[j]; }
  const std::vector<std::vector<Integer>>& columns() const { return columns_; }

 private:
  int m_;
  std::vector<std::vector<Integer>> columns_;  // each of size m_, rank = d
};

}  // namespace dioph
