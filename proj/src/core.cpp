#include "dioph/core.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "dioph/linalg.hpp"

namespace dioph {

Rational parse_rational(const std::string& s) {
  std::string t = s;
  // allow plain decimals: "-0.25" -> -25/100
  auto dotpos = t.find('.');
  if (dotpos != std::string::npos && t.find('/') == std::string::npos) {
    std::string digits = t.substr(0, dotpos) + t.substr(dotpos + 1);
    size_t frac_len = t.size() - dotpos - 1;
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(t, 10) != 0)
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return r;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

std::string rational_decimal(const Rational& q, int significant_digits) {
  if (q == 0) return "0";
  mpf_class f(q, static_cast<unsigned>(significant_digits) * 4 + 32);
  mp_exp_t e;
  std::string m = f.get_str(e, 10, significant_digits);
  bool neg = !m.empty() && m[0] == '-';
  std::string digits = neg ? m.substr(1) : m;
  std::ostringstream os;
  if (neg) os << '-';
  os << "0." << digits << "e" << e;
  return os.str();
}

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), k);
  Rational r = inv ? Rational(den, num) : Rational(num, den);
  if (r.get_den() == 0) throw std::domain_error("rational_pow: division by zero");
  r.canonicalize();
  return r;
}

ErrorFunction::ErrorFunction(Rational scale, Rational power, Rational log_power)
    : scale_(std::move(scale)), power_(std::move(power)),
      log_power_(std::move(log_power)) {
  if (scale_ <= 0) throw std::invalid_argument("ErrorFunction: scale must be > 0");
  if (power_ < 0) throw std::invalid_argument("ErrorFunction: power must be >= 0");
  if (!(power_ > 0 || log_power_ > 0))
    throw std::invalid_argument(
        "ErrorFunction: must tend to zero (a > 0, or a = 0 and b > 0)");
}

Interval ErrorFunction::eval(const Integer& r, mpfr_prec_t prec) const {
  if (r < 1) throw std::invalid_argument("ErrorFunction::eval: r must be >= 1");
  if (auto exact = eval_exact(r)) return Interval::from_rational(*exact, prec);
  Interval value = Interval::from_rational(scale_, prec);
  if (power_ != 0) {
    Interval base = Interval::from_rational(Rational(r), prec);
    value = value.mul(base.pow(-power_));
  }
  if (log_power_ != 0) {
    Integer g = r < 3 ? Integer(3) : r;
    Interval lg = Interval::from_rational(Rational(g), prec).log();
    value = value.mul(lg.pow(-log_power_));
  }
  return value;
}

std::optional<Rational> ErrorFunction::eval_exact(const Integer& r) const {
  if (log_power_ != 0) return std::nullopt;
  if (!is_integer(power_) || !power_.get_num().fits_slong_p())
    return std::nullopt;
  return scale_ * rational_pow(Rational(r), -power_.get_num().get_si());
}

std::string ErrorFunction::str() const {
  return rational_string(scale_) + "*r^-" + rational_string(power_) +
         "*logr^-" + rational_string(log_power_);
}

ErrorFunction ErrorFunction::parse(const std::string& s) {
  // format: c*r^-a*logr^-b  (a, b may themselves carry a sign)
  auto p1 = s.find("*r^-");
  auto p2 = s.find("*logr^-");
  if (p1 == std::string::npos || p2 == std::string::npos || p2 <= p1)
    throw std::invalid_argument("bad error-function string: '" + s + "'");
  Rational c = parse_rational(s.substr(0, p1));
  Rational a = parse_rational(s.substr(p1 + 4, p2 - (p1 + 4)));
  Rational b = parse_rational(s.substr(p2 + 7));
  return ErrorFunction(c, a, b);
}

ApproximationSystem::ApproximationSystem(int m, int n,
                                         std::vector<ErrorFunction> weights)
    : m_(m), n_(n), weights_(std::move(weights)) {
  if (!(m_ > n_ && n_ > 0))
    throw std::invalid_argument("ApproximationSystem: requires m > n > 0");
  if (static_cast<int>(weights_.size()) != n_)
    throw std::invalid_argument("ApproximationSystem: need exactly n weights");
}

bool ApproximationSystem::all_monotone() const {
  for (const auto& w : weights_)
    if (!w.monotone()) return false;
  return true;
}

PointTuple::PointTuple(int m, std::vector<RationalVector> points)
    : m_(m), points_(std::move(points)) {
  if (m_ <= 0) throw std::invalid_argument("PointTuple: m must be positive");
  if (points_.empty()) throw std::invalid_argument("PointTuple: no points");
  for (const auto& p : points_)
    if (static_cast<int>(p.size()) != m_)
      throw std::invalid_argument("PointTuple: point dimension mismatch");
}

bool PointTuple::in_unit_box() const {
  Rational half(1, 2);
  for (const auto& p : points_)
    for (const auto& x : p)
      if (x > half || x < -half) return false;
  return true;
}

std::string PointTuple::to_json() const {
  nlohmann::json j;
  j["m"] = m_;
  j["points"] = nlohmann::json::array();
  for (const auto& p : points_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : p) row.push_back(rational_string(x));
    j["points"].push_back(row);
  }
  return j.dump();
}

PointTuple PointTuple::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int m = j.at("m").get<int>();
  std::vector<RationalVector> pts;
  for (const auto& row : j.at("points")) {
    RationalVector p;
    for (const auto& x : row) p.push_back(parse_rational(x.get<std::string>()));
    pts.push_back(std::move(p));
  }
  return PointTuple(m, std::move(pts));
}

bool IntegerVector::is_zero() const {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer IntegerVector::sup_norm() const {
  Integer best(0);
  for (const auto& x : v) {
    Integer a = ::abs(x);
    if (a > best) best = a;
  }
  return best;
}

IntegerVector IntegerVector::negated() const {
  IntegerVector r;
  r.v.reserve(v.size());
  for (const auto& x : v) r.v.push_back(-x);
  return r;
}

bool lex_less(const IntegerVector& a, const IntegerVector& b) {
  Integer na = a.sup_norm(), nb = b.sup_norm();
  if (na != nb) return na < nb;
  return a.v < b.v;
}

Rational dot(const IntegerVector& q, const RationalVector& e) {
  if (q.v.size() != e.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Rational s(0);
  for (size_t j = 0; j < e.size(); ++j) s += Rational(q.v[j]) * e[j];
  return s;
}

RationalSubspace::RationalSubspace(int m,
                                   std::vector<std::vector<Integer>> basis_columns)
    : m_(m), columns_(std::move(basis_columns)) {
  if (m_ <= 0) throw std::invalid_argument("RationalSubspace: bad ambient dim");
  if (columns_.empty() || static_cast<int>(columns_.size()) > m_)
    throw std::invalid_argument("RationalSubspace: need 1 <= d <= m columns");
  std::vector<IntegerVector> rows;
  for (const auto& c : columns_) {
    if (static_cast<int>(c.size()) != m_)
      throw std::invalid_argument("RationalSubspace: column dimension mismatch");
    rows.emplace_back(c);
  }
  if (integer_rank(rows) != static_cast<int>(columns_.size()))
    throw std::invalid_argument("RationalSubspace: columns are dependent over Q");
}

}  // namespace dioph
