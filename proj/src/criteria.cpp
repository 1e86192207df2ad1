#include "dioph/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "dioph/errors.hpp"
#include "dioph/linalg.hpp"

namespace dioph {

namespace {

double log_integer(const Integer& z) {
  signed long e;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

Integer rational_floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Integer round_half_up(const Rational& x) { return rational_floor(x + Rational(1, 2)); }

}  // namespace

void CriterionInput::validate() const {
  if (static_cast<int>(tau_hat.size()) != n)
    throw std::invalid_argument("CriterionInput: one tau per form");
  for (const auto& t : tau_hat)
    if (t <= 0) throw std::invalid_argument("CriterionInput: tau must be positive");
  if (mode == CriterionMode::Nesterenko) {
    for (size_t i = 0; i < tau_hat.size(); ++i)
      for (size_t j = i + 1; j < tau_hat.size(); ++j)
        if (tau_hat[i] == tau_hat[j])
          throw HypothesisViolation(
              "CriterionInput: Nesterenko mode needs pairwise distinct tau");
  } else {
    for (const auto& rec : evidence) {
      if (rec.witnesses.empty())
        throw HypothesisViolation("CriterionInput: Siegel mode needs witnesses");
      int m = rec.witnesses.front().dim();
      if (static_cast<int>(rec.witnesses.size()) != m ||
          integer_rank(rec.witnesses) != m)
        throw HypothesisViolation(
            "CriterionInput: Siegel mode needs m independent vectors per record");
    }
  }
}

DimensionBound dimension_lower_bound(int n, const std::vector<Rational>& tau) {
  if (n < 1 || static_cast<int>(tau.size()) != n)
    throw std::invalid_argument("dimension_lower_bound: one tau per form");
  Rational v(n);
  for (const auto& t : tau) {
    if (t <= 0)
      throw std::invalid_argument("dimension_lower_bound: tau must be positive");
    v += t;
  }
  v.canonicalize();
  DimensionBound out;
  out.value = v;
  mpz_cdiv_q(out.ceiling.get_mpz_t(), v.get_num().get_mpz_t(),
             v.get_den().get_mpz_t());
  return out;
}

ExponentEstimate estimate_exponents(
    const std::vector<std::pair<Integer, Rational>>& data) {
  if (data.size() < 5)
    throw std::invalid_argument("estimate_exponents: need at least 5 heights");
  Integer qmin = data.front().first, qmax = data.front().first;
  for (const auto& [Q, res] : data) {
    if (Q < 2) throw std::invalid_argument("estimate_exponents: Q must be >= 2");
    if (res <= 0)
      throw std::invalid_argument(
          "estimate_exponents: zero residual (rational collapse)");
    qmin = std::min(qmin, Q);
    qmax = std::max(qmax, Q);
  }
  if (qmax < 100 * qmin)
    throw std::invalid_argument("estimate_exponents: need >= 2 decades of Q");

  size_t N = data.size();
  std::vector<double> x(N), y(N);
  for (size_t k = 0; k < N; ++k) {
    x[k] = log_integer(data[k].first);
    y[k] = -std::log(data[k].second.get_d());
  }
  double xbar = 0, ybar = 0;
  for (size_t k = 0; k < N; ++k) {
    xbar += x[k];
    ybar += y[k];
  }
  xbar /= N;
  ybar /= N;
  double sxx = 0, sxy = 0;
  for (size_t k = 0; k < N; ++k) {
    sxx += (x[k] - xbar) * (x[k] - xbar);
    sxy += (x[k] - xbar) * (y[k] - ybar);
  }
  double slope = sxy / sxx;
  double rss = 0;
  for (size_t k = 0; k < N; ++k) {
    double r = y[k] - ybar - slope * (x[k] - xbar);
    rss += r * r;
  }
  double se = std::sqrt(std::max(0.0, rss / (N - 2)) / sxx);
  return {slope, 2.0 * se};
}

namespace {

void push_convergent(ContinuedFractionExpansion& cf, const Integer& a) {
  size_t k = cf.quotients.size();
  cf.quotients.push_back(a);
  if (k == 0) {
    cf.p.push_back(a);
    cf.q.push_back(Integer(1));
  } else if (k == 1) {
    cf.p.push_back(a * cf.p[0] + 1);
    cf.q.push_back(a);
  } else {
    cf.p.push_back(a * cf.p[k - 1] + cf.p[k - 2]);
    cf.q.push_back(a * cf.q[k - 1] + cf.q[k - 2]);
  }
}

}  // namespace

ContinuedFractionExpansion continued_fraction(const Rational& xi, int K) {
  if (K < 1) throw std::invalid_argument("continued_fraction: K >= 1");
  ContinuedFractionExpansion cf;
  Integer num = xi.get_num(), den = xi.get_den();
  while (static_cast<int>(cf.quotients.size()) < K) {
    Integer a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    push_convergent(cf, a);
    if (r == 0) {
      cf.terminated = true;
      break;
    }
    num = den;
    den = r;
  }
  return cf;
}

ContinuedFractionExpansion continued_fraction(const Interval& xi, int K) {
  if (K < 1) throw std::invalid_argument("continued_fraction: K >= 1");
  ContinuedFractionExpansion cf;
  Interval x = xi;
  while (static_cast<int>(cf.quotients.size()) < K) {
    // both endpoints must agree on the floor for a certified quotient
    Integer flo, fhi;
    mpfr_t tmp;
    mpfr_init2(tmp, mpfr_get_prec(x.lo()));
    mpfr_floor(tmp, x.lo());
    mpfr_get_z(flo.get_mpz_t(), tmp, MPFR_RNDN);
    mpfr_floor(tmp, x.hi());
    mpfr_get_z(fhi.get_mpz_t(), tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    if (flo != fhi) {
      cf.precision_exhausted = true;
      break;
    }
    push_convergent(cf, flo);
    Interval frac = x.sub(Interval::from_rational(Rational(flo), x.precision()));
    if (frac.contains_zero() || !frac.is_positive()) {
      // cannot certify the next quotient (possible rational termination)
      cf.precision_exhausted = true;
      break;
    }
    x = Interval::from_long(1, x.precision()).div(frac);
  }
  return cf;
}

std::string ContinuedFractionExpansion::to_json() const {
  nlohmann::ordered_json j;
  std::vector<std::string> a, pp, qq;
  for (const auto& v : quotients) a.push_back(v.get_str());
  for (const auto& v : p) pp.push_back(v.get_str());
  for (const auto& v : q) qq.push_back(v.get_str());
  j["quotients"] = a;
  j["p"] = pp;
  j["q"] = qq;
  j["terminated"] = terminated;
  j["precision_exhausted"] = precision_exhausted;
  return j.dump(2);
}

MuEstimate irrationality_exponent_estimate(const ContinuedFractionExpansion& cf) {
  if (cf.q.size() < 8)
    throw std::invalid_argument(
        "irrationality_exponent_estimate: need >= 8 convergents");
  MuEstimate out;
  for (size_t k = 0; k + 1 < cf.q.size(); ++k) {
    if (cf.q[k] < 2) continue;
    out.sequence.push_back(log_integer(cf.q[k + 1]) / log_integer(cf.q[k]));
  }
  if (out.sequence.empty())
    throw std::invalid_argument(
        "irrationality_exponent_estimate: denominators too small");
  double best = 0.0;
  for (size_t k = out.sequence.size() / 2; k < out.sequence.size(); ++k)
    best = std::max(best, out.sequence[k]);
  out.mu_hat = 1.0 + best;
  out.infinite = out.mu_hat > 10.0;
  return out;
}

EqdimunReport eqdimun_check(const Interval& xi, const Rational& tau,
                            const std::vector<Integer>& q_grid,
                            const Rational& delta) {
  if (tau <= 0) throw std::invalid_argument("eqdimun_check: tau must be positive");
  if (delta <= 0)
    throw std::invalid_argument("eqdimun_check: window must be positive");
  EqdimunReport rep;
  rep.holds = true;
  for (const Integer& Q : q_grid) {
    if (Q < 2 || !Q.fits_slong_p())
      throw std::invalid_argument("eqdimun_check: bad grid height");
    Interval qiv = Interval::from_rational(Rational(Q), xi.precision());
    Interval low = qiv.pow(Rational(-(tau + delta)));
    Interval high = qiv.pow(Rational(-(tau - delta)));
    EqdimunPerQ row;
    row.Q = Q;
    double best = std::numeric_limits<double>::infinity();
    long qmax = Q.get_si();
    for (long q1 = 1; q1 <= qmax; ++q1) {
      Interval t = xi.mul(Interval::from_long(q1, xi.precision()));
      long n0 = std::lround(t.midpoint());
      for (long n = n0 - 1; n <= n0 + 1; ++n) {
        if (std::labs(n) > qmax) continue;
        Interval r =
            t.sub(Interval::from_long(n, xi.precision())).abs();
        best = std::min(best, r.midpoint());
        // certified membership in the window
        if (r.compare(low) > 0 && r.compare(high) < 0) row.found = true;
      }
    }
    row.best_residual = best;
    if (!row.found) rep.holds = false;
    rep.per_q.push_back(std::move(row));
  }

  auto cf = continued_fraction(xi, 48);
  auto mu = irrationality_exponent_estimate(cf);
  rep.mu_hat = mu.mu_hat;
  rep.threshold = 1.0 / (mu.mu_hat - 1.0);
  double t = tau.get_d();
  if (std::fabs(t - rep.threshold) <= 0.02) {
    rep.prediction = "boundary -- not settled";
  } else {
    rep.prediction = t < rep.threshold ? "holds" : "fails";
  }
  rep.agrees = (rep.prediction == "holds" && rep.holds) ||
               (rep.prediction == "fails" && !rep.holds);
  return rep;
}

std::string EqdimunReport::to_csv() const {
  std::ostringstream os;
  os << "Q,found,best_residual,verdict\n";
  for (const auto& r : per_q)
    os << r.Q.get_str() << "," << (r.found ? "true" : "false") << ","
       << r.best_residual << "," << prediction << "\n";
  return os.str();
}

namespace {

CollinearityReport probe_impl(const Interval& xi,
                              const std::vector<Integer>& q_grid,
                              const Rational& C) {
  if (C <= 0)
    throw std::invalid_argument("collinearity_probe: C must be positive");
  CollinearityReport rep;
  for (const Integer& Q : q_grid) {
    if (Q < 2) throw std::invalid_argument("collinearity_probe: bad height");
    Rational hr = Rational(C) * Rational(Q);
    Integer hbound;
    mpz_fdiv_q(hbound.get_mpz_t(), hr.get_num().get_mpz_t(),
               hr.get_den().get_mpz_t());
    if (hbound > 10000000)
      throw BudgetExceeded("collinearity_probe: C * Q too large");
    Rational res_bound = Rational(C) / Rational(Q);
    res_bound.canonicalize();
    CollinearityPerQ row;
    row.Q = Q;
    std::vector<std::pair<Integer, Integer>> sols;
    long h = hbound.get_si();
    for (long q1 = 1; q1 <= h; ++q1) {
      Interval t = xi.mul(Interval::from_long(q1, xi.precision()));
      long n0 = std::lround(t.midpoint());
      for (long n = n0 - 1; n <= n0 + 1; ++n) {
        if (Integer(std::labs(n)) > hbound) continue;
        Interval r = t.sub(Interval::from_long(n, xi.precision())).abs();
        if (r.compare(res_bound) < 0) sols.emplace_back(q1, n);
      }
    }
    row.count = static_cast<long>(sols.size());
    if (!sols.empty()) {
      row.rank = 1;
      for (size_t k = 1; k < sols.size(); ++k) {
        if (sols[0].first * sols[k].second - sols[0].second * sols[k].first != 0) {
          row.rank = 2;
          break;
        }
      }
    }
    rep.per_q.push_back(std::move(row));
  }
  return rep;
}

}  // namespace

CollinearityReport collinearity_probe(const Interval& xi,
                                      const std::vector<Integer>& q_grid,
                                      const Rational& C) {
  return probe_impl(xi, q_grid, C);
}

CollinearityReport collinearity_probe(const Rational&, const std::vector<Integer>&,
                                      const Rational&) {
  throw std::invalid_argument(
      "collinearity_probe: rational xi achieves residual 0; probe undefined");
}

std::string CollinearityReport::to_csv() const {
  std::ostringstream os;
  os << "Q,count,rank\n";
  for (const auto& r : per_q)
    os << r.Q.get_str() << "," << r.count << "," << r.rank << "\n";
  return os.str();
}

std::vector<Integer> schedule_equivalence(const Rational& beta, int count) {
  if (beta <= 1)
    throw std::invalid_argument("schedule_equivalence: beta must exceed 1");
  if (count < 1)
    throw std::invalid_argument("schedule_equivalence: need a positive count");
  std::vector<Integer> out;
  Rational power(1);
  for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
    if (k > 100000)
      throw BudgetExceeded("schedule_equivalence: growth too slow");
    power *= beta;
    Integer v = round_half_up(power);
    if (out.empty() || v != out.back()) out.push_back(v);
  }
  return out;
}

}  // namespace dioph
