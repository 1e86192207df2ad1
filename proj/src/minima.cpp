#include "dioph/minima.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dioph/errors.hpp"
#include "dioph/linalg.hpp"
#include "dioph/rng.hpp"

namespace dioph {

namespace {

Interval interval_max(const Interval& a, const Interval& b) {
  int c = a.compare(b);
  if (c > 0) return a;
  if (c < 0) return b;
  return Interval::from_bounds(
      std::max(a.lower_rational(), b.lower_rational()),
      std::max(a.upper_rational(), b.upper_rational()), a.precision());
}

const Rational kEpsFloor = Rational(Integer(1), Integer(1) << 200);

}  // namespace

ConvexBody::ConvexBody(PointTuple pts, Integer Q)
    : pts_(std::move(pts)), Q_(std::move(Q)) {
  if (Q_ < 3) throw std::invalid_argument("ConvexBody: Q must be >= 3");
}

ConvexBody ConvexBody::from_half_widths(PointTuple pts, Integer Q,
                                        std::vector<Rational> eps) {
  ConvexBody b(std::move(pts), std::move(Q));
  if (static_cast<int>(eps.size()) != b.n())
    throw std::invalid_argument("ConvexBody: one half-width per point");
  for (const auto& e : eps)
    if (e <= 0) throw std::invalid_argument("ConvexBody: half-widths positive");
  b.exact_ = true;
  for (const auto& e : eps) b.eps_.push_back(Interval::from_rational(e, 256));
  b.eps_exact_ = std::move(eps);
  return b;
}

ConvexBody ConvexBody::from_exponents(PointTuple pts, Integer Q,
                                      std::vector<Rational> tau,
                                      std::vector<Rational> beta,
                                      mpfr_prec_t prec) {
  ConvexBody b(std::move(pts), std::move(Q));
  if (static_cast<int>(tau.size()) != b.n() ||
      static_cast<int>(beta.size()) != b.n())
    throw std::invalid_argument("ConvexBody: one (tau, beta) per point");
  b.prec_ = prec;
  Interval qi = Interval::from_rational(Rational(b.Q_), prec);
  Interval lq = qi.log();
  for (int i = 0; i < b.n(); ++i) {
    if (tau[i] <= 0)
      throw std::invalid_argument("ConvexBody: tau must be positive");
    Interval e = qi.pow(-tau[i]).mul(lq.pow(beta[i]));
    if (e.compare(kEpsFloor) < 0)
      throw std::invalid_argument("ConvexBody: half-width underflow (< 2^-200)");
    b.eps_.push_back(std::move(e));
  }
  // pure power widths stay exact: eps_i = Q^-tau_i with integer tau_i
  b.exact_ = true;
  for (int i = 0; i < b.n(); ++i) {
    if (beta[i] == 0 && is_integer(tau[i]) && tau[i].get_num().fits_slong_p()) {
      b.eps_exact_.push_back(
          rational_pow(Rational(b.Q_), -tau[i].get_num().get_si()));
    } else {
      b.exact_ = false;
      break;
    }
  }
  if (!b.exact_) b.eps_exact_.clear();
  return b;
}

GaugeValue gauge(const IntegerVector& q, const ConvexBody& body) {
  if (q.dim() != body.m()) throw std::invalid_argument("gauge: wrong dimension");
  if (q.is_zero()) throw std::invalid_argument("gauge: q must be nonzero");
  Rational height(q.sup_norm(), body.Q());
  height.canonicalize();
  GaugeValue out;
  if (body.exact()) {
    Rational g = height;
    for (int i = 0; i < body.n(); ++i) {
      Rational t = rational_abs(dot(q, body.points().point(i))) / body.eps_exact(i);
      t.canonicalize();
      g = std::max(g, t);
    }
    out.exact = g;
    out.value = Interval::from_rational(g, body.precision());
    return out;
  }
  Interval g = Interval::from_rational(height, body.precision());
  for (int i = 0; i < body.n(); ++i) {
    Rational res = rational_abs(dot(q, body.points().point(i)));
    Interval t = Interval::from_rational(res, body.precision()).div(body.eps(i));
    g = interval_max(g, t);
  }
  out.value = std::move(g);
  return out;
}

std::pair<std::vector<Rational>, Rational> normalize_exponents(
    const std::vector<Rational>& tau, int d, int n) {
  if (n < 1 || d <= n)
    throw std::invalid_argument("normalize_exponents: need d > n >= 1");
  Rational sum(0);
  for (const auto& t : tau) {
    if (t <= 0)
      throw std::invalid_argument("normalize_exponents: tau must be positive");
    sum += t;
  }
  if (sum > d - n)
    throw HypothesisViolation("normalize_exponents: sum tau exceeds d - n");
  Rational eta = sum / (d - n);
  eta.canonicalize();
  std::vector<Rational> scaled;
  scaled.reserve(tau.size());
  for (const auto& t : tau) {
    Rational s = t / eta;
    s.canonicalize();
    scaled.push_back(s);
  }
  return {scaled, eta};
}

// ---------------------------------------------------------------------------
// Volume

namespace {

struct FormsDouble {
  int m = 0, n = 0;
  double Q = 0.0;
  std::vector<double> eps;              // n
  std::vector<std::vector<double>> e;   // n x m
};

FormsDouble forms_double(const ConvexBody& body) {
  FormsDouble f;
  f.m = body.m();
  f.n = body.n();
  f.Q = Rational(body.Q()).get_d();
  for (int i = 0; i < f.n; ++i) {
    f.eps.push_back(body.eps(i).midpoint());
    std::vector<double> row;
    for (int j = 0; j < f.m; ++j)
      row.push_back(body.points().point(i)[j].get_d());
    f.e.push_back(std::move(row));
  }
  return f;
}

double det_double(std::vector<std::vector<double>> a) {
  int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (a[p][c] == 0.0) return 0.0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// The n coordinates on which the forms have the largest |det| minor.
std::pair<std::vector<int>, double> best_pivot_columns(const FormsDouble& f) {
  std::vector<int> best;
  double best_det = 0.0;
  if (f.n > f.m) return {best, best_det};
  std::vector<bool> mask(f.m, false);
  std::fill(mask.begin(), mask.begin() + f.n, true);
  std::sort(mask.begin(), mask.end());
  do {
    std::vector<int> cols;
    for (int j = 0; j < f.m; ++j)
      if (mask[j]) cols.push_back(j);
    std::vector<std::vector<double>> sub(f.n, std::vector<double>(f.n));
    for (int i = 0; i < f.n; ++i)
      for (int k = 0; k < f.n; ++k) sub[i][k] = f.e[i][cols[k]];
    double d = det_double(sub);
    if (std::fabs(d) > std::fabs(best_det)) {
      best_det = d;
      best = cols;
    }
  } while (std::next_permutation(mask.begin(), mask.end()));
  return {best, best_det};
}

std::vector<std::vector<double>> invert_double(
    std::vector<std::vector<double>> a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    double piv = a[c][c];
    for (int k = 0; k < n; ++k) {
      a[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0.0) continue;
      double fct = a[r][c];
      for (int k = 0; k < n; ++k) {
        a[r][k] -= fct * a[c][k];
        inv[r][k] -= fct * inv[c][k];
      }
    }
  }
  return inv;
}

}  // namespace

VolumeEstimate body_volume(const ConvexBody& body, long samples,
                           std::uint64_t seed) {
  if (samples < 10000)
    throw std::invalid_argument("body_volume: need at least 10^4 samples");
  FormsDouble f = forms_double(body);
  double cube = std::pow(2.0 * f.Q, f.m);
  auto [cols, det] = best_pivot_columns(f);
  VolumeEstimate out;
  double eps_prod = 1.0;
  for (double e : f.eps) eps_prod *= 2.0 * e;
  out.parallelepiped_proxy =
      det == 0.0 ? 0.0
                 : std::pow(2.0 * f.Q, f.m - f.n) * eps_prod / std::fabs(det);

  bool slab = det != 0.0 && out.parallelepiped_proxy / cube < 1e-3;
  long hits = 0;
  if (!slab) {
    for (long k = 0; k < samples; ++k) {
      SampleRng rng(seed, static_cast<std::uint64_t>(k));
      std::vector<double> x(f.m);
      for (int j = 0; j < f.m; ++j) x[j] = rng.next_symmetric(f.Q);
      bool ok = true;
      for (int i = 0; i < f.n && ok; ++i) {
        double s = 0.0;
        for (int j = 0; j < f.m; ++j) s += f.e[i][j] * x[j];
        ok = std::fabs(s) <= f.eps[i];
      }
      if (ok) ++hits;
    }
    double p = static_cast<double>(hits) / samples;
    out.estimate = cube * p;
    out.standard_error = cube * std::sqrt(p * (1.0 - p) / samples);
    return out;
  }

  // importance sampling inside the form-constraint slab: pick the constrained
  // coordinates x_J from the residual box, the free ones uniformly
  std::vector<int> free_cols;
  std::vector<bool> used(f.m, false);
  for (int c : cols) used[c] = true;
  for (int j = 0; j < f.m; ++j)
    if (!used[j]) free_cols.push_back(j);
  std::vector<std::vector<double>> M(f.n, std::vector<double>(f.n));
  for (int i = 0; i < f.n; ++i)
    for (int k = 0; k < f.n; ++k) M[i][k] = f.e[i][cols[k]];
  auto Minv = invert_double(M);
  double weight = std::pow(2.0 * f.Q, f.m - f.n) * eps_prod / std::fabs(det);
  for (long k = 0; k < samples; ++k) {
    SampleRng rng(seed, static_cast<std::uint64_t>(k));
    std::vector<double> xf(free_cols.size());
    for (auto& v : xf) v = rng.next_symmetric(f.Q);
    std::vector<double> u(f.n);
    for (int i = 0; i < f.n; ++i) u[i] = rng.next_symmetric(f.eps[i]);
    // u_i - sum over free columns, then solve M x_J = rhs
    std::vector<double> rhs(f.n);
    for (int i = 0; i < f.n; ++i) {
      double s = u[i];
      for (size_t t = 0; t < free_cols.size(); ++t)
        s -= f.e[i][free_cols[t]] * xf[t];
      rhs[i] = s;
    }
    bool ok = true;
    for (int i = 0; i < f.n && ok; ++i) {
      double xi = 0.0;
      for (int k2 = 0; k2 < f.n; ++k2) xi += Minv[i][k2] * rhs[k2];
      ok = std::fabs(xi) <= f.Q;
    }
    if (ok) ++hits;
  }
  double p = static_cast<double>(hits) / samples;
  out.estimate = weight * p;
  out.standard_error = weight * std::sqrt(p * (1.0 - p) / samples);
  return out;
}

// ---------------------------------------------------------------------------
// Successive minima

namespace {

// Double-precision embedding q -> (q_1/Q, ..., q_m/Q, q.e_1/eps_1, ...);
// G(q) is its squared Euclidean norm.
struct Embedding {
  int m = 0, n = 0;
  double inv_q = 0.0;
  std::vector<std::vector<double>> rows;  // n x m, e_i[j] / eps_i

  std::vector<double> map(const std::vector<Integer>& q) const {
    std::vector<double> out(m + n);
    for (int j = 0; j < m; ++j) out[j] = Rational(q[j]).get_d() * inv_q;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < m; ++j) s += Rational(q[j]).get_d() * rows[i][j];
      out[m + i] = s;
    }
    return out;
  }
};

Embedding make_embedding(const ConvexBody& body) {
  Embedding emb;
  emb.m = body.m();
  emb.n = body.n();
  emb.inv_q = 1.0 / Rational(body.Q()).get_d();
  for (int i = 0; i < emb.n; ++i) {
    double inv_eps = 1.0 / body.eps(i).midpoint();
    std::vector<double> row(emb.m);
    for (int j = 0; j < emb.m; ++j)
      row[j] = body.points().point(i)[j].get_d() * inv_eps;
    emb.rows.push_back(std::move(row));
  }
  return emb;
}

double dot_d(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Floating-point LLL (delta = 0.99) on the embedded images; the basis itself
// stays integral, so every operation is exact and the output is a genuine
// basis of Z^m.
std::vector<std::vector<Integer>> lll_reduce(const Embedding& emb) {
  int m = emb.m;
  std::vector<std::vector<Integer>> b(m, std::vector<Integer>(m, Integer(0)));
  for (int j = 0; j < m; ++j) b[j][j] = 1;

  auto gso = [&](std::vector<std::vector<double>>& mu, std::vector<double>& B) {
    std::vector<std::vector<double>> star;
    mu.assign(m, std::vector<double>(m, 0.0));
    B.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
      std::vector<double> orig = emb.map(b[i]);
      std::vector<double> v = orig;
      for (int j = 0; j < i; ++j) {
        mu[i][j] = dot_d(orig, star[j]) / B[j];
        for (size_t t = 0; t < v.size(); ++t) v[t] -= mu[i][j] * star[j][t];
      }
      star.push_back(v);
      B[i] = dot_d(v, v);
    }
  };

  std::vector<std::vector<double>> mu;
  std::vector<double> B;
  gso(mu, B);
  const double delta = 0.99;
  int k = 1;
  long guard = 0;
  while (k < m) {
    if (++guard > 100000)
      throw std::logic_error("lll_reduce: failed to converge");
    for (int j = k - 1; j >= 0; --j) {
      if (std::fabs(mu[k][j]) > 0.5 + 1e-9) {
        long r = std::lround(mu[k][j]);
        for (int t = 0; t < m; ++t) b[k][t] -= r * b[j][t];
        gso(mu, B);
      }
    }
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gso(mu, B);
      k = std::max(1, k - 1);
    }
  }
  return b;
}

std::vector<Integer> canonical_sign(std::vector<Integer> q) {
  for (const auto& c : q) {
    if (c > 0) return q;
    if (c < 0) {
      for (auto& x : q) x = -x;
      return q;
    }
  }
  return q;
}

// Complete Fincke-Pohst enumeration of x^T A x <= bound over the reduced
// basis, with a relative safety margin absorbing double rounding.
std::set<std::vector<Integer>> enumerate_ellipsoid(
    const Embedding& emb, const std::vector<std::vector<Integer>>& basis,
    double bound, unsigned long long budget) {
  int m = emb.m;
  std::vector<std::vector<double>> a(m, std::vector<double>(m));
  std::vector<std::vector<double>> img;
  for (int i = 0; i < m; ++i) img.push_back(emb.map(basis[i]));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = dot_d(img[i], img[j]);

  // quadratic-form decomposition: G(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
  auto q = a;
  for (int i = 0; i < m; ++i) {
    std::vector<double> saved(q[i].begin(), q[i].end());
    for (int j = i + 1; j < m; ++j) q[i][j] /= q[i][i];
    for (int k = i + 1; k < m; ++k)
      for (int l = k; l < m; ++l) q[k][l] -= saved[k] * q[i][l];
  }
  double c = bound * (1.0 + 1e-6);

  std::set<std::vector<Integer>> out;
  std::vector<long> x(m, 0);
  unsigned long long nodes = 0;
  auto emit = [&]() {
    std::vector<Integer> v(m, Integer(0));
    bool zero = true;
    for (int i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      zero = false;
      for (int t = 0; t < m; ++t) v[t] += Integer(x[i]) * basis[i][t];
    }
    if (!zero) out.insert(canonical_sign(std::move(v)));
  };
  // depth-first from the last coordinate, classic Fincke-Pohst recursion
  std::function<void(int, double)> rec = [&](int i, double rem) {
    if (i < 0) {
      emit();
      return;
    }
    double center = 0.0;
    for (int j = i + 1; j < m; ++j) center += q[i][j] * x[j];
    double radius = std::sqrt(std::max(0.0, rem / q[i][i]));
    long lo = static_cast<long>(std::ceil(-radius - center - 1e-12));
    long hi = static_cast<long>(std::floor(radius - center + 1e-12));
    for (long xi = lo; xi <= hi; ++xi) {
      if (++nodes > budget)
        throw BudgetExceeded("successive_minima: enumeration budget exceeded",
                             nodes);
      x[i] = xi;
      double term = xi + center;
      rec(i - 1, rem - q[i][i] * term * term);
    }
    x[i] = 0;
  };
  rec(m - 1, c);
  return out;
}

// Deterministic witness tie-break: sup norm, then lexicographic on absolute
// values (prefers sparser vectors), then raw lexicographic.
bool tie_less(const IntegerVector& a, const IntegerVector& b) {
  Integer na = a.sup_norm(), nb = b.sup_norm();
  if (na != nb) return na < nb;
  for (int i = 0; i < a.dim(); ++i) {
    Integer aa = ::abs(a.v[i]), ab = ::abs(b.v[i]);
    if (aa != ab) return aa < ab;
  }
  return a.v < b.v;
}

// Ascending gauge, ties by tie_less.
bool gauge_less(const GaugeValue& ga, const IntegerVector& qa,
                const GaugeValue& gb, const IntegerVector& qb) {
  if (ga.exact && gb.exact) {
    if (*ga.exact != *gb.exact) return *ga.exact < *gb.exact;
  } else {
    int c = ga.value.compare(gb.value);
    if (c != 0) return c < 0;
    // overlap at ~2^-240 relative width: treat as equal and fall through
  }
  return tie_less(qa, qb);
}

}  // namespace

SuccessiveMinimaResult successive_minima(const ConvexBody& body,
                                         const MinimaOptions& opts) {
  int m = body.m();
  if (m > 6)
    throw std::invalid_argument("successive_minima: certification limited to m <= 6");
  for (int i = 0; i < body.n(); ++i)
    if (body.eps(i).compare(kEpsFloor) < 0)
      throw std::invalid_argument("successive_minima: half-width underflow");

  Embedding emb = make_embedding(body);
  auto reduced = lll_reduce(emb);

  // Lambda bounds lambda_m from above; gauge >= sqrt(G/(m+n)) makes the
  // ellipsoid G <= (m+n) Lambda^2 a complete candidate set.
  double lambda_up = 0.0;
  for (const auto& bvec : reduced) {
    GaugeValue g = gauge(IntegerVector(bvec), body);
    lambda_up = std::max(lambda_up, g.value.upper_double());
  }
  double bound = (m + body.n()) * lambda_up * lambda_up;
  auto candidates = enumerate_ellipsoid(emb, reduced, bound, opts.budget);

  std::vector<IntegerVector> vecs;
  std::vector<GaugeValue> gauges;
  vecs.reserve(candidates.size());
  for (const auto& c : candidates) {
    vecs.emplace_back(c);
    gauges.push_back(gauge(vecs.back(), body));
  }
  std::vector<size_t> order(vecs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return gauge_less(gauges[a], vecs[a], gauges[b], vecs[b]);
  });

  SuccessiveMinimaResult res;
  for (size_t idx : order) {
    if (static_cast<int>(res.witnesses.size()) == m) break;
    if (!independent_from(res.witnesses, vecs[idx])) continue;
    res.witnesses.push_back(vecs[idx]);
    res.lambdas.push_back(gauges[idx]);
  }
  if (static_cast<int>(res.witnesses.size()) != m)
    throw std::logic_error("successive_minima: candidate set did not span");

  res.volume = body_volume(body, opts.volume_samples, opts.volume_seed);
  double prod = res.volume.estimate;
  for (const auto& l : res.lambdas) prod *= l.value.midpoint();
  res.minkowski_product = prod;
  return res;
}

std::string SuccessiveMinimaResult::to_json() const {
  nlohmann::ordered_json j;
  j["lambdas"] = nlohmann::json::array();
  for (const auto& l : lambdas) {
    nlohmann::ordered_json e;
    e["value"] = l.value.midpoint();
    if (l.exact) e["exact"] = rational_string(*l.exact);
    j["lambdas"].push_back(e);
  }
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : witnesses) {
    std::vector<std::string> row;
    for (const auto& c : w.v) row.push_back(c.get_str());
    j["witnesses"].push_back(row);
  }
  j["volume"] = {{"est", volume.estimate},
                 {"se", volume.standard_error},
                 {"proxy", volume.parallelepiped_proxy}};
  j["minkowski_product"] = minkowski_product;
  return j.dump(2);
}

WitnessBoundReport optimality_witnesses(const PointTuple& pts,
                                        const std::vector<Rational>& tau,
                                        const std::vector<Rational>& beta,
                                        const Rational& epsilon,
                                        const Integer& Q, double constant,
                                        const MinimaOptions& opts) {
  int m = pts.m(), n = pts.n();
  if (static_cast<int>(tau.size()) != n || static_cast<int>(beta.size()) != n)
    throw std::invalid_argument("optimality_witnesses: one (tau, beta) per point");
  if (epsilon <= 0)
    throw std::invalid_argument("optimality_witnesses: epsilon must be positive");
  Rational beta_sum(0);
  for (const auto& b : beta) beta_sum += b;
  if (beta_sum != (Rational(1) + epsilon) * (m - 1))
    throw HypothesisViolation(
        "optimality_witnesses: sum beta must equal (1+epsilon)(m-1)");

  auto [scaled_tau, eta] = normalize_exponents(tau, m, n);
  Integer q_eff = Q;
  if (eta != 1) {
    double qe = Interval::from_rational(Rational(Q), 128).pow(eta).midpoint();
    q_eff = Integer(static_cast<long>(std::llround(qe)));
    if (q_eff < 3) q_eff = 3;
  }

  ConvexBody body = ConvexBody::from_exponents(pts, q_eff, scaled_tau, beta);
  auto minima = successive_minima(body, opts);

  WitnessBoundReport rep;
  rep.witnesses = minima.witnesses;
  rep.eta = eta;
  rep.q_effective = q_eff;
  rep.constant = constant;
  double qd = Rational(q_eff).get_d();
  double log_q = std::log(qd);
  double shrink = std::pow(log_q, -Rational(Rational(1) + epsilon).get_d() * m);
  rep.residual_over_upper.assign(n, std::vector<double>(m, 0.0));
  rep.residual_over_lower.assign(n, std::vector<double>(m, 0.0));
  for (int j = 0; j < m; ++j) {
    const IntegerVector& q = rep.witnesses[j];
    rep.height_ratio.push_back(Rational(q.sup_norm()).get_d() / qd);
    for (int i = 0; i < n; ++i) {
      Rational res = rational_abs(dot(q, pts.point(i)));
      double upper = body.eps(i).midpoint();  // Q^-tau_i (log Q)^beta_i
      double lower = upper * shrink;
      double rd = res.get_d();
      rep.residual_over_upper[i][j] = rd / upper;
      rep.residual_over_lower[i][j] = rd / lower;
      if (res == 0) rep.rational_collapse = true;
      if (rd > constant * upper) rep.upper_flag = true;
      if (rd < lower / constant) rep.lower_flag = true;
    }
  }
  return rep;
}

std::string WitnessBoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["eta"] = rational_string(eta);
  j["q_effective"] = q_effective.get_str();
  j["constant"] = constant;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : witnesses) {
    std::vector<std::string> row;
    for (const auto& c : w.v) row.push_back(c.get_str());
    j["witnesses"].push_back(row);
  }
  j["height_ratio"] = height_ratio;
  j["residual_over_upper"] = residual_over_upper;
  j["residual_over_lower"] = residual_over_lower;
  j["flags"] = {{"upper", upper_flag},
                {"lower", lower_flag},
                {"rational_collapse", rational_collapse}};
  return j.dump(2);
}

}  // namespace dioph
