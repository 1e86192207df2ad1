#include "dioph/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace dioph {

namespace {

// floor / ceil of an exact rational
Integer rational_floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Integer rational_ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

bool first_nonzero_negative(const std::vector<Integer>& v) {
  for (const auto& x : v) {
    if (x != 0) return x < 0;
  }
  return false;
}

}  // namespace

Ternary is_solution(const IntegerVector& q, const PointTuple& pts,
                    const ApproximationSystem& sys, mpfr_prec_t prec) {
  if (q.dim() != pts.m())
    throw std::invalid_argument("is_solution: dimension mismatch");
  if (q.is_zero()) throw std::invalid_argument("is_solution: q must be nonzero");
  Integer r = q.sup_norm();
  bool undecided = false;
  for (int i = 0; i < pts.n(); ++i) {
    Rational residual = rational_abs(dot(q, pts.point(i)));
    const ErrorFunction& w = sys.weights()[i];
    if (auto exact = w.eval_exact(r)) {
      if (!(residual < *exact)) return Ternary::False;
      continue;
    }
    Interval thr = w.eval(r, prec);
    int c = thr.compare(residual);
    if (c == 0) {
      thr = w.eval(r, 1024);
      c = thr.compare(residual);
    }
    if (c == -1) return Ternary::False;  // threshold < residual
    if (c == 0) undecided = true;
  }
  return undecided ? Ternary::Undecidable : Ternary::True;
}

ShellThresholds::ShellThresholds(const ApproximationSystem& sys, long h_max,
                                 mpfr_prec_t prec)
    : sys_(sys), h_max_(h_max) {
  if (h_max < 1) throw std::invalid_argument("ShellThresholds: h_max < 1");
  int n = sys_.n();
  thresholds_.resize(n);
  exact_.resize(n);
  upper_.resize(n);
  for (int i = 0; i < n; ++i) {
    thresholds_[i].reserve(h_max);
    exact_[i].reserve(h_max);
    upper_[i].reserve(h_max);
    for (long r = 1; r <= h_max; ++r) {
      Integer rr(r);
      thresholds_[i].push_back(sys_.weights()[i].eval(rr, prec));
      exact_[i].push_back(sys_.weights()[i].eval_exact(rr));
      if (exact_[i].back())
        upper_[i].push_back(*exact_[i].back());
      else
        upper_[i].push_back(thresholds_[i].back().upper_rational());
    }
  }
}

const Interval& ShellThresholds::threshold(int i, long r) const {
  return thresholds_[i][r - 1];
}
const std::optional<Rational>& ShellThresholds::exact(int i, long r) const {
  return exact_[i][r - 1];
}
const Rational& ShellThresholds::upper(int i, long r) const {
  return upper_[i][r - 1];
}

namespace {

// Shared scan state for one shell sweep.
struct ShellScan {
  const PointTuple& pts;
  const ShellThresholds& cache;
  bool dedup_sign;
  bool want_records;
  unsigned long long budget;
  unsigned long long tested = 0;
  unsigned long long undecidable = 0;
  bool stopped = false;
  // return false to stop the whole scan
  std::function<bool(SolutionRecord&&)> emit;

  // Exact membership decision given precomputed residuals.
  Ternary decide(long r, const std::vector<Rational>& residuals) {
    if (++tested > budget)
      throw BudgetExceeded("enumeration budget exceeded at height " +
                               std::to_string(r),
                           budget);
    for (int i = 0; i < pts.n(); ++i) {
      if (const auto& ex = cache.exact(i, r)) {
        if (!(residuals[i] < *ex)) return Ternary::False;
        continue;
      }
      int c = cache.threshold(i, r).compare(residuals[i]);
      if (c == 0) {
        Interval hi = cache.system().weights()[i].eval(Integer(r), 1024);
        c = hi.compare(residuals[i]);
      }
      if (c == -1) return Ternary::False;
      if (c == 0) {
        ++undecidable;
        return Ternary::Undecidable;
      }
    }
    return Ternary::True;
  }

  void try_candidate(long r, const std::vector<Integer>& coords,
                     const std::vector<Rational>& residuals) {
    if (stopped) return;
    if (dedup_sign && first_nonzero_negative(coords)) return;
    if (decide(r, residuals) != Ternary::True) return;
    SolutionRecord rec;
    rec.q = IntegerVector(coords);
    rec.height = r;
    rec.residuals = residuals;
    if (want_records)
      for (int i = 0; i < pts.n(); ++i)
        rec.thresholds.push_back(cache.threshold(i, r));
    if (!emit(std::move(rec))) stopped = true;
  }
};

// Enumerate one shell |q|_inf == r by partitioning on the set S of
// coordinates pinned to +-r; the remaining coordinates range over
// [-(r-1), r-1], with the last of them solved from the residual constraints.
void scan_shell(ShellScan& scan, long r) {
  const PointTuple& pts = scan.pts;
  int m = pts.m();
  int n = pts.n();
  std::vector<Integer> coords(m);
  std::vector<Rational> partial(n);   // running dot products
  std::vector<Rational> residuals(n);

  for (unsigned mask = 1; mask < (1u << m) && !scan.stopped; ++mask) {
    std::vector<int> pinned, free_idx;
    for (int j = 0; j < m; ++j)
      ((mask >> j) & 1u ? pinned : free_idx).push_back(j);
    int solved = free_idx.empty() ? -1 : free_idx.back();

    unsigned signs_count = 1u << pinned.size();
    for (unsigned signs = 0; signs < signs_count && !scan.stopped; ++signs) {
      for (auto& p : partial) p = 0;
      for (size_t k = 0; k < pinned.size(); ++k) {
        long val = ((signs >> k) & 1u) ? -r : r;
        coords[pinned[k]] = val;
        for (int i = 0; i < n; ++i)
          partial[i] += Rational(val) * pts.point(i)[pinned[k]];
      }

      // Recursive sweep over the free coordinates except `solved`.
      std::function<void(size_t)> sweep = [&](size_t fi) {
        if (scan.stopped) return;
        if (static_cast<int>(fi) == static_cast<int>(free_idx.size()) - 1 ||
            free_idx.empty()) {
          if (solved < 0) {
            for (int i = 0; i < n; ++i) residuals[i] = rational_abs(partial[i]);
            scan.try_candidate(r, coords, residuals);
            return;
          }
          // Solve the last free coordinate t from the constraints that
          // involve it; the others only filter in the exact test.
          bool constrained = false;
          Rational lo, hi;
          for (int i = 0; i < n; ++i) {
            const Rational& c = pts.point(i)[solved];
            if (c == 0) continue;
            const Rational& delta = scan.cache.upper(i, r);
            Rational a = (-delta - partial[i]) / c;
            Rational b = (delta - partial[i]) / c;
            if (c < 0) std::swap(a, b);
            if (!constrained) {
              lo = a;
              hi = b;
              constrained = true;
            } else {
              if (a > lo) lo = a;
              if (b < hi) hi = b;
            }
          }
          long lim = r - 1;
          if (!constrained) {
            // residuals do not depend on t: decide once, then emit the range
            for (int i = 0; i < n; ++i) residuals[i] = rational_abs(partial[i]);
            for (long t = -lim; t <= lim && !scan.stopped; ++t) {
              coords[solved] = t;
              scan.try_candidate(r, coords, residuals);
            }
            return;
          }
          if (lo >= hi) return;
          Integer t_min = rational_floor(lo) + 1;
          Integer t_max = rational_ceil(hi) - 1;
          if (t_min < -lim) t_min = -lim;
          if (t_max > lim) t_max = lim;
          for (Integer t = t_min; t <= t_max && !scan.stopped; ++t) {
            coords[solved] = t;
            for (int i = 0; i < n; ++i)
              residuals[i] = rational_abs(partial[i] +
                                          Rational(t) * pts.point(i)[solved]);
            scan.try_candidate(r, coords, residuals);
          }
          return;
        }
        int j = free_idx[fi];
        for (long t = -(r - 1); t <= r - 1 && !scan.stopped; ++t) {
          coords[j] = t;
          std::vector<Rational> saved = partial;
          for (int i = 0; i < n; ++i)
            partial[i] += Rational(t) * pts.point(i)[j];
          sweep(fi + 1);
          partial = saved;
        }
      };
      sweep(0);
    }
  }
}

}  // namespace

EnumerationResult enumerate_solutions(const PointTuple& pts,
                                      const ApproximationSystem& sys,
                                      long h_min, long h_max,
                                      const EnumerationOptions& opts) {
  if (h_min < 1 || h_min > h_max)
    throw std::invalid_argument("enumerate_solutions: need 1 <= h_min <= h_max");
  if (pts.m() != sys.m() || pts.n() != sys.n())
    throw std::invalid_argument("enumerate_solutions: system/points mismatch");
  Integer full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2 * static_cast<unsigned long>(h_max) + 1,
                static_cast<unsigned long>(pts.m()));
  if (full > Integer(static_cast<unsigned long>(opts.budget)))
    throw BudgetExceeded("enumeration requires budget " + full.get_str() +
                             " point-tests, have " +
                             std::to_string(opts.budget),
                         full.fits_ulong_p() ? full.get_ui() : ~0ULL);

  ShellThresholds cache(sys, h_max);
  EnumerationResult result;
  ShellScan scan{pts, cache, opts.dedup_sign, /*want_records=*/true,
                 opts.budget};
  scan.emit = [&](SolutionRecord&& rec) {
    result.solutions.push_back(std::move(rec));
    return true;
  };
  for (long r = h_min; r <= h_max; ++r) scan_shell(scan, r);
  result.tested = scan.tested;
  result.undecidable = scan.undecidable;
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const SolutionRecord& a, const SolutionRecord& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.q.v < b.q.v;
            });
  return result;
}

ExistenceResult first_solution_height(const PointTuple& pts,
                                      const ShellThresholds& cache, long h_min,
                                      long h_max, unsigned long long budget) {
  if (h_min < 1 || h_min > h_max || h_max > cache.h_max())
    throw std::invalid_argument("first_solution_height: bad height range");
  ExistenceResult res;
  ShellScan scan{pts, cache, /*dedup_sign=*/true, /*want_records=*/false,
                 budget};
  for (long r = h_min; r <= h_max; ++r) {
    bool found = false;
    scan.emit = [&](SolutionRecord&&) {
      found = true;
      return false;
    };
    scan.stopped = false;
    scan_shell(scan, r);
    if (found) {
      res.first_height = r;
      break;
    }
  }
  res.tested = scan.tested;
  res.undecidable = scan.undecidable;
  return res;
}

Integer count_per_shell(int m, const Integer& r) {
  if (m < 1 || r < 1)
    throw std::invalid_argument("count_per_shell: need m >= 1, r >= 1");
  Integer a = 2 * r + 1, b = 2 * r - 1, pa, pb;
  mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(m));
  Integer count = pa - pb;
  // count is comparable with r^(m-1): 2 r^(m-1) <= count <= 2m 3^(m-1) r^(m-1)
  Integer rp, three_p;
  mpz_pow_ui(rp.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(m - 1));
  mpz_ui_pow_ui(three_p.get_mpz_t(), 3, static_cast<unsigned long>(m - 1));
  if (count < 2 * rp || count > 2 * m * three_p * rp)
    throw std::logic_error("count_per_shell: comparability bound violated");
  return count;
}

Rational slab_volume(const IntegerVector& q, const Rational& delta) {
  if (q.is_zero()) throw std::invalid_argument("slab_volume: q must be nonzero");
  if (delta <= 0) throw std::invalid_argument("slab_volume: delta must be > 0");
  std::vector<Integer> w;  // |q_j| over the support
  Rational shift(0);
  for (const auto& x : q.v) {
    if (x == 0) continue;
    w.push_back(::abs(x));
    if (x < 0) shift += Rational(x);
    shift -= Rational(x) / 2;
  }
  size_t k = w.size();
  if (k > 24) throw std::invalid_argument("slab_volume: support too large");
  Rational total(0);
  for (const auto& x : w) total += Rational(x);

  Integer factorial(1);
  for (size_t j = 2; j <= k; ++j) factorial *= static_cast<unsigned long>(j);
  Rational denom(factorial);
  for (const auto& x : w) denom *= Rational(x);

  auto box_cdf = [&](const Rational& t) -> Rational {
    Rational T = t - shift;
    if (T <= 0) return Rational(0);
    if (T >= total) return Rational(1);
    Rational acc(0);
    for (unsigned long s = 0; s < (1ul << k); ++s) {
      Rational arg = T;
      int bits = 0;
      for (size_t j = 0; j < k; ++j)
        if ((s >> j) & 1ul) {
          arg -= Rational(w[j]);
          ++bits;
        }
      if (arg <= 0) continue;
      Rational term = rational_pow(arg, static_cast<long>(k));
      acc += (bits % 2 == 0) ? term : -term;
    }
    return acc / denom;
  };

  return box_cdf(delta) - box_cdf(-delta);
}

NeighborhoodMeasure neighborhood_measure(const IntegerVector& q,
                                         const std::vector<Rational>& deltas) {
  if (deltas.empty())
    throw std::invalid_argument("neighborhood_measure: no half-widths");
  NeighborhoodMeasure out;
  out.measure = 1;
  out.comparator = 1;
  Integer height = q.sup_norm();
  int m = q.dim();
  int n = static_cast<int>(deltas.size());
  out.applicable = true;
  for (const auto& d : deltas) {
    if (d <= 0)
      throw std::invalid_argument("neighborhood_measure: delta must be > 0");
    out.measure *= slab_volume(q, d);
    out.comparator *= d / Rational(height);
    if (d > Rational(height) / 4) out.applicable = false;
  }
  out.ratio = out.measure / out.comparator;
  out.window_low = rational_pow(Rational(2 * m), -static_cast<long>(n));
  out.window_high = rational_pow(Rational(2), static_cast<long>(n));
  out.in_window = out.ratio >= out.window_low && out.ratio <= out.window_high;
  return out;
}

}  // namespace dioph
