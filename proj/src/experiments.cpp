#include "dioph/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dioph/enumeration.hpp"
#include "dioph/errors.hpp"
#include "dioph/linalg.hpp"
#include "dioph/rng.hpp"
#include "dioph/subspace.hpp"

namespace dioph {

namespace {

// Deterministic parallel map: sample k always runs the same work regardless
// of the thread count; the reduction below is index-ordered.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  if (threads == 1) {
    for (int k = 0; k < count; ++k) fn(k);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int k = t; k < count; k += threads) fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

PointTuple sample_tuple(std::uint64_t seed, std::uint64_t index, int m, int n) {
  SampleRng rng(seed, index);
  std::vector<RationalVector> pts;
  for (int i = 0; i < n; ++i) {
    RationalVector p;
    for (int j = 0; j < m; ++j) p.push_back(rng.next_dyadic_half());
    pts.push_back(std::move(p));
  }
  return PointTuple(m, std::move(pts));
}

}  // namespace

ZeroOneReport run_zero_one(const ApproximationSystem& sys,
                           const ZeroOneConfig& cfg) {
  if (cfg.sample_count < 50)
    throw std::invalid_argument("run_zero_one: need at least 50 samples");
  if (cfg.heights.empty())
    throw std::invalid_argument("run_zero_one: empty height grid");
  for (size_t k = 0; k < cfg.heights.size(); ++k) {
    if (cfg.heights[k] < cfg.h_min ||
        (k > 0 && cfg.heights[k] <= cfg.heights[k - 1]))
      throw std::invalid_argument("run_zero_one: grid must increase from h_min");
  }
  if (cfg.h_min < 1) throw std::invalid_argument("run_zero_one: h_min >= 1");

  auto start = std::chrono::steady_clock::now();
  ZeroOneReport rep;
  rep.verdict = classify(sys);  // rejects the non-monotone (2,1) case
  rep.heights = cfg.heights;
  rep.sample_count = cfg.sample_count;
  rep.h_min = cfg.h_min;
  rep.seed = cfg.seed;

  long h_max = cfg.heights.back();
  std::vector<std::optional<long>> first(cfg.sample_count);
  std::vector<unsigned long long> undecided(cfg.sample_count, 0);
  if (!cfg.hard_zero) {
    ShellThresholds cache(sys, h_max);
    parallel_for(cfg.sample_count, cfg.threads, [&](int k) {
      PointTuple pts = sample_tuple(cfg.seed, k, sys.m(), sys.n());
      auto res =
          first_solution_height(pts, cache, cfg.h_min, h_max, cfg.budget);
      first[k] = res.first_height;
      undecided[k] = res.undecidable;
    });
  }

  for (long H : cfg.heights) {
    long hits = 0;
    for (const auto& f : first)
      if (f && *f <= H) ++hits;
    rep.hit_counts.push_back(hits);
    rep.fractions.push_back(static_cast<double>(hits) / cfg.sample_count);
  }
  for (auto u : undecided) rep.undecidable += u;
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

std::string ZeroOneReport::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = "zero-one";
  j["surrogate"] =
      "finite-height check: >= 1 solution with h_min <= |q| <= H";
  j["seed"] = seed;
  j["sample_count"] = sample_count;
  j["h_min"] = h_min;
  j["verdict"] = nlohmann::ordered_json::parse(verdict.to_json());
  j["heights"] = heights;
  j["hit_counts"] = hit_counts;
  j["fractions"] = fractions;
  j["undecidable"] = undecidable;
  return j.dump(2);
}

std::string ZeroOneReport::to_csv() const {
  std::ostringstream os;
  os << "H,hits,fraction,prediction\n";
  const char* pred = verdict.predicted_measure == 0 ? "0" : "1";
  for (size_t k = 0; k < heights.size(); ++k)
    os << heights[k] << "," << hit_counts[k] << "," << fractions[k] << ","
       << pred << "\n";
  return os.str();
}

OptimalityReport run_optimality(const OptimalityConfig& cfg) {
  int n = static_cast<int>(cfg.tau.size());
  if (n < 1 || cfg.beta.size() != cfg.tau.size())
    throw std::invalid_argument("run_optimality: one (tau, beta) per form");
  int m = cfg.m;
  int d = m;
  if (cfg.subspace) {
    if (cfg.subspace->ambient_dim() != m)
      throw std::invalid_argument("run_optimality: subspace/ambient mismatch");
    d = cfg.subspace->dim();
  }
  if (m < 2 || d <= n)
    throw std::invalid_argument("run_optimality: need dim F > n >= 1");
  if (cfg.sample_count < 1 || cfg.q_grid.empty())
    throw std::invalid_argument("run_optimality: empty sample set or grid");
  // hypothesis check up front (also re-checked per run)
  normalize_exponents(cfg.tau, d, n);
  Rational beta_sum(0);
  for (const auto& b : cfg.beta) beta_sum += b;
  if (beta_sum != (Rational(1) + cfg.epsilon) * (d - 1))
    throw HypothesisViolation(
        "run_optimality: sum beta must equal (1+epsilon)(dim F - 1)");

  auto start = std::chrono::steady_clock::now();
  std::optional<GramData> gram;
  std::optional<ComplementBasis> comp;
  if (cfg.subspace) {
    gram = gram_matrix(*cfg.subspace);
    comp = complement_basis(*cfg.subspace);
  }

  struct SampleOutcome {
    std::vector<char> ok;  // per grid index
    bool flagged = false;
    double constant_needed = 0.0;
  };
  std::vector<SampleOutcome> outcomes(cfg.sample_count);

  parallel_for(cfg.sample_count, cfg.threads, [&](int k) {
    PointTuple tilde = sample_tuple(cfg.seed, k, d, n);
    SampleOutcome out;
    for (const Integer& Q : cfg.q_grid) {
      auto rep = optimality_witnesses(tilde, cfg.tau, cfg.beta, cfg.epsilon, Q,
                                      cfg.constant, cfg.minima);
      if (cfg.subspace) {
        // lift to the ambient space; residuals transfer exactly
        std::vector<IntegerVector> lifted;
        for (const auto& qt : rep.witnesses)
          lifted.push_back(lift_witness(*cfg.subspace, *gram, qt));
        auto full = complete_witnesses(lifted, *comp);
        for (int j = 0; j < d; ++j)
          for (int i = 0; i < n; ++i) {
            Rational ambient =
                dot(full[j], lift_point(*cfg.subspace, tilde.point(i)));
            Rational expect =
                Rational(gram->det_omega) * dot(rep.witnesses[j], tilde.point(i));
            if (ambient != expect)
              throw std::logic_error("run_optimality: lift identity broken");
          }
      }
      if (rep.rational_collapse) out.flagged = true;
      out.ok.push_back(!rep.upper_flag && !rep.lower_flag &&
                       !rep.rational_collapse);
      double need = 1.0;
      for (double h : rep.height_ratio) need = std::max(need, h);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
          need = std::max(need, rep.residual_over_upper[i][j]);
          if (rep.residual_over_lower[i][j] > 0)
            need = std::max(need, 1.0 / rep.residual_over_lower[i][j]);
        }
      out.constant_needed = std::max(out.constant_needed, need);
    }
    outcomes[k] = std::move(out);
  });

  OptimalityReport rep;
  rep.witness_count = m;
  rep.seed = cfg.seed;
  for (size_t gi = 0; gi < cfg.q_grid.size(); ++gi) {
    OptimalityPerQ row;
    row.Q = cfg.q_grid[gi];
    for (const auto& out : outcomes) {
      if (out.flagged) {
        ++row.flagged;
        continue;
      }
      if (out.ok[gi]) ++row.ok;
    }
    long counted = cfg.sample_count - row.flagged;
    row.fraction = counted > 0 ? static_cast<double>(row.ok) / counted : 0.0;
    rep.per_q.push_back(std::move(row));
  }
  for (const auto& out : outcomes)
    if (!out.flagged) rep.empirical_constants.push_back(out.constant_needed);
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

std::string OptimalityReport::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = "optimality";
  j["seed"] = seed;
  j["witness_count"] = witness_count;
  j["per_q"] = nlohmann::json::array();
  for (const auto& r : per_q) {
    nlohmann::ordered_json e;
    e["Q"] = r.Q.get_str();
    e["ok"] = r.ok;
    e["flagged"] = r.flagged;
    e["fraction"] = r.fraction;
    j["per_q"].push_back(e);
  }
  j["empirical_constants"] = empirical_constants;
  return j.dump(2);
}

std::string OptimalityReport::to_csv() const {
  std::ostringstream os;
  os << "Q,ok,flagged,fraction\n";
  for (const auto& r : per_q)
    os << r.Q.get_str() << "," << r.ok << "," << r.flagged << "," << r.fraction
       << "\n";
  return os.str();
}

}  // namespace dioph
