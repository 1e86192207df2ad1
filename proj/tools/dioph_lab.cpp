// dioph-lab: command-line front end for the Diophantine approximation lab.
//
// Single binary, subcommand style; every run logs its full resolved config
// into the structured output header ("schema": "dioph-lab/1"). Exit codes:
// 0 success, 1 usage error, 2 budget refusal, 3 hypothesis violation,
// 4 undecidable comparison under --strict.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "dioph/config.hpp"
#include "dioph/core.hpp"
#include "dioph/criteria.hpp"
#include "dioph/enumeration.hpp"
#include "dioph/errors.hpp"
#include "dioph/experiments.hpp"
#include "dioph/minima.hpp"
#include "dioph/series.hpp"
#include "dioph/subspace.hpp"

using dioph::Integer;
using dioph::Rational;
using json = nlohmann::ordered_json;

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  long precision_bits = 192;
  unsigned long long budget = 1'000'000'000ULL;
  std::string format = "json";
  std::string out_path;
  int threads = std::max(1u, std::thread::hardware_concurrency());
  bool strict = false;

  json to_json() const {
    json j;
    j["seed"] = seed;
    j["precision_bits"] = precision_bits;
    j["budget"] = budget;
    j["format"] = format;
    j["threads"] = threads;
    j["strict"] = strict;
    return j;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Structured output: JSON documents get a reproducibility envelope; CSV gets
// the same information as comment lines above the table.
void emit(const GlobalOptions& g, const std::string& command,
          const json& config, const json& report_json,
          const std::string& report_csv) {
  std::string payload;
  if (g.format == "csv") {
    std::ostringstream os;
    json merged = g.to_json();
    for (auto& [k, v] : config.items()) merged[k] = v;
    os << "# schema: dioph-lab/1\n# command: " << command
       << "\n# config: " << merged.dump() << "\n"
       << report_csv;
    payload = os.str();
  } else {
    json doc;
    doc["schema"] = "dioph-lab/1";
    doc["command"] = command;
    doc["config"] = g.to_json();
    for (auto& [k, v] : config.items()) doc["config"][k] = v;
    doc["report"] = report_json;
    payload = doc.dump(2) + "\n";
  }
  if (g.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(g.out_path);
    if (!out) throw std::invalid_argument("cannot write " + g.out_path);
    out << payload;
  }
}

std::vector<dioph::ErrorFunction> parse_psi(const std::vector<std::string>& psi,
                                            int n) {
  std::vector<dioph::ErrorFunction> w;
  if (static_cast<int>(psi.size()) == n) {
    for (const auto& s : psi) w.push_back(dioph::ErrorFunction::parse(s));
  } else if (psi.size() == 1) {
    for (int i = 0; i < n; ++i)
      w.push_back(dioph::ErrorFunction::parse(psi[0]));
  } else {
    throw std::invalid_argument("need one --psi per form (or one for all)");
  }
  return w;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& raw) {
  std::vector<Rational> out;
  for (const auto& s : raw) out.push_back(dioph::parse_rational(s));
  return out;
}

std::vector<Integer> parse_integers(const std::vector<std::string>& raw) {
  std::vector<Integer> out;
  for (const auto& s : raw) out.emplace_back(s);
  return out;
}

dioph::RationalSubspace load_subspace(const std::string& path) {
  json j = json::parse(read_file(path));
  int m = j.at("m").get<int>();
  std::vector<std::vector<Integer>> cols;
  for (const auto& col : j.at("columns")) {
    std::vector<Integer> c;
    for (const auto& x : col) {
      if (x.is_number_integer())
        c.push_back(Integer(x.get<long>()));
      else
        c.push_back(Integer(x.get<std::string>()));
    }
    cols.push_back(std::move(c));
  }
  return dioph::RationalSubspace(m, std::move(cols));
}

json integer_vector_json(const dioph::IntegerVector& q) {
  json a = json::array();
  for (const auto& x : q.v) a.push_back(x.get_str());
  return a;
}

// ---------------------------------------------------------------------------

void cmd_series(const GlobalOptions& g, int m, int n,
                const std::vector<std::string>& psi, long partial_terms) {
  dioph::ApproximationSystem sys(m, n, parse_psi(psi, n));
  auto verdict = dioph::classify(sys);
  json rep = json::parse(verdict.to_json());
  if (partial_terms > 0) {
    auto s = dioph::partial_sum(sys, partial_terms);
    rep["partial_sum_terms"] = partial_terms;
    rep["partial_sum"] = s.midpoint();
  }
  json cfg;
  cfg["m"] = m;
  cfg["n"] = n;
  cfg["psi"] = psi;
  std::ostringstream csv;
  csv << "classification,predicted_measure,critical\n"
      << (verdict.classification == dioph::Classification::Convergent
              ? "convergent"
              : "divergent")
      << "," << verdict.predicted_measure << "," << (verdict.critical ? 1 : 0)
      << "\n";
  std::cerr << "series: predicted measure " << verdict.predicted_measure
            << "\n";
  emit(g, "series", cfg, rep, csv.str());
}

void cmd_enumerate(const GlobalOptions& g, const std::string& points_path,
                   const std::vector<std::string>& psi, long h_min, long h_max,
                   bool keep_sign) {
  auto pts = dioph::PointTuple::from_json(read_file(points_path));
  dioph::ApproximationSystem sys(pts.m(), pts.n(), parse_psi(psi, pts.n()));
  dioph::EnumerationOptions opts;
  opts.budget = g.budget;
  opts.dedup_sign = !keep_sign;
  auto res = dioph::enumerate_solutions(pts, sys, h_min, h_max, opts);
  if (g.strict && res.undecidable > 0)
    throw dioph::UndecidableComparison(
        "enumerate: " + std::to_string(res.undecidable) +
        " undecidable membership tests");
  json rep;
  rep["tested"] = res.tested;
  rep["undecidable"] = res.undecidable;
  rep["solutions"] = json::array();
  std::ostringstream csv;
  csv << "height,q,residuals\n";
  for (const auto& s : res.solutions) {
    json e;
    e["q"] = integer_vector_json(s.q);
    e["height"] = s.height.get_str();
    json r = json::array();
    csv << s.height.get_str() << ",\"";
    for (size_t k = 0; k < s.q.v.size(); ++k)
      csv << (k ? " " : "") << s.q.v[k].get_str();
    csv << "\",\"";
    for (size_t k = 0; k < s.residuals.size(); ++k) {
      r.push_back(dioph::rational_string(s.residuals[k]));
      csv << (k ? " " : "") << dioph::rational_string(s.residuals[k]);
    }
    csv << "\"\n";
    e["residuals"] = r;
    rep["solutions"].push_back(e);
  }
  json cfg;
  cfg["points"] = points_path;
  cfg["psi"] = psi;
  cfg["h_min"] = h_min;
  cfg["h_max"] = h_max;
  cfg["dedup_sign"] = !keep_sign;
  std::cerr << "enumerate: " << res.solutions.size() << " solutions in ["
            << h_min << ", " << h_max << "]\n";
  emit(g, "enumerate", cfg, rep, csv.str());
}

dioph::ConvexBody build_body(const dioph::PointTuple& pts,
                             const std::string& q_str,
                             const std::vector<std::string>& tau,
                             const std::vector<std::string>& beta,
                             const std::vector<std::string>& eps,
                             long precision_bits) {
  Integer Q(q_str);
  if (!eps.empty())
    return dioph::ConvexBody::from_half_widths(pts, Q, parse_rationals(eps));
  if (tau.empty())
    throw std::invalid_argument("need either --tau/--beta or --eps");
  std::vector<Rational> b = beta.empty()
                                ? std::vector<Rational>(tau.size(), Rational(0))
                                : parse_rationals(beta);
  return dioph::ConvexBody::from_exponents(
      pts, Q, parse_rationals(tau), b,
      static_cast<mpfr_prec_t>(precision_bits));
}

void cmd_minima(const GlobalOptions& g, const std::string& points_path,
                const std::string& q_str, const std::vector<std::string>& tau,
                const std::vector<std::string>& beta,
                const std::vector<std::string>& eps, long volume_samples) {
  auto pts = dioph::PointTuple::from_json(read_file(points_path));
  auto body = build_body(pts, q_str, tau, beta, eps, g.precision_bits);
  dioph::MinimaOptions opts;
  opts.budget = g.budget;
  opts.volume_samples = volume_samples;
  opts.volume_seed = g.seed == 0 ? 1 : g.seed;
  auto res = dioph::successive_minima(body, opts);
  json rep = json::parse(res.to_json());
  json cfg;
  cfg["points"] = points_path;
  cfg["Q"] = q_str;
  cfg["tau"] = tau;
  cfg["beta"] = beta;
  cfg["eps"] = eps;
  cfg["volume_samples"] = volume_samples;
  std::ostringstream csv;
  csv << "j,lambda,witness\n";
  for (size_t j = 0; j < res.lambdas.size(); ++j) {
    csv << (j + 1) << "," << res.lambdas[j].value.midpoint() << ",\"";
    for (size_t k = 0; k < res.witnesses[j].v.size(); ++k)
      csv << (k ? " " : "") << res.witnesses[j].v[k].get_str();
    csv << "\"\n";
  }
  std::cerr << "minima: Minkowski product " << res.minkowski_product << "\n";
  emit(g, "minima", cfg, rep, csv.str());
}

void cmd_witnesses(const GlobalOptions& g, const std::string& points_path,
                   const std::vector<std::string>& q_grid,
                   const std::vector<std::string>& tau,
                   const std::vector<std::string>& beta,
                   const std::string& epsilon, double constant) {
  auto pts = dioph::PointTuple::from_json(read_file(points_path));
  auto taus = parse_rationals(tau);
  auto betas = parse_rationals(beta);
  Rational eps = dioph::parse_rational(epsilon);
  dioph::MinimaOptions opts;
  opts.budget = g.budget;
  json rep = json::array();
  std::ostringstream csv;
  csv << "Q,upper_flag,lower_flag,rational_collapse\n";
  for (const auto& q_str : q_grid) {
    auto w = dioph::optimality_witnesses(pts, taus, betas, eps, Integer(q_str),
                                         constant, opts);
    json e = json::parse(w.to_json());
    e["Q"] = q_str;
    rep.push_back(e);
    csv << q_str << "," << w.upper_flag << "," << w.lower_flag << ","
        << w.rational_collapse << "\n";
  }
  json cfg;
  cfg["points"] = points_path;
  cfg["Q"] = q_grid;
  cfg["tau"] = tau;
  cfg["beta"] = beta;
  cfg["epsilon"] = epsilon;
  cfg["constant"] = constant;
  std::cerr << "witnesses: " << q_grid.size() << " grid heights\n";
  emit(g, "witnesses", cfg, rep, csv.str());
}

void cmd_subspace(const GlobalOptions& g, const std::string& basis_path,
                  const std::string& point_path,
                  const std::vector<std::string>& witness) {
  auto F = load_subspace(basis_path);
  auto gram = dioph::gram_matrix(F);
  auto comp = dioph::complement_basis(F);
  json rep;
  rep["ambient_dim"] = F.ambient_dim();
  rep["dim"] = F.dim();
  rep["det_omega"] = gram.det_omega.get_str();
  rep["complement_basis"] = json::array();
  for (const auto& v : comp.vectors)
    rep["complement_basis"].push_back(integer_vector_json(v));
  if (!point_path.empty()) {
    auto tilde = dioph::PointTuple::from_json(read_file(point_path));
    rep["lifted_points"] = json::array();
    for (int i = 0; i < tilde.n(); ++i) {
      auto p = dioph::lift_point(F, tilde.point(i));
      json row = json::array();
      for (const auto& x : p) row.push_back(dioph::rational_string(x));
      rep["lifted_points"].push_back(row);
    }
  }
  if (!witness.empty()) {
    dioph::IntegerVector qt(parse_integers(witness));
    rep["lifted_witness"] =
        integer_vector_json(dioph::lift_witness(F, gram, qt));
  }
  json cfg;
  cfg["basis"] = basis_path;
  cfg["point"] = point_path;
  cfg["witness"] = witness;
  std::ostringstream csv;
  csv << "ambient_dim,dim,det_omega\n"
      << F.ambient_dim() << "," << F.dim() << "," << gram.det_omega.get_str()
      << "\n";
  std::cerr << "subspace: dim " << F.dim() << " in R^" << F.ambient_dim()
            << ", det Omega " << gram.det_omega.get_str() << "\n";
  emit(g, "subspace", cfg, rep, csv.str());
}

void cmd_criteria(const GlobalOptions& g, const std::string& op,
                  const std::string& xi_str, int K,
                  const std::vector<std::string>& tau,
                  const std::vector<std::string>& grid,
                  const std::string& delta, const std::string& C,
                  const std::string& ratio, int count) {
  json rep;
  std::string csv;
  json cfg;
  cfg["op"] = op;
  auto prec = static_cast<mpfr_prec_t>(g.precision_bits);
  if (op == "cf") {
    if (xi_str.empty()) throw std::invalid_argument("cf: need --xi");
    auto cf = dioph::continued_fraction(dioph::parse_rational(xi_str), K);
    rep = json::parse(cf.to_json());
    try {
      auto mu = dioph::irrationality_exponent_estimate(cf);
      rep["mu_hat"] = mu.mu_hat;
      rep["mu_infinite"] = mu.infinite;
    } catch (const std::invalid_argument&) {
      rep["mu_hat"] = nullptr;  // expansion too short for an estimate
    }
    cfg["xi"] = xi_str;
    cfg["K"] = K;
    std::ostringstream os;
    os << "k,a_k,p_k,q_k\n";
    for (size_t k = 0; k < cf.quotients.size(); ++k)
      os << k << "," << cf.quotients[k].get_str() << "," << cf.p[k].get_str()
         << "," << cf.q[k].get_str() << "\n";
    csv = os.str();
    std::cerr << "criteria cf: " << cf.quotients.size() << " quotients\n";
  } else if (op == "dimension") {
    if (tau.empty()) throw std::invalid_argument("dimension: need --tau");
    auto taus = parse_rationals(tau);
    auto bound =
        dioph::dimension_lower_bound(static_cast<int>(taus.size()), taus);
    rep["value"] = dioph::rational_string(bound.value);
    rep["ceiling"] = bound.ceiling.get_str();
    cfg["tau"] = tau;
    csv = "value,ceiling\n" + dioph::rational_string(bound.value) + "," +
          bound.ceiling.get_str() + "\n";
    std::cerr << "criteria dimension: dim F >= " << bound.ceiling.get_str()
              << "\n";
  } else if (op == "eqdimun" || op == "collinearity") {
    if (xi_str.empty() || grid.empty())
      throw std::invalid_argument(op + ": need --xi and --grid");
    auto xi = dioph::Interval::from_rational(dioph::parse_rational(xi_str),
                                             prec);
    auto heights = parse_integers(grid);
    cfg["xi"] = xi_str;
    cfg["grid"] = grid;
    if (op == "eqdimun") {
      auto r = dioph::eqdimun_check(xi, dioph::parse_rational(tau.at(0)),
                                    heights, dioph::parse_rational(delta));
      rep["holds"] = r.holds;
      rep["mu_hat"] = r.mu_hat;
      rep["threshold"] = r.threshold;
      rep["prediction"] = r.prediction;
      rep["agrees"] = r.agrees;
      cfg["tau"] = tau.at(0);
      cfg["delta"] = delta;
      csv = r.to_csv();
      std::cerr << "criteria eqdimun: " << (r.holds ? "holds" : "fails")
                << ", prediction " << r.prediction << "\n";
    } else {
      auto r = dioph::collinearity_probe(xi, heights,
                                         dioph::parse_rational(C));
      rep["per_q"] = json::array();
      for (const auto& e : r.per_q) {
        json row;
        row["Q"] = e.Q.get_str();
        row["count"] = e.count;
        row["rank"] = e.rank;
        rep["per_q"].push_back(row);
      }
      cfg["C"] = C;
      csv = r.to_csv();
      std::cerr << "criteria collinearity: " << r.per_q.size()
                << " grid heights\n";
    }
  } else if (op == "schedule") {
    auto qs = dioph::schedule_equivalence(dioph::parse_rational(ratio), count);
    rep["heights"] = json::array();
    std::ostringstream os;
    os << "k,Q\n";
    for (size_t k = 0; k < qs.size(); ++k) {
      rep["heights"].push_back(qs[k].get_str());
      os << k << "," << qs[k].get_str() << "\n";
    }
    cfg["ratio"] = ratio;
    cfg["count"] = count;
    csv = os.str();
    std::cerr << "criteria schedule: " << qs.size() << " heights\n";
  } else {
    throw std::invalid_argument("unknown criteria op: " + op);
  }
  emit(g, "criteria", cfg, rep, csv);
}

void cmd_zero_one(const GlobalOptions& g, const std::string& config_path,
                  int m, int n, const std::vector<std::string>& psi,
                  int samples, const std::vector<long>& heights, long h_min) {
  dioph::ZeroOneConfig zc;
  std::vector<std::string> psi_resolved = psi;
  if (!config_path.empty()) {
    auto file = dioph::Config::parse_file(config_path);
    if (m == 0) m = static_cast<int>(file.get_int("m", 0));
    if (n == 0) n = static_cast<int>(file.get_int("n", 0));
    if (psi_resolved.empty() && file.has("psi"))
      psi_resolved = file.get_string_list("psi");
    if (samples == 0)
      samples = static_cast<int>(file.get_int("samples", 0));
    if (heights.empty() && file.has("heights"))
      zc.heights = file.get_int_list("heights");
    zc.h_min = file.get_int("h_min", h_min);
    zc.hard_zero = file.get_bool("hard_zero", false);
  } else {
    zc.h_min = h_min;
  }
  if (!heights.empty()) zc.heights = heights;
  if (m == 0 || n == 0 || psi_resolved.empty())
    throw std::invalid_argument("zero-one: need m, n and psi");
  zc.sample_count = samples == 0 ? 100 : samples;
  zc.seed = g.seed;
  zc.budget = g.budget;
  zc.threads = g.threads;
  dioph::ApproximationSystem sys(m, n, parse_psi(psi_resolved, n));
  auto rep = dioph::run_zero_one(sys, zc);
  if (g.strict && rep.undecidable > 0)
    throw dioph::UndecidableComparison(
        "zero-one: " + std::to_string(rep.undecidable) +
        " undecidable membership tests");
  json cfg;
  cfg["config"] = config_path;
  cfg["m"] = m;
  cfg["n"] = n;
  cfg["psi"] = psi_resolved;
  cfg["samples"] = zc.sample_count;
  cfg["heights"] = zc.heights;
  cfg["h_min"] = zc.h_min;
  std::cerr << "zero-one: top fraction " << rep.fractions.back()
            << " (predicted measure " << rep.verdict.predicted_measure
            << ")\n";
  emit(g, "zero-one", cfg, json::parse(rep.to_json()), rep.to_csv());
}

void cmd_optimality(const GlobalOptions& g, const std::string& config_path,
                    int m, int samples, const std::vector<std::string>& q_grid,
                    const std::vector<std::string>& tau,
                    const std::vector<std::string>& beta,
                    const std::string& epsilon, double constant,
                    const std::string& subspace_path) {
  dioph::OptimalityConfig oc;
  std::vector<std::string> q_resolved = q_grid, tau_resolved = tau,
                           beta_resolved = beta;
  std::string subspace_resolved = subspace_path;
  if (!config_path.empty()) {
    auto file = dioph::Config::parse_file(config_path);
    if (m == 0) m = static_cast<int>(file.get_int("m", 0));
    if (samples == 0)
      samples = static_cast<int>(file.get_int("samples", 0));
    if (q_resolved.empty() && file.has("q_grid"))
      q_resolved = file.get_string_list("q_grid");
    if (tau_resolved.empty() && file.has("tau"))
      tau_resolved = file.get_string_list("tau");
    if (beta_resolved.empty() && file.has("beta"))
      beta_resolved = file.get_string_list("beta");
    oc.epsilon = file.get_rational("epsilon",
                                   dioph::parse_rational(epsilon));
    oc.constant = static_cast<double>(
        file.get_rational("constant", Rational(constant)).get_d());
    if (subspace_resolved.empty())
      subspace_resolved = file.get_string("subspace", "");
  } else {
    oc.epsilon = dioph::parse_rational(epsilon);
    oc.constant = constant;
  }
  oc.m = m;
  oc.sample_count = samples == 0 ? 100 : samples;
  oc.q_grid = parse_integers(q_resolved);
  oc.tau = parse_rationals(tau_resolved);
  oc.beta = parse_rationals(beta_resolved);
  oc.seed = g.seed;
  oc.threads = g.threads;
  oc.minima.budget = g.budget;
  if (!subspace_resolved.empty()) oc.subspace = load_subspace(subspace_resolved);
  auto rep = dioph::run_optimality(oc);
  json cfg;
  cfg["config"] = config_path;
  cfg["m"] = m;
  cfg["samples"] = oc.sample_count;
  cfg["q_grid"] = q_resolved;
  cfg["tau"] = tau_resolved;
  cfg["beta"] = beta_resolved;
  cfg["epsilon"] = dioph::rational_string(oc.epsilon);
  cfg["constant"] = oc.constant;
  cfg["subspace"] = subspace_resolved;
  std::cerr << "optimality: " << rep.per_q.size() << " grid heights, "
            << rep.empirical_constants.size() << " unflagged samples\n";
  emit(g, "optimality", cfg, json::parse(rep.to_json()), rep.to_csv());
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions g;
  CLI::App app{"dioph-lab: weighted Diophantine approximation laboratory"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name
  app.add_option("--seed", g.seed, "RNG seed for sampling")
      ->capture_default_str();
  app.add_option("--precision-bits", g.precision_bits,
                 "working interval precision in bits")
      ->capture_default_str();
  app.add_option("--budget", g.budget, "point-test / node budget")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "write structured output to PATH");
  app.add_option("--threads", g.threads, "worker thread cap")
      ->capture_default_str();
  app.add_flag("--strict", g.strict,
               "fail (exit 4) on any undecidable comparison");

  // series
  auto* series = app.add_subcommand("series", "classify the volume series");
  int s_m = 2, s_n = 1;
  std::vector<std::string> s_psi;
  long s_partial = 0;
  series->add_option("--m", s_m, "number of variables")->capture_default_str();
  series->add_option("--n", s_n, "number of forms")->capture_default_str();
  series->add_option("--psi", s_psi, "weight c*r^-a*logr^-b, one per form")
      ->required();
  series->add_option("--partial", s_partial,
                     "also report the partial sum over this many terms")
      ->capture_default_str();
  series->callback([&] { cmd_series(g, s_m, s_n, s_psi, s_partial); });

  // enumerate
  auto* enumerate =
      app.add_subcommand("enumerate", "list small solutions shell by shell");
  std::string e_points;
  std::vector<std::string> e_psi;
  long e_hmin = 1, e_hmax = 100;
  bool e_keep_sign = false;
  enumerate->add_option("--points", e_points, "point tuple JSON file")
      ->required();
  enumerate->add_option("--psi", e_psi, "weight c*r^-a*logr^-b, one per form")
      ->required();
  enumerate->add_option("--h-min", e_hmin, "smallest height")
      ->capture_default_str();
  enumerate->add_option("--h-max", e_hmax, "largest height")
      ->capture_default_str();
  enumerate->add_flag("--keep-sign", e_keep_sign, "report both of +-q");
  enumerate->callback(
      [&] { cmd_enumerate(g, e_points, e_psi, e_hmin, e_hmax, e_keep_sign); });

  // minima
  auto* minima =
      app.add_subcommand("minima", "successive minima of the convex body");
  std::string m_points, m_Q = "100";
  std::vector<std::string> m_tau, m_beta, m_eps;
  long m_volume_samples = 20000;
  std::string m_epsilon = "1/10";
  minima->add_option("--points", m_points, "point tuple JSON file")->required();
  minima->add_option("--Q", m_Q, "height bound")->capture_default_str();
  minima->add_option("--tau", m_tau, "exponents tau_i (one per form)");
  minima->add_option("--beta", m_beta, "log exponents beta_i (one per form)");
  minima->add_option("--eps", m_eps, "exact half-widths (overrides tau/beta)");
  minima->add_option("--epsilon", m_epsilon, "epsilon parameter (recorded)")
      ->capture_default_str();
  minima->add_option("--volume-samples", m_volume_samples,
                     "Monte Carlo volume sample count")
      ->capture_default_str();
  minima->callback([&] {
    cmd_minima(g, m_points, m_Q, m_tau, m_beta, m_eps, m_volume_samples);
  });

  // witnesses
  auto* witnesses =
      app.add_subcommand("witnesses", "theorem witness vectors per height");
  std::string w_points, w_epsilon = "1/10";
  std::vector<std::string> w_grid, w_tau, w_beta;
  double w_constant = 64.0;
  witnesses->add_option("--points", w_points, "point tuple JSON file")
      ->required();
  witnesses->add_option("--Q", w_grid, "height grid")->required();
  witnesses->add_option("--tau", w_tau, "exponents tau_i")->required();
  witnesses->add_option("--beta", w_beta, "log exponents beta_i")->required();
  witnesses->add_option("--epsilon", w_epsilon, "epsilon parameter")
      ->capture_default_str();
  witnesses->add_option("--constant", w_constant, "bound constant C")
      ->capture_default_str();
  witnesses->callback([&] {
    cmd_witnesses(g, w_points, w_grid, w_tau, w_beta, w_epsilon, w_constant);
  });

  // subspace
  auto* subspace =
      app.add_subcommand("subspace", "rational subspace data and lifts");
  std::string sub_basis, sub_point;
  std::vector<std::string> sub_witness;
  subspace->add_option("--basis", sub_basis, "subspace basis JSON file")
      ->required();
  subspace->add_option("--point", sub_point,
                       "point tuple JSON file (u-basis coordinates) to lift");
  subspace->add_option("--witness", sub_witness,
                       "witness coordinates (u-basis) to lift");
  subspace->callback([&] { cmd_subspace(g, sub_basis, sub_point, sub_witness); });

  // criteria
  auto* criteria =
      app.add_subcommand("criteria", "linear independence criteria toolkit");
  std::string c_op = "cf", c_xi, c_delta = "1/5", c_C = "1", c_ratio = "3/2";
  std::vector<std::string> c_tau, c_grid;
  int c_K = 40, c_count = 10;
  criteria->add_option("--op", c_op,
                       "one of cf, dimension, eqdimun, collinearity, schedule")
      ->check(CLI::IsMember(
          {"cf", "dimension", "eqdimun", "collinearity", "schedule"}))
      ->capture_default_str();
  criteria->add_option("--xi", c_xi, "target number as an exact rational");
  criteria->add_option("--K", c_K, "continued fraction length")
      ->capture_default_str();
  criteria->add_option("--tau", c_tau, "exponents tau_i");
  criteria->add_option("--grid", c_grid, "height grid");
  criteria->add_option("--delta", c_delta, "eqdimun window half-width")
      ->capture_default_str();
  criteria->add_option("--C", c_C, "collinearity constant")
      ->capture_default_str();
  criteria->add_option("--ratio", c_ratio, "schedule growth ratio")
      ->capture_default_str();
  criteria->add_option("--count", c_count, "schedule length")
      ->capture_default_str();
  criteria->callback([&] {
    cmd_criteria(g, c_op, c_xi, c_K, c_tau, c_grid, c_delta, c_C, c_ratio,
                 c_count);
  });

  // zero-one
  auto* zero_one =
      app.add_subcommand("zero-one", "zero-one law Monte Carlo experiment");
  std::string z_config;
  int z_m = 0, z_n = 0, z_samples = 0;
  std::vector<std::string> z_psi;
  std::vector<long> z_heights;
  long z_hmin = 2;
  zero_one->add_option("--config", z_config, "TOML-like experiment config");
  zero_one->add_option("--m", z_m, "number of variables");
  zero_one->add_option("--n", z_n, "number of forms");
  zero_one->add_option("--psi", z_psi, "weight c*r^-a*logr^-b, one per form");
  zero_one->add_option("--samples", z_samples, "sample count N");
  zero_one->add_option("--heights", z_heights, "height grid");
  zero_one->add_option("--h-min", z_hmin, "smallest counted height")
      ->capture_default_str();
  zero_one->callback([&] {
    cmd_zero_one(g, z_config, z_m, z_n, z_psi, z_samples, z_heights, z_hmin);
  });

  // optimality
  auto* optimality =
      app.add_subcommand("optimality", "almost-everywhere bound experiment");
  std::string o_config, o_epsilon = "1/10", o_subspace;
  int o_m = 0, o_samples = 0;
  std::vector<std::string> o_grid, o_tau, o_beta;
  double o_constant = 64.0;
  optimality->add_option("--config", o_config, "TOML-like experiment config");
  optimality->add_option("--m", o_m, "ambient dimension");
  optimality->add_option("--samples", o_samples, "sample count N");
  optimality->add_option("--Q", o_grid, "height grid");
  optimality->add_option("--tau", o_tau, "exponents tau_i");
  optimality->add_option("--beta", o_beta, "log exponents beta_i");
  optimality->add_option("--epsilon", o_epsilon, "epsilon parameter")
      ->capture_default_str();
  optimality->add_option("--constant", o_constant, "bound constant C")
      ->capture_default_str();
  optimality->add_option("--subspace", o_subspace, "subspace basis JSON file");
  optimality->callback([&] {
    cmd_optimality(g, o_config, o_m, o_samples, o_grid, o_tau, o_beta,
                   o_epsilon, o_constant, o_subspace);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const dioph::BudgetExceeded& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 2;
  } catch (const dioph::HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 3;
  } catch (const dioph::UndecidableComparison& e) {
    std::cerr << "undecidable comparison: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
