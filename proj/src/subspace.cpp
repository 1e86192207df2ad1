#include "dioph/subspace.hpp"

#include <stdexcept>

#include "dioph/linalg.hpp"

namespace dioph {

GramData gram_matrix(const RationalSubspace& F) {
  int d = F.dim(), m = F.ambient_dim();
  GramData g;
  g.omega.assign(d, std::vector<Integer>(d));
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      Integer s(0);
      for (int j = 0; j < m; ++j) s += F.column(k)[j] * F.column(l)[j];
      g.omega[k][l] = s;
    }
  g.det_omega = bareiss_determinant(g.omega);
  if (g.det_omega == 0)
    throw std::logic_error("gram_matrix: singular Gram matrix of a basis");
  g.scaled_inverse = adjugate(g.omega);
  return g;
}

RationalVector lift_point(const RationalSubspace& F,
                          const RationalVector& e_tilde) {
  if (static_cast<int>(e_tilde.size()) != F.dim())
    throw std::invalid_argument("lift_point: dimension mismatch");
  int m = F.ambient_dim();
  RationalVector out(m, Rational(0));
  for (int k = 0; k < F.dim(); ++k)
    for (int j = 0; j < m; ++j) out[j] += e_tilde[k] * Rational(F.column(k)[j]);
  return out;
}

IntegerVector lift_witness(const RationalSubspace& F, const GramData& g,
                           const IntegerVector& q_tilde) {
  int d = F.dim();
  if (q_tilde.dim() != d)
    throw std::invalid_argument("lift_witness: dimension mismatch");
  std::vector<Integer> scaled(d, Integer(0));
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) scaled[k] += g.scaled_inverse[k][l] * q_tilde.v[l];
  int m = F.ambient_dim();
  IntegerVector out;
  out.v.assign(m, Integer(0));
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < m; ++j) out.v[j] += F.column(k)[j] * scaled[k];
  return out;
}

ComplementBasis complement_basis(const RationalSubspace& F) {
  int d = F.dim(), m = F.ambient_dim();
  ComplementBasis comp;
  if (d == m) return comp;  // F-perp is trivial
  // rows of U^T are the basis columns of F
  std::vector<std::vector<Integer>> ut;
  for (int k = 0; k < d; ++k) ut.push_back(F.column(k));
  auto kernel = integer_kernel(ut, m);
  if (static_cast<int>(kernel.size()) != m - d)
    throw std::logic_error("complement_basis: kernel dimension mismatch");
  for (auto& v : kernel) comp.vectors.emplace_back(std::move(v));
  return comp;
}

std::vector<IntegerVector> complete_witnesses(
    const std::vector<IntegerVector>& d_witnesses, const ComplementBasis& comp) {
  if (d_witnesses.empty())
    throw std::invalid_argument("complete_witnesses: no base witnesses");
  if (integer_rank(d_witnesses) != static_cast<int>(d_witnesses.size()))
    throw std::invalid_argument("complete_witnesses: witnesses are dependent");
  std::vector<IntegerVector> out = d_witnesses;
  const IntegerVector& q1 = d_witnesses.front();
  for (const auto& v : comp.vectors) {
    IntegerVector w;
    w.v.reserve(q1.v.size());
    for (size_t j = 0; j < q1.v.size(); ++j) w.v.push_back(v.v[j] + q1.v[j]);
    out.push_back(std::move(w));
  }
  if (integer_rank(out) != static_cast<int>(out.size()))
    throw std::logic_error(
        "complete_witnesses: completed family lost independence");
  return out;
}

}  // namespace dioph
