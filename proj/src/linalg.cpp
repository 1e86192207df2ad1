#include "dioph/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace dioph {

int rational_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int integer_rank(const std::vector<IntegerVector>& rows) {
  std::vector<RationalVector> q;
  q.reserve(rows.size());
  for (const auto& r : rows) {
    RationalVector row;
    row.reserve(r.v.size());
    for (const auto& x : r.v) row.emplace_back(x);
    q.push_back(std::move(row));
  }
  return rational_rank(std::move(q));
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  size_t n = a.size();
  if (n == 0) return Integer(1);
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  Integer sign(1), prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Integer(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<Integer>> adjugate(
    const std::vector<std::vector<Integer>>& a) {
  size_t n = a.size();
  std::vector<std::vector<Integer>> adj(n, std::vector<Integer>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Integer>> minor;
      minor.reserve(n - 1);
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Integer> row;
        row.reserve(n - 1);
        for (size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      Integer cof = bareiss_determinant(std::move(minor));
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = cof;  // transpose of the cofactor matrix
    }
  }
  return adj;
}

std::vector<std::vector<Integer>> integer_kernel(
    const std::vector<std::vector<Integer>>& a, int cols) {
  // Rational RREF, then read off a kernel basis and clear denominators.
  std::vector<RationalVector> rows;
  for (const auto& r : a) {
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("integer_kernel: ragged matrix");
    RationalVector row;
    for (const auto& x : r) row.emplace_back(x);
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = rows[rank][c];
    for (int k = 0; k < cols; ++k) rows[rank][k] /= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c];
      for (int k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Integer>> kernel;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RationalVector v(cols, Rational(0));
    v[free_c] = 1;
    for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free_c];
    // clear denominators and divide out content
    Integer lcm(1);
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                    x.get_den().get_mpz_t());
    std::vector<Integer> w(cols);
    Integer content(0);
    for (int k = 0; k < cols; ++k) {
      Rational scaled = v[k] * Rational(lcm);
      w[k] = scaled.get_num();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[k].get_mpz_t());
    }
    if (content > 1)
      for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(),
                                     content.get_mpz_t());
    // sign-normalize: first nonzero entry positive
    for (const auto& x : w) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
    kernel.push_back(std::move(w));
  }
  return kernel;
}

bool independent_from(const std::vector<IntegerVector>& chosen,
                      const IntegerVector& candidate) {
  std::vector<IntegerVector> all = chosen;
  all.push_back(candidate);
  return integer_rank(all) == static_cast<int>(all.size());
}

}  // namespace dioph
