#pragma once

#include <vector>

#include "dioph/core.hpp"
#include "dioph/rational.hpp"

namespace dioph {

// Exact rank over Q of a list of row vectors.
int rational_rank(std::vector<RationalVector> rows);
int integer_rank(const std::vector<IntegerVector>& rows);

// Determinant of a square integer matrix (Bareiss fraction-free elimination).
Integer bareiss_determinant(std::vector<std::vector<Integer>> a);

// Adjugate of a square integer matrix: adj(A) * A = det(A) * I.
std::vector<std::vector<Integer>> adjugate(
    const std::vector<std::vector<Integer>>& a);

// Integer basis of the kernel of A (rows x cols), content-reduced and with
// first nonzero entry positive; deterministic for a fixed A.
std::vector<std::vector<Integer>> integer_kernel(
    const std::vector<std::vector<Integer>>& a, int cols);

// True when `candidate` is independent from the span of `chosen` (exact).
bool independent_from(const std::vector<IntegerVector>& chosen,
                      const IntegerVector& candidate);

}  // namespace dioph
