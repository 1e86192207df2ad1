#pragma once

#include <vector>

#include "dioph/core.hpp"

namespace dioph {

// Scalar product of R^m restricted to F, in the integer basis (u_1,...,u_d).
struct GramData {
  std::vector<std::vector<Integer>> omega;           // d x d, symmetric
  Integer det_omega;                                 // nonzero
  std::vector<std::vector<Integer>> scaled_inverse;  // (det Omega) Omega^-1
};

struct ComplementBasis {
  std::vector<IntegerVector> vectors;  // m - d integer vectors spanning F-perp
};

GramData gram_matrix(const RationalSubspace& F);

// Phi(e~) = U e~: coordinates in the u-basis to ambient coordinates.
RationalVector lift_point(const RationalSubspace& F, const RationalVector& e_tilde);

// q = U (det Omega) Omega^-1 q~, an integer vector of F cap Z^m; satisfies
// q . Phi(e~) = det(Omega) (q~ . e~) exactly.
IntegerVector lift_witness(const RationalSubspace& F, const GramData& g,
                           const IntegerVector& q_tilde);

// Integer basis of ker(U^T) = F-perp, content-reduced and sign-normalized.
ComplementBasis complement_basis(const RationalSubspace& F);

// Appends v_j + q^(1) for each complement vector; the results stay linearly
// independent and leave every scalar product with points of F unchanged.
std::vector<IntegerVector> complete_witnesses(
    const std::vector<IntegerVector>& d_witnesses, const ComplementBasis& comp);

}  // namespace dioph
