#pragma once

#include "sparsectl/system.hpp"

namespace sparsectl {

/// Controllability matrix [A^{N-1}B | A^{N-2}B | ... | B], highest power
/// leftmost. The input-design module reuses this block layout.
Matrix controllability_matrix(const LinearSystem& sys);

/// Orthogonal restriction of (A, B, C) to the reachable subspace range(W).
///
/// basis has r = rank(W) orthonormal columns spanning range(W); the reduced
/// matrices are the compressions of A, B, C onto that subspace. Since
/// range(W) is A-invariant, the complement block of A vanishes and the
/// reduced pair (A_reduced, B_reduced) is controllable.
struct KalmanForm {
  Matrix basis;       // N x r
  Matrix A_reduced;   // r x r
  Matrix B_reduced;   // r x m
  Matrix C_reduced;   // n x r
  Eigen::Index rank;  // r; 0 when B = 0
};

KalmanForm kalman_decompose(const LinearSystem& sys, const TolerancePolicy& pol = {});

/// rank(C A^i W) for i = 0..N and the stepwise rank gaps that drive the
/// sparsity bounds.
struct RankProfile {
  std::vector<int> ranks;   // size N+1
  std::vector<int> metric;  // size N, metric[i] = ranks[i] - ranks[i+1]
};

/// Raised when the direct rank sequence and its Kalman-form recomputation
/// disagree, which signals an ill-conditioned system or a tolerance
/// misconfiguration.
class NumericalInconsistencyError : public std::runtime_error {
 public:
  NumericalInconsistencyError(int index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Computes the profile along two independent paths (directly from C A^i W
/// and from the reduced form) and returns it only when both agree.
RankProfile rank_profile(const LinearSystem& sys, const TolerancePolicy& pol = {});

}  // namespace sparsectl
