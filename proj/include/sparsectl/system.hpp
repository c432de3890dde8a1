#pragma once

#include "sparsectl/matrix.hpp"

#include <string>
#include <vector>

namespace sparsectl {

/// Discrete-time LTI system:  x_k = A x_{k-1} + B u_k,  y_k = C x_k.
struct LinearSystem {
  Matrix A;  // N x N state matrix
  Matrix B;  // N x m input matrix
  Matrix C;  // n x N output matrix
  std::string name;

  Eigen::Index state_dim() const { return A.rows(); }   // N
  Eigen::Index input_dim() const { return B.cols(); }   // m
  Eigen::Index output_dim() const { return C.rows(); }  // n
};

/// Every dimension / finiteness violation, each naming the offending field.
/// Empty result means the system is valid.
std::vector<std::string> validate(const LinearSystem& sys);

/// Throws std::invalid_argument listing all violations.
void require_valid(const LinearSystem& sys);

/// Entries at or below this magnitude are structural zeros when counting
/// nonzeros of an input vector.
inline constexpr double kSparsityZeroThreshold = 1e-12;

struct SparseInputSequence {
  std::vector<Vector> inputs;  // one m-vector per step, u_1 .. u_K
  int sparsity = 0;            // declared per-step nonzero budget s

  int horizon() const { return static_cast<int>(inputs.size()); }
};

int nonzero_count(const Vector& u);

/// Maximum per-step nonzero count over the sequence.
int sparsity_of(const SparseInputSequence& u);

struct Trajectory {
  std::vector<Vector> states;   // x_0 .. x_K
  std::vector<Vector> outputs;  // y_0 .. y_K
};

Trajectory simulate(const LinearSystem& sys, const Vector& x0, const SparseInputSequence& u);

}  // namespace sparsectl
