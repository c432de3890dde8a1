#pragma once

#include "sparsectl/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sparsectl {

struct DesignProblem {
  LinearSystem sys;
  Vector x0;         // length N
  Vector yf;         // length n
  int sparsity = 1;  // per-step nonzero budget
  double tol = 1e-8; // acceptable terminal output error
};

struct DesignSolution {
  SparseInputSequence inputs;              // horizon()-many s-sparse vectors
  std::vector<std::vector<int>> supports;  // selected columns per step, 1-based
  double residual = 0.0;                   // ||y_K - y_f||_2
  bool target_reached = false;
  std::vector<double> residual_history;    // residual norm after each greedy pick
  std::optional<std::string> warning;      // set when rank(C W) < n
};

/// Stacked design matrix C [A^{K-1}B | ... | B]. K defaults to the output
/// dimension n, the horizon at which any reachable target is reachable.
Matrix stacked_design_matrix(const LinearSystem& sys, int horizon = 0);

/// Greedy piecewise orthogonal matching pursuit: repeatedly picks the
/// (step, actuator) column most correlated with the residual among steps
/// with remaining budget, then refits all selected coefficients by least
/// squares. Ties break to the lowest step, then lowest actuator. The greedy
/// loop carries no optimality guarantee; a miss is reported via
/// target_reached = false, not retried.
DesignSolution design_sparse_inputs(const DesignProblem& p, int horizon = 0,
                                    const TolerancePolicy& pol = {});

/// Forward-simulates the solution and returns ||y_K - y_f||_2, which must
/// match the solution's algebraic residual.
double verify_design(const LinearSystem& sys, const Vector& x0, const DesignSolution& sol,
                     const Vector& yf);

}  // namespace sparsectl
