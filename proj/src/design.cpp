#include "sparsectl/design.hpp"

#include "sparsectl/controllability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sparsectl {

Matrix stacked_design_matrix(const LinearSystem& sys, int horizon) {
  require_valid(sys);
  const auto m = sys.input_dim();
  const int k = horizon > 0 ? horizon : static_cast<int>(sys.output_dim());
  Matrix stacked(sys.state_dim(), static_cast<Eigen::Index>(k) * m);
  stacked.rightCols(m) = sys.B;
  for (int block = k - 2; block >= 0; --block) {
    stacked.middleCols(static_cast<Eigen::Index>(block) * m, m) =
        sys.A * stacked.middleCols(static_cast<Eigen::Index>(block + 1) * m, m);
  }
  return sys.C * stacked;
}

DesignSolution design_sparse_inputs(const DesignProblem& p, int horizon,
                                    const TolerancePolicy& pol) {
  require_valid(p.sys);
  const auto N = p.sys.state_dim();
  const auto m = static_cast<int>(p.sys.input_dim());
  const auto n = p.sys.output_dim();
  if (p.x0.size() != N) throw std::invalid_argument("design: x0 length does not match N");
  if (p.yf.size() != n) throw std::invalid_argument("design: yf length does not match n");
  if (p.sparsity < 1 || p.sparsity > m) {
    throw std::invalid_argument("design: sparsity outside 1..m");
  }
  if (p.tol < 0) throw std::invalid_argument("design: tolerance must be nonnegative");

  const int k = horizon > 0 ? horizon : static_cast<int>(n);
  const Matrix phi = stacked_design_matrix(p.sys, k);

  Matrix power = Matrix::Identity(N, N);
  for (int i = 0; i < k; ++i) power = p.sys.A * power;
  const Vector target = p.yf - p.sys.C * power * p.x0;

  DesignSolution sol;
  const Matrix w = controllability_matrix(p.sys);
  const double gate_scale = spectral_norm(p.sys.C) * spectral_norm(w);
  if (numerical_rank_scaled(Matrix(p.sys.C * w), gate_scale, pol) != n) {
    sol.warning = "system is not output controllable (rank(C W) < n); "
                  "the target may be unreachable at any sparsity";
  }

  std::vector<int> budget_used(k, 0);
  std::vector<bool> selected(phi.cols(), false);
  std::vector<Eigen::Index> chosen;  // global column order of selection
  Vector residual = target;
  Vector coeffs;

  const double correlation_floor = 1e-14 * (1.0 + target.norm());
  sol.residual_history.push_back(residual.norm());
  while (residual.norm() > p.tol) {
    Eigen::Index best_col = -1;
    double best_corr = correlation_floor;
    for (int block = 0; block < k; ++block) {
      if (budget_used[block] >= p.sparsity) continue;
      for (int j = 0; j < m; ++j) {
        const Eigen::Index col = static_cast<Eigen::Index>(block) * m + j;
        if (selected[col]) continue;
        const double corr = std::abs(phi.col(col).dot(residual));
        if (corr > best_corr) {
          best_corr = corr;
          best_col = col;
        }
      }
    }
    if (best_col < 0) break;  // no budget left or nothing correlates

    selected[best_col] = true;
    ++budget_used[static_cast<int>(best_col) / m];
    chosen.push_back(best_col);

    Matrix submatrix(phi.rows(), static_cast<Eigen::Index>(chosen.size()));
    for (size_t i = 0; i < chosen.size(); ++i) submatrix.col(static_cast<Eigen::Index>(i)) = phi.col(chosen[i]);
    coeffs = least_squares_solve(submatrix, target, pol);
    residual = target - submatrix * coeffs;
    sol.residual_history.push_back(residual.norm());
  }

  sol.inputs.sparsity = p.sparsity;
  sol.inputs.inputs.assign(k, Vector::Zero(m));
  std::vector<std::vector<int>> supports(k);
  for (size_t i = 0; i < chosen.size(); ++i) {
    const int block = static_cast<int>(chosen[i] / m);
    const int actuator = static_cast<int>(chosen[i] % m);
    sol.inputs.inputs[block](actuator) = coeffs(static_cast<Eigen::Index>(i));
    supports[block].push_back(actuator + 1);
  }
  for (auto& step : supports) std::sort(step.begin(), step.end());
  sol.supports = std::move(supports);
  sol.residual = residual.norm();
  sol.target_reached = sol.residual <= p.tol;
  return sol;
}

double verify_design(const LinearSystem& sys, const Vector& x0, const DesignSolution& sol,
                     const Vector& yf) {
  const Trajectory traj = simulate(sys, x0, sol.inputs);
  if (yf.size() != sys.output_dim()) {
    throw std::invalid_argument("verify_design: yf length does not match n");
  }
  return (traj.outputs.back() - yf).norm();
}

}  // namespace sparsectl
