#include "sparsectl/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sparsectl {

namespace {

/// All support subsets of {0..m-1} with size <= s, in lexicographic order of
/// their sorted index tuples ({} < {0} < {0,1} < {1} ...). Enumerating in
/// this order makes the reported witness the lexicographically smallest one
/// at the minimal horizon.
std::vector<std::vector<int>> support_subsets(int m, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  const auto recurse = [&](auto&& self, int next) -> void {
    out.push_back(current);
    if (static_cast<int>(current.size()) == s) return;
    for (int j = next; j < m; ++j) {
      current.push_back(j);
      self(self, j + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

Matrix columns_of(const Matrix& b, const std::vector<int>& support) {
  Matrix out(b.rows(), static_cast<Eigen::Index>(support.size()));
  for (size_t i = 0; i < support.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = b.col(support[i]);
  return out;
}

// Subspaces are compared through their orthogonal projectors, which are
// basis-independent; equal-dimension subspaces match when the projector
// distance is within residual_tol.
struct VisitedSet {
  std::map<Eigen::Index, std::vector<Matrix>> projectors_by_dim;
  long long count = 0;

  bool insert_if_new(const Matrix& q, const TolerancePolicy& pol) {
    const Matrix projector = q * q.transpose();
    auto& bucket = projectors_by_dim[q.cols()];
    for (const auto& seen : bucket) {
      if ((projector - seen).norm() <= pol.residual_tol) return false;
    }
    bucket.push_back(projector);
    ++count;
    return true;
  }
};

struct SearchNode {
  Matrix basis;                            // orthonormal basis of the reachable subspace
  std::vector<std::vector<int>> supports;  // 0-based path that produced it
};

std::vector<std::vector<int>> to_one_based(const std::vector<std::vector<int>>& supports) {
  std::vector<std::vector<int>> out = supports;
  for (auto& step : out) {
    for (auto& idx : step) ++idx;
  }
  return out;
}

/// rank(C [A^{K-1}B_{S_1} | ... | B_{S_K}]) = n, evaluated from scratch.
bool verify_witness(const LinearSystem& sys, const std::vector<std::vector<int>>& supports,
                    const TolerancePolicy& pol) {
  Eigen::Index total = 0;
  for (const auto& step : supports) total += static_cast<Eigen::Index>(step.size());
  Matrix stacked(sys.state_dim(), total);
  Matrix power = Matrix::Identity(sys.state_dim(), sys.state_dim());
  Eigen::Index col = total;
  for (auto it = supports.rbegin(); it != supports.rend(); ++it) {
    const Matrix block = power * columns_of(sys.B, *it);
    col -= block.cols();
    stacked.middleCols(col, block.cols()) = block;
    power = sys.A * power;
  }
  const double scale = spectral_norm(sys.C) * spectral_norm(stacked);
  return numerical_rank_scaled(Matrix(sys.C * stacked), scale, pol) == sys.output_dim();
}

}  // namespace

int default_horizon(const LinearSystem& sys, int s, const TolerancePolicy& pol, int cap) {
  require_valid(sys);
  const int m = static_cast<int>(sys.input_dim());
  if (s < 1 || s > m) throw std::invalid_argument("default_horizon: sparsity outside 1..m");
  const KalmanForm kf = kalman_decompose(sys, pol);
  const long long r = kf.rank;
  if (r == 0) return 1;
  Matrix power = Matrix::Identity(r, r);
  double scale = 1.0;
  const double norm_a = spectral_norm(sys.A);  // >= ||A_reduced||
  for (long long i = 0; i < r; ++i) {
    power = kf.A_reduced * power;
    scale *= norm_a;
  }
  const long long rank_ar = numerical_rank_scaled(power, scale, pol);
  const long long blocks = (m + s - 1) / s;  // ceil(m/s)
  const long long horizon = r + r * blocks * rank_ar;
  return static_cast<int>(std::clamp<long long>(horizon, 1, cap));
}

OracleVerdict brute_force_check(const LinearSystem& sys, int s, int k_max,
                                const TolerancePolicy& pol, long long budget_cap) {
  require_valid(sys);
  const int m = static_cast<int>(sys.input_dim());
  const auto n = sys.output_dim();
  if (s < 1 || s > m) throw std::invalid_argument("brute_force_check: sparsity outside 1..m");
  if (k_max < 1) throw std::invalid_argument("brute_force_check: horizon must be at least 1");

  const auto supports = support_subsets(m, s);
  const double norm_c = spectral_norm(sys.C);
  const double child_scale = std::max(1.0, spectral_norm(sys.A));

  OracleVerdict verdict;
  verdict.explored_horizon = k_max;

  // Every reachable subspace lies inside range(W), so rank(C W) < n rules
  // out a witness at any horizon; skip the search outright.
  const Matrix w = controllability_matrix(sys);
  const double gate_scale = norm_c * spectral_norm(w);
  if (numerical_rank_scaled(Matrix(sys.C * w), gate_scale, pol) != n) {
    verdict.status = OracleStatus::NotWithinHorizon;
    return verdict;
  }

  VisitedSet visited;
  const Matrix origin(sys.state_dim(), 0);
  visited.insert_if_new(origin, pol);

  std::vector<SearchNode> frontier;
  frontier.push_back({origin, {}});

  for (int k = 1; k <= k_max && !frontier.empty(); ++k) {
    std::vector<SearchNode> next_frontier;
    for (const auto& node : frontier) {
      for (const auto& support : supports) {
        Matrix generators(sys.state_dim(),
                          node.basis.cols() + static_cast<Eigen::Index>(support.size()));
        generators.leftCols(node.basis.cols()) = sys.A * node.basis;
        generators.rightCols(static_cast<Eigen::Index>(support.size())) =
            columns_of(sys.B, support);
        const Matrix child = orthonormal_range_basis_scaled(generators, child_scale, pol).basis;

        if (!visited.insert_if_new(child, pol)) continue;
        if (visited.count > budget_cap) {
          std::ostringstream os;
          os << "brute_force_check: subspace budget of " << budget_cap
             << " states exceeded at horizon " << k;
          throw BudgetExceededError(budget_cap, os.str());
        }

        auto path = node.supports;
        path.push_back(support);
        if (numerical_rank_scaled(Matrix(sys.C * child), norm_c, pol) == n) {
          if (!verify_witness(sys, path, pol)) {
            throw NumericalInconsistencyError(
                k, "brute_force_check: witness failed re-verification");
          }
          verdict.status = OracleStatus::Controllable;
          verdict.horizon_found = k;
          verdict.witness_supports = to_one_based(path);
          verdict.states_explored = visited.count;
          return verdict;
        }
        next_frontier.push_back({child, std::move(path)});
      }
    }
    frontier = std::move(next_frontier);
  }

  verdict.status = OracleStatus::NotWithinHorizon;
  verdict.states_explored = visited.count;
  return verdict;
}

}  // namespace sparsectl
