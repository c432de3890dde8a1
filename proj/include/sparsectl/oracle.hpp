#pragma once

#include "sparsectl/controllability.hpp"

#include <optional>
#include <vector>

namespace sparsectl {

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(long long cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}
  long long cap() const { return cap_; }

 private:
  long long cap_;
};

enum class OracleStatus { Controllable, NotWithinHorizon };

struct OracleVerdict {
  OracleStatus status = OracleStatus::NotWithinHorizon;
  std::optional<int> horizon_found;
  // One index set per step, 1-based actuator indices, each of size <= s.
  std::optional<std::vector<std::vector<int>>> witness_supports;
  int explored_horizon = 0;
  long long states_explored = 0;
};

/// Constructive horizon r + r * ceil(m/s) * rank(A_reduced^r) with
/// r = rank(W), clamped to [1, cap]. Any controllable target is reachable
/// within this many steps, so it is the default oracle search depth.
int default_horizon(const LinearSystem& sys, int s, const TolerancePolicy& pol = {},
                    int cap = 10000);

/// Ground-truth support enumeration: breadth-first search over reachable
/// state subspaces, one transition per admissible support set. Two search
/// states are merged when their subspaces coincide within residual_tol,
/// which collapses the per-step support explosion to a walk on the finite
/// subspace lattice. Returns the smallest witness horizon and the
/// lexicographically smallest support tuple at that horizon.
///
/// The search cannot refute controllability beyond k_max; a negative result
/// is therefore reported as NotWithinHorizon, never as uncontrollable.
/// Throws BudgetExceededError when the deduplicated state count passes
/// budget_cap.
OracleVerdict brute_force_check(const LinearSystem& sys, int s, int k_max,
                                const TolerancePolicy& pol = {},
                                long long budget_cap = 10'000'000);

}  // namespace sparsectl
