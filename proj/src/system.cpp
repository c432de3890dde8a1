#include "sparsectl/system.hpp"

#include <cmath>
#include <sstream>

namespace sparsectl {

std::vector<std::string> validate(const LinearSystem& sys) {
  std::vector<std::string> errors;
  const auto N = sys.A.rows();

  if (sys.A.rows() != sys.A.cols()) {
    std::ostringstream os;
    os << "A: must be square, got " << sys.A.rows() << "x" << sys.A.cols();
    errors.push_back(os.str());
  }
  if (N < 1) errors.push_back("A: state dimension must be at least 1");
  if (sys.B.cols() < 1) errors.push_back("B: input dimension must be at least 1");
  if (sys.C.rows() < 1) errors.push_back("C: output dimension must be at least 1");
  if (sys.B.rows() != N) {
    std::ostringstream os;
    os << "B: row count " << sys.B.rows() << " does not match state dimension " << N;
    errors.push_back(os.str());
  }
  if (sys.C.cols() != N) {
    std::ostringstream os;
    os << "C: column count " << sys.C.cols() << " does not match state dimension " << N;
    errors.push_back(os.str());
  }
  if (!sys.A.allFinite()) errors.push_back("A: contains non-finite entries");
  if (!sys.B.allFinite()) errors.push_back("B: contains non-finite entries");
  if (!sys.C.allFinite()) errors.push_back("C: contains non-finite entries");
  return errors;
}

void require_valid(const LinearSystem& sys) {
  const auto errors = validate(sys);
  if (errors.empty()) return;
  std::ostringstream os;
  os << "invalid system";
  if (!sys.name.empty()) os << " '" << sys.name << "'";
  for (const auto& e : errors) os << "; " << e;
  throw std::invalid_argument(os.str());
}

int nonzero_count(const Vector& u) {
  int count = 0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (std::abs(u(i)) > kSparsityZeroThreshold) ++count;
  }
  return count;
}

int sparsity_of(const SparseInputSequence& u) {
  int worst = 0;
  for (const auto& step : u.inputs) worst = std::max(worst, nonzero_count(step));
  return worst;
}

Trajectory simulate(const LinearSystem& sys, const Vector& x0, const SparseInputSequence& u) {
  require_valid(sys);
  if (x0.size() != sys.state_dim()) {
    throw std::invalid_argument("simulate: x0 length does not match state dimension");
  }
  for (const auto& step : u.inputs) {
    if (step.size() != sys.input_dim()) {
      throw std::invalid_argument("simulate: input vector length does not match input dimension");
    }
  }

  Trajectory traj;
  traj.states.reserve(u.inputs.size() + 1);
  traj.outputs.reserve(u.inputs.size() + 1);
  traj.states.push_back(x0);
  traj.outputs.push_back(sys.C * x0);
  for (const auto& step : u.inputs) {
    traj.states.push_back(sys.A * traj.states.back() + sys.B * step);
    traj.outputs.push_back(sys.C * traj.states.back());
  }
  return traj;
}

}  // namespace sparsectl
