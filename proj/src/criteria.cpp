#include "sparsectl/criteria.hpp"

#include <algorithm>
#include <complex>
#include <sstream>

namespace sparsectl {

namespace {

void require_sparsity_in_range(const LinearSystem& sys, int s) {
  if (s < 1 || s > sys.input_dim()) {
    std::ostringstream os;
    os << "sparsity s = " << s << " outside 1.." << sys.input_dim();
    throw std::invalid_argument(os.str());
  }
}

Rational necessary_bound_of(const RankProfile& profile, int* index_out) {
  Rational best{0, 1};
  int best_index = 0;
  long long prefix = 0;
  for (size_t i = 0; i < profile.metric.size(); ++i) {
    prefix += profile.metric[i];
    const Rational candidate{prefix, static_cast<long long>(i) + 1};
    if (best < candidate) {
      best = candidate;
      best_index = static_cast<int>(i);
    }
  }
  if (index_out) *index_out = best_index;
  return best;
}

int max_metric_of(const RankProfile& profile, int* index_out) {
  int best = 0;
  int best_index = 0;
  for (size_t i = 0; i < profile.metric.size(); ++i) {
    if (profile.metric[i] > best) {
      best = profile.metric[i];
      best_index = static_cast<int>(i);
    }
  }
  if (index_out) *index_out = best_index;
  return best;
}

NecessaryCheck necessary_from_profile(const LinearSystem& sys, const RankProfile& profile,
                                      int s) {
  NecessaryCheck check;
  check.sparsity = s;
  check.rank_CW = profile.ranks[0];
  check.rank_ok = check.rank_CW == sys.output_dim();
  check.bound = necessary_bound_of(profile, &check.bound_index);
  check.holds = check.rank_ok && check.bound.leq(s);
  return check;
}

SufficientCheck sufficient_from_profile(const LinearSystem& sys, const RankProfile& profile,
                                        int s) {
  SufficientCheck check;
  check.sparsity = s;
  check.rank_CW = profile.ranks[0];
  check.rank_ok = check.rank_CW == sys.output_dim();
  check.max_metric = max_metric_of(profile, &check.bound_index);
  check.bound = std::min(static_cast<int>(sys.input_dim()), check.max_metric);
  check.holds = check.rank_ok && check.bound <= s;
  return check;
}

/// Eigenvalues of A with near-duplicates (within residual_tol) merged.
std::vector<std::complex<double>> distinct_eigenvalues(const Matrix& a,
                                                       const TolerancePolicy& pol) {
  Eigen::EigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> eigs(es.eigenvalues().data(),
                                         es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(eigs.begin(), eigs.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  std::vector<std::complex<double>> out;
  for (const auto& lambda : eigs) {
    if (out.empty() || std::abs(lambda - out.back()) > pol.residual_tol) out.push_back(lambda);
  }
  return out;
}

/// [lambda I - A, B] over the complex field.
ComplexMatrix pbh_pencil(const LinearSystem& sys, const std::complex<double>& lambda) {
  const auto N = sys.state_dim();
  const auto m = sys.input_dim();
  ComplexMatrix pencil(N, N + m);
  pencil.leftCols(N) =
      lambda * ComplexMatrix::Identity(N, N) - sys.A.cast<std::complex<double>>();
  pencil.rightCols(m) = sys.B.cast<std::complex<double>>();
  return pencil;
}

}  // namespace

bool check_output_controllable(const LinearSystem& sys, const TolerancePolicy& pol) {
  require_valid(sys);
  const Matrix w = controllability_matrix(sys);
  const double scale = spectral_norm(sys.C) * spectral_norm(w);
  return numerical_rank_scaled(Matrix(sys.C * w), scale, pol) == sys.output_dim();
}

NecessaryCheck necessary_conditions(const LinearSystem& sys, int s, const TolerancePolicy& pol) {
  require_valid(sys);
  require_sparsity_in_range(sys, s);
  return necessary_from_profile(sys, rank_profile(sys, pol), s);
}

SufficientCheck sufficient_conditions(const LinearSystem& sys, int s, const TolerancePolicy& pol) {
  require_valid(sys);
  require_sparsity_in_range(sys, s);
  return sufficient_from_profile(sys, rank_profile(sys, pol), s);
}

std::optional<SparsityInterval> minimum_sparsity_interval(const LinearSystem& sys,
                                                          const TolerancePolicy& pol) {
  require_valid(sys);
  const RankProfile profile = rank_profile(sys, pol);
  if (profile.ranks[0] != sys.output_dim()) return std::nullopt;
  SparsityInterval interval;
  interval.lo = std::max<long long>(1, necessary_bound_of(profile, nullptr).ceil());
  interval.hi =
      std::max(1, std::min(static_cast<int>(sys.input_dim()), max_metric_of(profile, nullptr)));
  return interval;
}

Corollary1Check corollary1_check(const LinearSystem& sys, const TolerancePolicy& pol) {
  require_valid(sys);
  const RankProfile profile = rank_profile(sys, pol);
  Corollary1Check check;
  check.applies = max_metric_of(profile, nullptr) == profile.metric[0];
  check.rank_ok = profile.ranks[0] == sys.output_dim();
  check.reduced_bound = static_cast<int>(sys.output_dim()) - profile.ranks[1];
  return check;
}

Corollary2Check corollary2_check(const LinearSystem& sys, int s, const TolerancePolicy& pol) {
  require_valid(sys);
  require_sparsity_in_range(sys, s);
  const auto N = static_cast<int>(sys.state_dim());
  const Matrix w = controllability_matrix(sys);
  const double norm_w = spectral_norm(w);
  Corollary2Check check;
  check.sparsity = s;
  check.rank_ok =
      numerical_rank_scaled(Matrix(sys.C * w), spectral_norm(sys.C) * norm_w, pol) ==
      sys.output_dim();
  const int rank_a = static_cast<int>(numerical_rank(sys.A, pol));
  check.bound = std::min(static_cast<int>(sys.input_dim()), N - rank_a);
  check.strict_bound = static_cast<int>(
      numerical_rank(w, pol) -
      numerical_rank_scaled(Matrix(sys.A * w), spectral_norm(sys.A) * norm_w, pol));
  check.holds = check.rank_ok && s >= check.bound;
  check.holds_strict = check.rank_ok && s >= check.strict_bound;
  return check;
}

PbhCheck pbh_state_sparse(const LinearSystem& sys, int s, const TolerancePolicy& pol) {
  require_valid(sys);
  require_sparsity_in_range(sys, s);
  const auto N = sys.state_dim();
  PbhCheck check;
  check.sparsity = s;
  check.rank_A = static_cast<int>(numerical_rank(sys.A, pol));
  check.nullity_bound = static_cast<int>(N) - check.rank_A;
  check.eig_rank_ok = true;
  for (const auto& lambda : distinct_eigenvalues(sys.A, pol)) {
    if (numerical_rank(pbh_pencil(sys, lambda), pol) != N) {
      check.eig_rank_ok = false;
      break;
    }
  }
  check.holds = check.eig_rank_ok && s >= check.nullity_bound;
  return check;
}

TheoremCCheck theoremC_necessary(const LinearSystem& sys, int s, const TolerancePolicy& pol) {
  require_valid(sys);
  require_sparsity_in_range(sys, s);
  const auto n = sys.output_dim();
  TheoremCCheck check;
  check.sparsity = s;
  check.rank_C_ok = numerical_rank(sys.C, pol) == n;
  const double norm_c = spectral_norm(sys.C);
  check.rank_CA = static_cast<int>(
      numerical_rank_scaled(Matrix(sys.C * sys.A), norm_c * spectral_norm(sys.A), pol));
  check.eig_rank_ok = true;
  const ComplexMatrix c = sys.C.cast<std::complex<double>>();
  for (const auto& lambda : distinct_eigenvalues(sys.A, pol)) {
    const ComplexMatrix pencil = pbh_pencil(sys, lambda);
    const double scale = norm_c * (std::abs(lambda) + spectral_norm(sys.A) + spectral_norm(sys.B));
    if (numerical_rank_scaled(ComplexMatrix(c * pencil), scale, pol) != n) {
      check.eig_rank_ok = false;
      break;
    }
  }
  check.holds = check.rank_C_ok && check.eig_rank_ok && check.rank_CA >= n - s;
  return check;
}

ControllabilityReport full_report(const LinearSystem& sys, std::vector<int> s_list,
                                  const TolerancePolicy& pol) {
  require_valid(sys);
  const int m = static_cast<int>(sys.input_dim());
  if (s_list.empty()) {
    for (int s = 1; s <= m; ++s) s_list.push_back(s);
  }
  for (int s : s_list) require_sparsity_in_range(sys, s);

  ControllabilityReport report;
  report.name = sys.name;
  report.N = static_cast<int>(sys.state_dim());
  report.m = m;
  report.n = static_cast<int>(sys.output_dim());
  report.profile = rank_profile(sys, pol);
  report.rank_CW = report.profile.ranks[0];
  report.output_controllable = report.rank_CW == report.n;
  report.necessary_bound = necessary_bound_of(report.profile, &report.necessary_bound_index);
  int max_index = 0;
  report.max_metric = max_metric_of(report.profile, &max_index);
  report.sufficient_bound = std::min(m, report.max_metric);
  report.s_list = s_list;

  const Corollary1Check cor1 = corollary1_check(sys, pol);
  report.corollary1_applies = cor1.applies;
  report.corollary1_reduced_bound = cor1.reduced_bound;

  for (int s : s_list) {
    report.necessary_holds.push_back(necessary_from_profile(sys, report.profile, s).holds);
    report.sufficient_holds.push_back(sufficient_from_profile(sys, report.profile, s).holds);
    const Corollary2Check cor2 = corollary2_check(sys, s, pol);
    report.corollary2_holds.push_back(cor2.holds);
    report.corollary2_bound = cor2.bound;
    report.corollary2_strict_bound = cor2.strict_bound;
    report.pbh_state_sparse.push_back(pbh_state_sparse(sys, s, pol).holds);
    report.theoremC_necessary.push_back(theoremC_necessary(sys, s, pol).holds);
  }

  if (auto interval = minimum_sparsity_interval(sys, pol)) report.min_sparsity = *interval;

  report.tolerance_used = pol;
  {
    std::ostringstream os;
    os << "numerical rank counts singular values above relative_rank_tol * max(dim) * sigma_max"
       << " with relative_rank_tol = " << pol.relative_rank_tol;
    report.notes.push_back(os.str());
  }
  report.notes.push_back("minimum-sparsity interval ends are clamped to s >= 1");

  // Internal consistency before handing the report out.
  if (report.output_controllable &&
      !report.necessary_bound.leq(report.sufficient_bound)) {
    throw std::logic_error("report invariant violated: necessary bound exceeds sufficient bound");
  }
  if (report.min_sparsity && report.min_sparsity->lo > report.min_sparsity->hi) {
    throw std::logic_error("report invariant violated: empty sparsity interval");
  }
  for (size_t i = 0; i < s_list.size(); ++i) {
    if (report.sufficient_holds[i] && !report.necessary_holds[i]) {
      throw std::logic_error("report invariant violated: sufficient holds without necessary");
    }
  }
  return report;
}

}  // namespace sparsectl
