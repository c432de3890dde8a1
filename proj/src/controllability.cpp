#include "sparsectl/controllability.hpp"

#include <sstream>

namespace sparsectl {

Matrix controllability_matrix(const LinearSystem& sys) {
  require_valid(sys);
  const auto N = sys.state_dim();
  const auto m = sys.input_dim();
  Matrix w(N, N * m);
  w.rightCols(m) = sys.B;
  for (Eigen::Index k = N - 2; k >= 0; --k) {
    w.middleCols(k * m, m) = sys.A * w.middleCols((k + 1) * m, m);
  }
  return w;
}

KalmanForm kalman_decompose(const LinearSystem& sys, const TolerancePolicy& pol) {
  const Matrix w = controllability_matrix(sys);
  const RangeBasis range = orthonormal_range_basis(w, pol);
  KalmanForm kf;
  kf.basis = range.basis;
  kf.rank = range.rank;
  kf.A_reduced = kf.basis.transpose() * sys.A * kf.basis;
  kf.B_reduced = kf.basis.transpose() * sys.B;
  kf.C_reduced = sys.C * kf.basis;
  return kf;
}

RankProfile rank_profile(const LinearSystem& sys, const TolerancePolicy& pol) {
  const auto N = static_cast<int>(sys.state_dim());
  const Matrix w = controllability_matrix(sys);
  const KalmanForm kf = kalman_decompose(sys, pol);

  RankProfile profile;
  profile.ranks.resize(N + 1);
  profile.metric.resize(N);

  // Powers accumulate rounding noise proportional to the factor norms, so
  // both rank sequences measure against that scale rather than against the
  // (possibly vanishing) product itself. The reference scales come from the
  // original data: the reduced factors are orthogonal compressions, so
  // ||C_reduced A_reduced^i|| <= ||C|| ||A||^i.
  const double norm_a = spectral_norm(sys.A);
  double direct_scale = spectral_norm(sys.C) * spectral_norm(w);
  double reduced_scale = spectral_norm(sys.C);

  Matrix direct = w;             // A^i W
  Matrix reduced = kf.C_reduced; // C_reduced A_reduced^i
  for (int i = 0; i <= N; ++i) {
    const int direct_rank =
        static_cast<int>(numerical_rank_scaled(Matrix(sys.C * direct), direct_scale, pol));
    const int reduced_rank =
        static_cast<int>(numerical_rank_scaled(reduced, reduced_scale, pol));
    if (direct_rank != reduced_rank) {
      std::ostringstream os;
      os << "rank_profile: direct rank " << direct_rank << " and reduced-form rank "
         << reduced_rank << " disagree at power i = " << i;
      throw NumericalInconsistencyError(i, os.str());
    }
    profile.ranks[i] = direct_rank;
    if (i < N) {
      direct = sys.A * direct;
      reduced = reduced * kf.A_reduced;
      direct_scale *= norm_a;
      reduced_scale *= norm_a;
    }
  }

  for (int i = 0; i < N; ++i) {
    profile.metric[i] = profile.ranks[i] - profile.ranks[i + 1];
    if (profile.metric[i] < 0) {
      std::ostringstream os;
      os << "rank_profile: rank sequence increased at power i = " << i;
      throw NumericalInconsistencyError(i, os.str());
    }
  }
  return profile;
}

}  // namespace sparsectl
