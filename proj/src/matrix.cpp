#include "sparsectl/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace sparsectl {

namespace {

template <typename Mat>
Eigen::Index rank_from_svd(const Mat& m, const TolerancePolicy& pol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff =
      pol.relative_rank_tol * static_cast<double>(std::max(m.rows(), m.cols())) * sv(0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

}  // namespace

Eigen::Index numerical_rank(const Matrix& m, const TolerancePolicy& pol) {
  return rank_from_svd(m, pol);
}

Eigen::Index numerical_rank(const ComplexMatrix& m, const TolerancePolicy& pol) {
  return rank_from_svd(m, pol);
}

namespace {

template <typename Mat>
Eigen::Index scaled_rank_from_svd(const Mat& m, double reference_scale,
                                  const TolerancePolicy& pol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double scale = std::max(sv(0), reference_scale);
  const double cutoff =
      pol.relative_rank_tol * static_cast<double>(std::max(m.rows(), m.cols())) * scale;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

}  // namespace

Eigen::Index numerical_rank_scaled(const Matrix& m, double reference_scale,
                                   const TolerancePolicy& pol) {
  return scaled_rank_from_svd(m, reference_scale, pol);
}

Eigen::Index numerical_rank_scaled(const ComplexMatrix& m, double reference_scale,
                                   const TolerancePolicy& pol) {
  return scaled_rank_from_svd(m, reference_scale, pol);
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

RangeBasis orthonormal_range_basis(const Matrix& m, const TolerancePolicy& pol) {
  return orthonormal_range_basis_scaled(m, 0.0, pol);
}

RangeBasis orthonormal_range_basis_scaled(const Matrix& m, double reference_scale,
                                          const TolerancePolicy& pol) {
  if (m.rows() == 0 || m.cols() == 0) return {Matrix(m.rows(), 0), 0};
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double scale = std::max(sv(0), reference_scale);
  const double cutoff =
      pol.relative_rank_tol * static_cast<double>(std::max(m.rows(), m.cols())) * scale;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return {svd.matrixU().leftCols(r), r};
}

Matrix orthonormal_complement(const Matrix& basis, const TolerancePolicy& pol) {
  const Eigen::Index rows = basis.rows();
  const Eigen::Index r = basis.cols();
  if (r > rows) throw std::invalid_argument("orthonormal_complement: more columns than rows");
  if (r == 0) return Matrix::Identity(rows, rows);

  const Matrix gram = basis.transpose() * basis;
  if ((gram - Matrix::Identity(r, r)).cwiseAbs().maxCoeff() > pol.residual_tol) {
    throw std::invalid_argument("orthonormal_complement: columns are not orthonormal");
  }
  if (r == rows) return Matrix(rows, 0);

  // The trailing columns of the full Q factor are orthogonal to range(basis).
  Eigen::HouseholderQR<Matrix> qr(basis);
  Matrix q = qr.householderQ();
  return q.rightCols(rows - r);
}

Matrix pseudo_inverse(const Matrix& m, const TolerancePolicy& pol) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix::Zero(m.cols(), m.rows());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff =
      pol.relative_rank_tol * static_cast<double>(std::max(m.rows(), m.cols())) * sv(0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  const Matrix u = svd.matrixU().leftCols(r);
  const Matrix v = svd.matrixV().leftCols(r);
  return v * sv.head(r).cwiseInverse().asDiagonal() * u.transpose();
}

Vector least_squares_solve(const Matrix& m, const Vector& b, const TolerancePolicy& pol) {
  if (m.rows() != b.size()) {
    throw std::invalid_argument("least_squares_solve: row count does not match rhs length");
  }
  if (m.rows() == 0 || m.cols() == 0) return Vector::Zero(m.cols());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(pol.relative_rank_tol * static_cast<double>(std::max(m.rows(), m.cols())));
  return svd.solve(b);
}

}  // namespace sparsectl
