#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <type_traits>

namespace sparsectl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Tolerances used by every rank and subspace decision in the library.
///
/// A singular value sigma_k counts toward the rank when
///   sigma_k > relative_rank_tol * max(rows, cols) * sigma_max.
/// residual_tol bounds subspace-equality checks and verification residuals.
struct TolerancePolicy {
  double relative_rank_tol = 0x1p-46;
  double residual_tol = 1e-10;
};

Eigen::Index numerical_rank(const Matrix& m, const TolerancePolicy& pol = {});
Eigen::Index numerical_rank(const ComplexMatrix& m, const TolerancePolicy& pol = {});

/// Accepts arbitrary Eigen expressions without the real/complex conversion
/// ambiguity.
template <typename Derived>
Eigen::Index numerical_rank(const Eigen::MatrixBase<Derived>& m,
                            const TolerancePolicy& pol = {}) {
  if constexpr (std::is_same_v<typename Derived::Scalar, std::complex<double>>) {
    return numerical_rank(ComplexMatrix(m.derived()), pol);
  } else {
    return numerical_rank(Matrix(m.derived()), pol);
  }
}

/// Rank of a matrix that was computed as a product: singular values are
/// measured against max(sigma_max, reference_scale), where reference_scale
/// is the product of the factors' norms. A mathematically zero product is
/// pure rounding noise and would otherwise count full rank against itself.
Eigen::Index numerical_rank_scaled(const Matrix& m, double reference_scale,
                                   const TolerancePolicy& pol = {});
Eigen::Index numerical_rank_scaled(const ComplexMatrix& m, double reference_scale,
                                   const TolerancePolicy& pol = {});

/// Largest singular value; 0 for empty matrices.
double spectral_norm(const Matrix& m);

struct RangeBasis {
  Matrix basis;       // orthonormal columns spanning the column space
  Eigen::Index rank;  // number of columns; 0 for the zero matrix
};

RangeBasis orthonormal_range_basis(const Matrix& m, const TolerancePolicy& pol = {});

/// Range basis of a computed product, with the same reference-scale rule as
/// numerical_rank_scaled: directions below the noise floor of the factors
/// are dropped instead of ranking against a vanishing product.
RangeBasis orthonormal_range_basis_scaled(const Matrix& m, double reference_scale,
                                          const TolerancePolicy& pol = {});

/// Orthonormal columns completing `basis` to a full orthogonal square matrix.
/// Returns rows - cols columns; throws std::invalid_argument if the input
/// columns are not orthonormal within pol.residual_tol.
Matrix orthonormal_complement(const Matrix& basis, const TolerancePolicy& pol = {});

/// Moore-Penrose pseudo-inverse via SVD with the policy's rank cutoff.
Matrix pseudo_inverse(const Matrix& m, const TolerancePolicy& pol = {});

/// Minimum-norm least-squares solution of m * x = b.
Vector least_squares_solve(const Matrix& m, const Vector& b, const TolerancePolicy& pol = {});

}  // namespace sparsectl
