#pragma once

#include <complex>
#include <stdexcept>

#include "w4/mat2.hpp"

namespace w4 {

/// Raised by solve2 when |det A| is below the working-precision floor.
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigenvalue pair of a 2x2 real matrix, ordered by descending magnitude
/// (the "+" branch of the quadratic first on ties). alpha and beta keep
/// the trace and determinant the pair was computed from.
struct EigPair2 {
  std::complex<double> lambda_plus;
  std::complex<double> lambda_minus;
  double alpha = 0.0;  // tr A
  double beta = 0.0;   // det A
};

/// SVD triple J = U * diag(sigma_plus, sigma_minus) * V^T,
/// sigma_plus >= sigma_minus >= 0, U and V orthogonal.
struct SvdResult {
  Mat2 U;
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
  Mat2 V;

  Vec2 u_plus() const { return U.col(0); }
  Vec2 u_minus() const { return U.col(1); }
  Vec2 v_plus() const { return V.col(0); }
  Vec2 v_minus() const { return V.col(1); }
};

enum class ThresholdMode { Relative, Absolute };

EigPair2 eig2(const Mat2& a);

SvdResult svd2(const Mat2& j);

/// Regularized inverse of diag(sigma_plus, sigma_minus): reciprocals where a
/// singular value is above the zero threshold, 1 where it is not.
Mat2 reg_inv_sigma(double sigma_plus, double sigma_minus, double threshold = 1e-15,
                   ThresholdMode mode = ThresholdMode::Relative);

/// Exact 2x2 linear solve. Throws SingularMatrixError when |det A| <= 1e-300.
Vec2 solve2(const Mat2& a, const Vec2& b);

}  // namespace w4
