#include "w4/decomp.hpp"

#include <algorithm>
#include <cmath>

namespace w4 {
namespace {

Vec2 rot90(const Vec2& v) { return {-v.e1, v.e0}; }

// Largest-magnitude component non-negative, ties broken toward e0.
Vec2 fix_sign(const Vec2& v) {
  const double lead = std::abs(v.e0) >= std::abs(v.e1) ? v.e0 : v.e1;
  return lead < 0.0 ? -v : v;
}

Vec2 normalized(const Vec2& v) {
  const double n = v.norm();
  return {v.e0 / n, v.e1 / n};
}

}  // namespace

EigPair2 eig2(const Mat2& a) {
  const double alpha = trace2(a);
  const double beta = det2(a);
  const double disc = alpha * alpha - 4.0 * beta;
  std::complex<double> lp, lm;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    lp = 0.5 * (alpha + s);
    lm = 0.5 * (alpha - s);
  } else {
    const double s = std::sqrt(-disc);
    lp = {0.5 * alpha, 0.5 * s};
    lm = {0.5 * alpha, -0.5 * s};
  }
  if (std::abs(lm) > std::abs(lp)) std::swap(lp, lm);
  return {lp, lm, alpha, beta};
}

SvdResult svd2(const Mat2& j) {
  // Closed-form via the eigenproblem of A = J^T J. The discriminant is
  // rewritten as (a00-a11)^2 + 4 a01^2 and sigma_minus is recovered from
  // |det J| / sigma_plus; both forms avoid the cancellation in
  // (alpha - sqrt(disc)) / 2.
  const Mat2 a = matmul2(transpose2(j), j);
  const double alpha = trace2(a);
  const double gap = a.a00 - a.a11;
  const double disc = std::sqrt(gap * gap + 4.0 * a.a01 * a.a01);
  const double sp2 = 0.5 * (alpha + disc);
  const double sigma_plus = std::sqrt(std::max(sp2, 0.0));
  const double sigma_minus = sigma_plus > 0.0 ? std::abs(det2(j)) / sigma_plus : 0.0;

  SvdResult r;
  r.sigma_plus = sigma_plus;
  r.sigma_minus = std::min(sigma_minus, sigma_plus);

  if (sigma_plus == 0.0) {  // J = 0
    r.U = Mat2::identity();
    r.V = Mat2::identity();
    return r;
  }

  // v_plus spans the row space of A - sigma_minus^2 I (symmetric rank-1);
  // take the larger-norm row. Both rows vanish when sigma_plus == sigma_minus.
  const double sm2 = r.sigma_minus * r.sigma_minus;
  const Vec2 row0{a.a00 - sm2, a.a01};
  const Vec2 row1{a.a01, a.a11 - sm2};
  const double n0 = row0.norm_sq();
  const double n1 = row1.norm_sq();
  const double scale = a.frobenius_norm();
  Vec2 v_plus;
  if (std::max(n0, n1) <= 1e-28 * scale * scale) {
    v_plus = {1.0, 0.0};
  } else {
    v_plus = normalized(n0 >= n1 ? row0 : row1);
  }
  v_plus = fix_sign(v_plus);
  const Vec2 v_minus = fix_sign(rot90(v_plus));

  const Vec2 u_plus = normalized(matvec2(j, v_plus));
  // u_minus orthogonal to u_plus; orientation taken from J v_minus when the
  // smaller singular value carries signal, free (first component >= 0) when not.
  Vec2 u_minus = rot90(u_plus);
  const Vec2 jv = matvec2(j, v_minus);
  if (jv.norm() > 1e-15 * sigma_plus) {
    if (jv.dot(u_minus) < 0.0) u_minus = -u_minus;
  } else if (u_minus.e0 < 0.0 || (u_minus.e0 == 0.0 && u_minus.e1 < 0.0)) {
    u_minus = -u_minus;
  }

  r.U = Mat2::from_columns(u_plus, u_minus);
  r.V = Mat2::from_columns(v_plus, v_minus);
  return r;
}

Mat2 reg_inv_sigma(double sigma_plus, double sigma_minus, double threshold,
                   ThresholdMode mode) {
  const double floor =
      mode == ThresholdMode::Relative ? threshold * std::max(1.0, sigma_plus) : threshold;
  if (sigma_plus < floor) return Mat2::identity();
  if (sigma_minus < floor) return Mat2::diagonal(1.0 / sigma_plus, 1.0);
  return Mat2::diagonal(1.0 / sigma_plus, 1.0 / sigma_minus);
}

Vec2 solve2(const Mat2& a, const Vec2& b) {
  const double d = det2(a);
  if (std::abs(d) <= 1e-300) {
    throw SingularMatrixError("solve2: matrix is singular at working precision");
  }
  return {(a.a11 * b.e0 - a.a01 * b.e1) / d, (a.a00 * b.e1 - a.a10 * b.e0) / d};
}

}  // namespace w4
