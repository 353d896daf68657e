#pragma once

#include <array>

#include "w4/solver.hpp"

namespace w4 {

/// Dense 4x4 real matrix, row-major. Only what the spectral checks need.
struct Mat4 {
  std::array<double, 16> m{};

  double& at(int r, int c) { return m[4 * r + c]; }
  double at(int r, int c) const { return m[4 * r + c]; }

  static Mat4 identity();
  Mat4 operator-(const Mat4& o) const;
  Mat4 operator*(const Mat4& o) const;
  std::array<double, 4> operator*(const std::array<double, 4>& v) const;
  double frobenius_norm() const;
  /// Exact cofactor expansion.
  double det() const;
};

/// The error-propagation matrix [[I, -dtau X], [dtau Y J, (1-2 dtau) I]].
struct WMatrix {
  Mat4 entries;
  double dtau = 0.0;
};

struct SpectrumReport {
  bool pass = false;
  double residual = 0.0;   // Frobenius norm of (W - (1-dtau) I)^2, or det(W - I)
  double residual2 = 0.0;  // det(W - (1-dtau) I) for the singular check
};

struct SingularStepGeometry {
  double theta = 0.0;  // angle between u_plus^(n) and F(x^(n)), in [0, pi]
  double phi = 0.0;    // angle between v_plus^(n) and v_plus^(n+1), in [0, pi]
  double sigma_plus = 0.0;
  bool degenerate = false;
};

struct IncrementReport {
  bool pass = false;
  double error = 0.0;  // |map increment - closed-form increment|
  Vec2 map_increment;
  Vec2 formula_increment;
};

struct ContractionReport {
  bool pass = false;
  int trials_failed = 0;
  int power = 0;  // the k at which contraction was certified
};

WMatrix build_w_matrix(const Mat2& j, const Preconditioners& pre, double dtau);

/// Verifies (W - (1-dtau) I)^2 = 0, i.e. every eigenvalue equals 1 - dtau.
SpectrumReport check_nonsingular_spectrum(const WMatrix& w);

/// Verifies det(W - I) = 0 and det(W - (1-dtau) I) = 0 at a rank-1 Jacobian.
SpectrumReport check_singular_spectrum(const WMatrix& w, double dtau);

SingularStepGeometry singular_step_geometry(const Vec2& f, const SvdResult& svd_n,
                                            const SvdResult& svd_next, double eps_align = 1e-8);

/// Runs two dtau = 1/2 steps from (x_n, p = 0) at a singular Jacobian and
/// checks x^(n+2) - x^(n+1) against the closed-form singular-step increment.
IncrementReport verify_increment_formula(const Problem& problem, const Vec2& x_n,
                                         const W4Config& cfg);

/// Checks |W^k e| < |e| for random error vectors (k = 8, falling back to 64).
ContractionReport check_error_contraction(const WMatrix& w, int trials, unsigned seed = 12345);

}  // namespace w4
