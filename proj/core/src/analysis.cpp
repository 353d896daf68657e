#include "w4/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace w4 {

Mat4 Mat4::identity() {
  Mat4 r;
  for (int i = 0; i < 4; ++i) r.at(i, i) = 1.0;
  return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.m[i] = m[i] - o.m[i];
  return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

std::array<double, 4> Mat4::operator*(const std::array<double, 4>& v) const {
  std::array<double, 4> r{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) r[i] += at(i, k) * v[k];
  }
  return r;
}

double Mat4::frobenius_norm() const {
  double s = 0.0;
  for (double e : m) s += e * e;
  return std::sqrt(s);
}

double Mat4::det() const {
  auto minor3 = [this](int r0, int r1, int r2, int c0, int c1, int c2) {
    return at(r0, c0) * (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) -
           at(r0, c1) * (at(r1, c0) * at(r2, c2) - at(r1, c2) * at(r2, c0)) +
           at(r0, c2) * (at(r1, c0) * at(r2, c1) - at(r1, c1) * at(r2, c0));
  };
  return at(0, 0) * minor3(1, 2, 3, 1, 2, 3) - at(0, 1) * minor3(1, 2, 3, 0, 2, 3) +
         at(0, 2) * minor3(1, 2, 3, 0, 1, 3) - at(0, 3) * minor3(1, 2, 3, 0, 1, 2);
}

WMatrix build_w_matrix(const Mat2& j, const Preconditioners& pre, double dtau) {
  WMatrix w;
  w.dtau = dtau;
  const Mat2 yj = matmul2(pre.Y, j);
  Mat4& e = w.entries;
  e.at(0, 0) = 1.0;
  e.at(1, 1) = 1.0;
  e.at(0, 2) = -dtau * pre.X.a00;
  e.at(0, 3) = -dtau * pre.X.a01;
  e.at(1, 2) = -dtau * pre.X.a10;
  e.at(1, 3) = -dtau * pre.X.a11;
  e.at(2, 0) = dtau * yj.a00;
  e.at(2, 1) = dtau * yj.a01;
  e.at(3, 0) = dtau * yj.a10;
  e.at(3, 1) = dtau * yj.a11;
  e.at(2, 2) = 1.0 - 2.0 * dtau;
  e.at(3, 3) = 1.0 - 2.0 * dtau;
  return w;
}

SpectrumReport check_nonsingular_spectrum(const WMatrix& w) {
  Mat4 shifted = w.entries;
  const double d = 1.0 - w.dtau;
  for (int i = 0; i < 4; ++i) shifted.at(i, i) -= d;
  const Mat4 sq = shifted * shifted;
  SpectrumReport r;
  r.residual = sq.frobenius_norm();
  r.pass = r.residual <= 1e-10 * (1.0 + w.entries.frobenius_norm());
  return r;
}

SpectrumReport check_singular_spectrum(const WMatrix& w, double dtau) {
  Mat4 minus_one = w.entries;
  Mat4 minus_d = w.entries;
  for (int i = 0; i < 4; ++i) {
    minus_one.at(i, i) -= 1.0;
    minus_d.at(i, i) -= 1.0 - dtau;
  }
  SpectrumReport r;
  r.residual = std::abs(minus_one.det());
  r.residual2 = std::abs(minus_d.det());
  const double nw = w.entries.frobenius_norm();
  const double tol = 1e-8 * nw * nw * nw * nw;
  r.pass = r.residual <= tol && r.residual2 <= tol;
  return r;
}

SingularStepGeometry singular_step_geometry(const Vec2& f, const SvdResult& svd_n,
                                            const SvdResult& svd_next, double eps_align) {
  SingularStepGeometry g;
  g.sigma_plus = svd_n.sigma_plus;
  const double fn = f.norm();
  const double cos_theta = fn > 0.0 ? svd_n.u_plus().dot(f) / fn : 1.0;
  const double cos_phi = svd_n.v_plus().dot(svd_next.v_plus());
  g.theta = std::acos(std::clamp(cos_theta, -1.0, 1.0));
  g.phi = std::acos(std::clamp(cos_phi, -1.0, 1.0));

  if (std::abs(cos_phi) <= eps_align && std::abs(cos_theta) <= eps_align) {
    g.degenerate = true;  // condition (i): F ⟂ u+ and v+' ⟂ v+
    return g;
  }
  // Condition (ii): tan(phi) = sigma_plus * tan(theta).
  const double tan_phi = std::tan(g.phi);
  const double st = g.sigma_plus * std::tan(g.theta);
  if (std::isfinite(tan_phi) && std::isfinite(st) &&
      std::abs(tan_phi - st) <= eps_align * (1.0 + std::abs(st))) {
    g.degenerate = true;
  }
  return g;
}

IncrementReport verify_increment_formula(const Problem& problem, const Vec2& x_n,
                                         const W4Config& cfg) {
  IncrementReport r;
  const Vec2 f = problem.residual(x_n);
  const SvdResult svd_n = svd2(problem.jacobian(x_n));

  // Two map steps from (x_n, p = 0) with dtau = 1/2.
  W4Config half = cfg;
  half.dtau = 0.5;
  W4State state{x_n, Vec2{0.0, 0.0}, 0};
  state = w4_step(state, problem.residual(state.x),
                  w4sv_preconditioners(problem.jacobian(state.x), half), half.dtau);
  const Vec2 x1 = state.x;
  state = w4_step(state, problem.residual(state.x),
                  w4sv_preconditioners(problem.jacobian(state.x), half), half.dtau);
  r.map_increment = state.x - x1;

  // Closed form: -(F cos(theta))/(4 sigma+) v+^(n+1) - (F sin(theta))/4 v-^(n+1),
  // with theta the angle of F in the (u+, u-) frame at step n.
  const SvdResult svd_next = svd2(problem.jacobian(x1));
  const double f_cos = svd_n.u_plus().dot(f);
  const double f_sin = svd_n.u_minus().dot(f);
  r.formula_increment = -(f_cos / (4.0 * svd_n.sigma_plus)) * svd_next.v_plus() -
                        (f_sin / 4.0) * svd_next.v_minus();

  r.error = (r.map_increment - r.formula_increment).norm();
  r.pass = r.error <= 1e-10 * f.norm();
  return r;
}

ContractionReport check_error_contraction(const WMatrix& w, int trials, unsigned seed) {
  ContractionReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int power : {8, 64}) {
    report.power = power;
    report.trials_failed = 0;
    for (int t = 0; t < trials; ++t) {
      std::array<double, 4> e{dist(rng), dist(rng), dist(rng), dist(rng)};
      double n0 = 0.0;
      for (double c : e) n0 += c * c;
      if (n0 == 0.0) continue;
      std::array<double, 4> v = e;
      for (int k = 0; k < power; ++k) v = w.entries * v;
      double nk = 0.0;
      for (double c : v) nk += c * c;
      if (!(nk < n0)) ++report.trials_failed;
    }
    if (report.trials_failed == 0) {
      report.pass = true;
      return report;
    }
  }
  report.pass = false;
  return report;
}

}  // namespace w4
