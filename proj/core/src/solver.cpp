#include "w4/solver.hpp"

#include <cmath>

namespace w4 {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIterExceeded: return "MaxIterExceeded";
    case SolveStatus::Diverged: return "Diverged";
    case SolveStatus::SingularAbort: return "SingularAbort";
  }
  return "Unknown";
}

W4State w4_step(const W4State& state, const Vec2& f, const Preconditioners& pre, double dtau) {
  W4State next;
  next.x = state.x + dtau * matvec2(pre.X, state.p);
  next.p = (1.0 - 2.0 * dtau) * state.p - dtau * matvec2(pre.Y, f);
  next.step = state.step + 1;
  if (!next.x.finite() || !next.p.finite()) {
    throw NonFiniteIterateError("w4_step: iterate left the finite range");
  }
  return next;
}

Preconditioners w4sv_preconditioners(const Mat2& j, const W4Config& cfg) {
  const SvdResult svd = svd2(j);
  const Mat2 sigma_inv =
      reg_inv_sigma(svd.sigma_plus, svd.sigma_minus, cfg.sigma_threshold, cfg.threshold_mode);
  return {svd.V, matmul2(sigma_inv, transpose2(svd.U))};
}

double residual_metric(const Problem& problem, const Vec2& x) {
  const Vec2 f = problem.residual(x);
  const Vec2 norms = problem.term_norms(x);
  const double mx = std::abs(f.e0) / std::max(norms.e0, 1e-30);
  const double my = std::abs(f.e1) / std::max(norms.e1, 1e-30);
  return std::max(mx, my);
}

namespace {

bool diverged_iterate(const Vec2& x) { return !x.finite() || x.norm() > 1e300; }

SolveReport run_w4(const Problem& problem, const Vec2& x0, const W4Config& cfg,
                   const PreconditionerFn& pre_fn) {
  SolveReport report;
  W4State state{x0, Vec2{0.0, 0.0}, 0};
  try {
    for (std::uint64_t n = 0;; ++n) {
      if (diverged_iterate(state.x)) {
        report.status = SolveStatus::Diverged;
        report.iterations = n;
        report.final_x = state.x;
        report.message = "iterate diverged";
        return report;
      }
      const Vec2 f = problem.residual(state.x);
      const Mat2 jac = problem.jacobian(state.x);
      const SvdResult svd = svd2(jac);
      const double metric = residual_metric(problem, state.x);
      report.trace.push_back({n, state.x.e0, state.x.e1,
                              svd.sigma_plus > 0.0 ? svd.sigma_minus / svd.sigma_plus : 0.0,
                              f.norm_sq(), metric});
      if (metric < cfg.tol) {
        report.status = SolveStatus::Converged;
        report.iterations = n;
        report.final_x = state.x;
        return report;
      }
      if (n == cfg.max_iter) {
        report.status = SolveStatus::MaxIterExceeded;
        report.iterations = n;
        report.final_x = state.x;
        return report;
      }
      state = w4_step(state, f, pre_fn(jac), cfg.dtau);
    }
  } catch (const DomainError& e) {
    report.status = SolveStatus::Diverged;
    report.iterations = state.step;
    report.final_x = state.x;
    report.message = std::string("domain error: ") + e.what();
  } catch (const NonFiniteIterateError& e) {
    report.status = SolveStatus::Diverged;
    report.iterations = state.step;
    report.final_x = state.x;
    report.message = e.what();
  }
  return report;
}

}  // namespace

SolveReport solve_w4sv(const Problem& problem, const Vec2& x0, const W4Config& cfg) {
  return run_w4(problem, x0, cfg,
                [&cfg](const Mat2& j) { return w4sv_preconditioners(j, cfg); });
}

SolveReport solve_w4_generic(const Problem& problem, const Vec2& x0, const W4Config& cfg,
                             const PreconditionerFn& pre_fn) {
  return run_w4(problem, x0, cfg, pre_fn);
}

}  // namespace w4
