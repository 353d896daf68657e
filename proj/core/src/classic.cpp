#include "w4/classic.hpp"

#include <cmath>

namespace w4 {
namespace {

bool diverged_iterate(const Vec2& x) { return !x.finite() || x.norm() > 1e300; }

// Shared trace/termination loop; `advance` maps the current point to the next
// one and may throw SingularMatrixError.
SolveReport run_classic(const Problem& problem, const Vec2& x0, const W4Config& cfg,
                        const std::function<Vec2(const Vec2&, const Vec2&, const Mat2&)>& advance) {
  SolveReport report;
  Vec2 x = x0;
  std::uint64_t n = 0;
  try {
    for (;; ++n) {
      if (diverged_iterate(x)) {
        report.status = SolveStatus::Diverged;
        report.iterations = n;
        report.final_x = x;
        report.message = "iterate diverged";
        return report;
      }
      const Vec2 f = problem.residual(x);
      const Mat2 jac = problem.jacobian(x);
      const SvdResult svd = svd2(jac);
      const double metric = residual_metric(problem, x);
      report.trace.push_back({n, x.e0, x.e1,
                              svd.sigma_plus > 0.0 ? svd.sigma_minus / svd.sigma_plus : 0.0,
                              f.norm_sq(), metric});
      if (metric < cfg.tol) {
        report.status = SolveStatus::Converged;
        report.iterations = n;
        report.final_x = x;
        return report;
      }
      if (n == cfg.max_iter) {
        report.status = SolveStatus::MaxIterExceeded;
        report.iterations = n;
        report.final_x = x;
        return report;
      }
      x = advance(x, f, jac);
    }
  } catch (const SingularMatrixError& e) {
    report.status = SolveStatus::SingularAbort;
    report.message = e.what();
  } catch (const DomainError& e) {
    report.status = SolveStatus::Diverged;
    report.message = std::string("domain error: ") + e.what();
  }
  report.iterations = n;
  report.final_x = x;
  return report;
}

}  // namespace

SolveReport solve_newton(const Problem& problem, const Vec2& x0, const W4Config& cfg) {
  return run_classic(problem, x0, cfg, [](const Vec2& x, const Vec2& f, const Mat2& jac) {
    return x - solve2(jac, f);
  });
}

SolveReport solve_damped_newton(const Problem& problem, const Vec2& x0, const W4Config& cfg) {
  return run_classic(problem, x0, cfg, [&cfg](const Vec2& x, const Vec2& f, const Mat2& jac) {
    return x - cfg.dtau * solve2(jac, f);
  });
}

SolveReport solve_broyden_good(const Problem& problem, const Vec2& x0, const W4Config& cfg) {
  BroydenState state{x0, problem.jacobian(x0)};
  auto advance = [&state, &problem, &cfg](const Vec2& x, const Vec2& f, const Mat2&) {
    const Vec2 delta = -cfg.dtau * solve2(state.B, f);
    const Vec2 x_next = x + delta;
    const Vec2 df = problem.residual(x_next) - f;
    const double dd = delta.norm_sq();
    if (dd > 0.0) {
      const Vec2 resid = df - matvec2(state.B, delta);
      state.B = state.B + Mat2::outer(resid, delta) * (1.0 / dd);
    }
    state.x = x_next;
    return x_next;
  };
  return run_classic(problem, x0, cfg, advance);
}

}  // namespace w4
