#pragma once

#include "w4/solver.hpp"

namespace w4 {

/// Good Broyden iterate: the point and the current Jacobian approximation.
struct BroydenState {
  Vec2 x;
  Mat2 B;
};

/// Full Newton-Raphson: x' = x - J(x)^-1 F(x).
SolveReport solve_newton(const Problem& problem, const Vec2& x0, const W4Config& cfg);

/// Damped Newton-Raphson: x' = x - dtau * J(x)^-1 F(x).
SolveReport solve_damped_newton(const Problem& problem, const Vec2& x0, const W4Config& cfg);

/// Good Broyden quasi-Newton with B0 = J(x0) and the step scaled by dtau.
SolveReport solve_broyden_good(const Problem& problem, const Vec2& x0, const W4Config& cfg);

}  // namespace w4
