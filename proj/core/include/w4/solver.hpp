#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "w4/decomp.hpp"
#include "w4/mat2.hpp"
#include "w4/problems.hpp"

namespace w4 {

/// Raised when an update produces NaN/Inf components.
struct NonFiniteIterateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct W4State {
  Vec2 x;
  Vec2 p;
  std::uint64_t step = 0;
};

struct W4Config {
  double dtau = 0.5;                 // in (0, 1]
  std::uint64_t max_iter = 1000000;  // the triangle cutoff of the tables
  double tol = 1e-8;
  double sigma_threshold = 1e-15;
  ThresholdMode threshold_mode = ThresholdMode::Relative;
};

struct Preconditioners {
  Mat2 X;
  Mat2 Y;
};

using PreconditionerFn = std::function<Preconditioners(const Mat2&)>;

enum class SolveStatus { Converged, MaxIterExceeded, Diverged, SingularAbort };

std::string to_string(SolveStatus s);

struct TraceRow {
  std::uint64_t step = 0;
  double x = 0.0;
  double y = 0.0;
  double sigma_ratio = 0.0;  // sigma_minus / sigma_plus, 0 when sigma_plus = 0
  double f_norm_sq = 0.0;    // |F|^2 = f_x^2 + f_y^2
  double err_metric = 0.0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::Diverged;
  std::uint64_t iterations = 0;
  Vec2 final_x;
  std::vector<TraceRow> trace;
  std::string message;
};

/// One application of the two-field map:
///   x' = x + dtau * X * p        (same-step p)
///   p' = (1 - 2 dtau) p - dtau * Y * F
W4State w4_step(const W4State& state, const Vec2& f, const Preconditioners& pre, double dtau);

/// X = V, Y = SigmaHatInv * U^T from the SVD of J.
Preconditioners w4sv_preconditioners(const Mat2& j, const W4Config& cfg);

/// max_i |F_i| / max(termnorm_i, 1e-30); convergence is declared below tol.
double residual_metric(const Problem& problem, const Vec2& x);

SolveReport solve_w4sv(const Problem& problem, const Vec2& x0, const W4Config& cfg);

/// Same driver with a caller-supplied preconditioner factory.
SolveReport solve_w4_generic(const Problem& problem, const Vec2& x0, const W4Config& cfg,
                             const PreconditionerFn& pre_fn);

}  // namespace w4
