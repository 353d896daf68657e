#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "w4/mat2.hpp"

namespace w4 {

/// Raised when a residual/Jacobian is evaluated outside the problem domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A benchmark system: residual F, analytic Jacobian, the per-component sum
/// of absolute values of the additive terms of F (the denominators of the
/// termination metric), canonical starts, and reference roots.
struct Problem {
  std::string name;
  std::function<Vec2(const Vec2&)> residual;
  std::function<Mat2(const Vec2&)> jacobian;
  std::function<Vec2(const Vec2&)> term_norms;
  std::vector<Vec2> starts;
  std::vector<Vec2> roots;
  std::function<void(const Vec2&)> domain_guard;  // throws DomainError

  void check_domain(const Vec2& x) const {
    if (domain_guard) domain_guard(x);
  }
};

enum class ProblemId {
  Rosenbrock,
  FreudensteinRoth,
  Powell,
  Brown,
  Beale,
  Hueso,
  Fujisawa,
};

inline constexpr ProblemId kAllProblems[] = {
    ProblemId::Rosenbrock, ProblemId::FreudensteinRoth, ProblemId::Powell, ProblemId::Brown,
    ProblemId::Beale,      ProblemId::Hueso,            ProblemId::Fujisawa,
};

const Problem& registry(ProblemId id);

const std::vector<Vec2>& known_roots(ProblemId id);

/// Name <-> id mapping for the CLI ("rosenbrock", "freudenstein-roth", ...).
std::string problem_name(ProblemId id);
ProblemId problem_from_name(const std::string& name);

}  // namespace w4
