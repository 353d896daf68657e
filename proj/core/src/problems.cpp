#include "w4/problems.hpp"

#include <array>
#include <cmath>

namespace w4 {
namespace {

Problem make_rosenbrock() {
  Problem p;
  p.name = "rosenbrock";
  p.residual = [](const Vec2& v) {
    return Vec2{10.0 * (v.e1 - v.e0 * v.e0), 1.0 - v.e0};
  };
  p.jacobian = [](const Vec2& v) { return Mat2{-20.0 * v.e0, 10.0, -1.0, 0.0}; };
  p.term_norms = [](const Vec2& v) {
    return Vec2{std::abs(10.0 * v.e1) + std::abs(10.0 * v.e0 * v.e0), 1.0 + std::abs(v.e0)};
  };
  // Table start first (the bench default), appendix start second.
  p.starts = {{-1.2, 1.0}, {1.2, 1.0}};
  p.roots = {{1.0, 1.0}};
  return p;
}

Problem make_freudenstein_roth() {
  Problem p;
  p.name = "freudenstein-roth";
  p.residual = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Vec2{-13.0 + x + ((5.0 - y) * y - 2.0) * y, -29.0 + x + ((y + 1.0) * y - 14.0) * y};
  };
  p.jacobian = [](const Vec2& v) {
    const double y = v.e1;
    return Mat2{1.0, 10.0 * y - 3.0 * y * y - 2.0, 1.0, 3.0 * y * y + 2.0 * y - 14.0};
  };
  p.term_norms = [](const Vec2& v) {
    const double ax = std::abs(v.e0), ay = std::abs(v.e1);
    return Vec2{13.0 + ax + 5.0 * ay * ay + ay * ay * ay + 2.0 * ay,
                29.0 + ax + ay * ay * ay + ay * ay + 14.0 * ay};
  };
  p.starts = {{6.0, 3.0}};
  p.roots = {{5.0, 4.0}};
  return p;
}

Problem make_powell() {
  Problem p;
  p.name = "powell";
  p.residual = [](const Vec2& v) {
    return Vec2{1e4 * v.e0 * v.e1 - 1.0, std::exp(-v.e0) + std::exp(-v.e1) - 1.0001};
  };
  p.jacobian = [](const Vec2& v) {
    return Mat2{1e4 * v.e1, 1e4 * v.e0, -std::exp(-v.e0), -std::exp(-v.e1)};
  };
  p.term_norms = [](const Vec2& v) {
    return Vec2{std::abs(1e4 * v.e0 * v.e1) + 1.0, std::exp(-v.e0) + std::exp(-v.e1) + 1.0001};
  };
  p.starts = {{0.0, 1.0}, {1.0, 1.0}};
  // Root of e^-x + e^(-1e-4/x) = 1.0001; the mirror image is also a root
  // since the system is symmetric in (x, y).
  p.roots = {{1.0981593296998175e-05, 9.106146739866524},
             {9.106146739866524, 1.0981593296998175e-05}};
  return p;
}

Problem make_brown() {
  Problem p;
  p.name = "brown";
  p.residual = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Vec2{x * y * y - 2.0 * y + x - 1e6, x * x * y - 2.0 * x + y - 2e-6};
  };
  p.jacobian = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Mat2{y * y + 1.0, 2.0 * x * y - 2.0, 2.0 * x * y - 2.0, x * x + 1.0};
  };
  p.term_norms = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Vec2{std::abs(x * y * y) + 2.0 * std::abs(y) + std::abs(x) + 1e6,
                std::abs(x * x * y) + 2.0 * std::abs(x) + std::abs(y) + 2e-6};
  };
  p.starts = {{1.0, 1.0}};
  p.roots = {{1e6, 2e-6}};
  return p;
}

Problem make_beale() {
  Problem p;
  p.name = "beale";
  p.residual = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Vec2{1.5 - x * (1.0 - y), 2.25 - x * (1.0 - y * y)};
  };
  p.jacobian = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Mat2{y - 1.0, x, y * y - 1.0, 2.0 * x * y};
  };
  p.term_norms = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Vec2{1.5 + std::abs(x) + std::abs(x * y), 2.25 + std::abs(x) + std::abs(x * y * y)};
  };
  p.starts = {{1.0, 1.0}, {0.0, 2.0}};
  p.roots = {{3.0, 0.5}};
  return p;
}

Problem make_hueso() {
  Problem p;
  p.name = "hueso";
  p.domain_guard = [](const Vec2& v) {
    if (std::abs(v.e1) < 1e-12) throw DomainError("hueso: cos(2x/y) undefined near y = 0");
  };
  p.residual = [guard = p.domain_guard](const Vec2& v) {
    guard(v);
    const double x = v.e0, y = v.e1;
    const double xm1 = x - 1.0, ym2 = y - 2.0;
    return Vec2{xm1 * xm1 * (x - y), std::pow(ym2, 5) * std::cos(2.0 * x / y)};
  };
  p.jacobian = [guard = p.domain_guard](const Vec2& v) {
    guard(v);
    const double x = v.e0, y = v.e1;
    const double xm1 = x - 1.0, ym2 = y - 2.0;
    const double c = std::cos(2.0 * x / y), s = std::sin(2.0 * x / y);
    const double ym2_4 = ym2 * ym2 * ym2 * ym2;
    return Mat2{2.0 * xm1 * (x - y) + xm1 * xm1, -xm1 * xm1,
                -ym2_4 * ym2 * s * 2.0 / y,
                5.0 * ym2_4 * c + ym2_4 * ym2 * s * 2.0 * x / (y * y)};
  };
  p.term_norms = [guard = p.domain_guard](const Vec2& v) {
    guard(v);
    const double x = v.e0, y = v.e1;
    const double ax = std::abs(x), ay = std::abs(y);
    // Monomial expansions: (x-1)^2 (x-y) = x^3 - x^2 y - 2x^2 + 2xy + x - y,
    // and for (y-2)^5: sum_k C(5,k) |y|^k 2^(5-k) = (|y| + 2)^5.
    return Vec2{ax * ax * ax + x * x * ay + 2.0 * x * x + 2.0 * ax * ay + ax + ay,
                std::abs(std::cos(2.0 * x / y)) * std::pow(std::abs(y) + 2.0, 5)};
  };
  p.starts = {{1.5, 2.5}};
  p.roots = {{1.0, 2.0}};
  return p;
}

Problem make_fujisawa() {
  Problem p;
  p.name = "fujisawa";
  p.residual = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Vec2{x * x + y * y - 4.0, x * x * y - 1.0};
  };
  p.jacobian = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Mat2{2.0 * x, 2.0 * y, 2.0 * x * y, x * x};
  };
  p.term_norms = [](const Vec2& v) {
    const double x = v.e0, y = v.e1;
    return Vec2{x * x + y * y + 4.0, std::abs(x * x * y) + 1.0};
  };
  p.starts = {{0.0, 1.0}, {0.0, -1.0}};
  // x^2 = 1/y on the circle x^2 + y^2 = 4; the positive roots of
  // y^3 - 4y + 1 = 0 give two mirror pairs.
  p.roots = {{0.7330767879460008, 1.8608058531117034},
             {-0.7330767879460008, 1.8608058531117034},
             {1.9837924115113531, 0.2541016883650524},
             {-1.9837924115113531, 0.2541016883650524}};
  return p;
}

}  // namespace

const Problem& registry(ProblemId id) {
  static const std::array<Problem, 7> problems = {
      make_rosenbrock(), make_freudenstein_roth(), make_powell(), make_brown(),
      make_beale(),      make_hueso(),             make_fujisawa()};
  return problems[static_cast<int>(id)];
}

const std::vector<Vec2>& known_roots(ProblemId id) { return registry(id).roots; }

std::string problem_name(ProblemId id) { return registry(id).name; }

ProblemId problem_from_name(const std::string& name) {
  for (ProblemId id : kAllProblems) {
    if (registry(id).name == name) return id;
  }
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace w4
