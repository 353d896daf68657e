#pragma once

#include <cmath>

namespace w4 {

struct Vec2 {
  double e0 = 0.0;
  double e1 = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double a, double b) : e0(a), e1(b) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {e0 + o.e0, e1 + o.e1}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {e0 - o.e0, e1 - o.e1}; }
  constexpr Vec2 operator-() const { return {-e0, -e1}; }
  constexpr Vec2 operator*(double s) const { return {e0 * s, e1 * s}; }

  constexpr double dot(const Vec2& o) const { return e0 * o.e0 + e1 * o.e1; }
  double norm() const { return std::hypot(e0, e1); }
  constexpr double norm_sq() const { return e0 * e0 + e1 * e1; }

  bool finite() const { return std::isfinite(e0) && std::isfinite(e1); }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Row-major 2x2 real matrix.
struct Mat2 {
  double a00 = 0.0, a01 = 0.0;
  double a10 = 0.0, a11 = 0.0;

  constexpr Mat2() = default;
  constexpr Mat2(double m00, double m01, double m10, double m11)
      : a00(m00), a01(m01), a10(m10), a11(m11) {}

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diagonal(double d0, double d1) { return {d0, 0.0, 0.0, d1}; }
  static constexpr Mat2 from_columns(const Vec2& c0, const Vec2& c1) {
    return {c0.e0, c1.e0, c0.e1, c1.e1};
  }
  static constexpr Mat2 outer(const Vec2& u, const Vec2& v) {
    return {u.e0 * v.e0, u.e0 * v.e1, u.e1 * v.e0, u.e1 * v.e1};
  }

  constexpr Vec2 col(int i) const { return i == 0 ? Vec2{a00, a10} : Vec2{a01, a11}; }
  constexpr Vec2 row(int i) const { return i == 0 ? Vec2{a00, a01} : Vec2{a10, a11}; }

  constexpr Mat2 operator+(const Mat2& o) const {
    return {a00 + o.a00, a01 + o.a01, a10 + o.a10, a11 + o.a11};
  }
  constexpr Mat2 operator-(const Mat2& o) const {
    return {a00 - o.a00, a01 - o.a01, a10 - o.a10, a11 - o.a11};
  }
  constexpr Mat2 operator*(double s) const { return {a00 * s, a01 * s, a10 * s, a11 * s}; }

  bool finite() const {
    return std::isfinite(a00) && std::isfinite(a01) && std::isfinite(a10) && std::isfinite(a11);
  }

  double frobenius_norm() const {
    return std::sqrt(a00 * a00 + a01 * a01 + a10 * a10 + a11 * a11);
  }
};

constexpr Mat2 matmul2(const Mat2& a, const Mat2& b) {
  return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
          a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
}

constexpr Vec2 matvec2(const Mat2& a, const Vec2& v) {
  return {a.a00 * v.e0 + a.a01 * v.e1, a.a10 * v.e0 + a.a11 * v.e1};
}

constexpr Mat2 transpose2(const Mat2& a) { return {a.a00, a.a10, a.a01, a.a11}; }

constexpr double det2(const Mat2& a) { return a.a00 * a.a11 - a.a01 * a.a10; }

constexpr double trace2(const Mat2& a) { return a.a00 + a.a11; }

}  // namespace w4
