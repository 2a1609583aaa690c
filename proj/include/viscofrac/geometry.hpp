#pragma once

#include <array>
#include <cmath>

namespace viscofrac {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double a) const { return {a * x, a * y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  Vec2& operator*=(double a) { x *= a; y *= a; return *this; }

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
  // 90-degree counterclockwise rotation
  Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double a, const Vec2& v) { return v * a; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// 2x2 matrix, row major.
struct Mat2 {
  double a11 = 0, a12 = 0, a21 = 0, a22 = 0;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Mat2 operator+(const Mat2& o) const { return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22}; }
  Mat2 operator-(const Mat2& o) const { return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22}; }
  Mat2 operator*(double s) const { return {s * a11, s * a12, s * a21, s * a22}; }
  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }
};

inline double ddot(const Mat2& a, const Mat2& b) {
  return a.a11 * b.a11 + a.a12 * b.a12 + a.a21 * b.a21 + a.a22 * b.a22;
}

/// Symmetric 2x2 matrix stored as (xx, yy, xy).
struct SymMat2 {
  double xx = 0, yy = 0, xy = 0;

  SymMat2() = default;
  SymMat2(double xx_, double yy_, double xy_) : xx(xx_), yy(yy_), xy(xy_) {}

  static SymMat2 identity() { return {1, 1, 0}; }

  SymMat2 operator+(const SymMat2& o) const { return {xx + o.xx, yy + o.yy, xy + o.xy}; }
  SymMat2 operator-(const SymMat2& o) const { return {xx - o.xx, yy - o.yy, xy - o.xy}; }
  SymMat2 operator*(double a) const { return {a * xx, a * yy, a * xy}; }
  SymMat2& operator+=(const SymMat2& o) { xx += o.xx; yy += o.yy; xy += o.xy; return *this; }

  double trace() const { return xx + yy; }
  Mat2 full() const { return {xx, xy, xy, yy}; }
  double norm2() const { return xx * xx + yy * yy + 2.0 * xy * xy; }
  double norm() const { return std::sqrt(norm2()); }
};

inline SymMat2 operator*(double a, const SymMat2& m) { return m * a; }

inline SymMat2 sym(const Mat2& m) {
  return {m.a11, m.a22, 0.5 * (m.a12 + m.a21)};
}

/// Frobenius inner product A:B for symmetric matrices.
inline double ddot(const SymMat2& a, const SymMat2& b) {
  return a.xx * b.xx + a.yy * b.yy + 2.0 * a.xy * b.xy;
}

/// Signed twice-area of triangle (a,b,c); positive for counterclockwise.
inline double orient2(const Vec2& a, const Vec2& b, const Vec2& c) {
  return cross(b - a, c - a);
}

/// Quintic smoothstep on [0,1]: 0 -> 1 with vanishing first and second
/// derivatives at both ends.
inline double smoothstep5(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}
inline double smoothstep5_d1(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double u = t * (1.0 - t);
  return 30.0 * u * u;
}
inline double smoothstep5_d2(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 60.0 * t * (1.0 - t) * (1.0 - 2.0 * t);
}
inline double smoothstep5_d3(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 60.0 * (6.0 * t * t - 6.0 * t + 1.0);
}

}  // namespace viscofrac
