#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <span>

#include "eikon/error.hpp"

namespace eikon {

// A point (or vector) in R^2 or R^3. The dimension is part of the value;
// combining points of different dimension throws kDimensionMismatch.
class Point {
 public:
  Point() = default;
  Point(double x, double y) : c_{x, y, 0.0}, dim_(2) {}
  Point(double x, double y, double z) : c_{x, y, z}, dim_(3) {}

  static Point zeros(int dim) {
    check_dim(dim);
    Point p;
    p.dim_ = dim;
    return p;
  }

  static Point from(std::span<const double> coords) {
    check_dim(static_cast<int>(coords.size()));
    Point p = zeros(static_cast<int>(coords.size()));
    for (int i = 0; i < p.dim_; ++i) p.c_[i] = coords[i];
    return p;
  }

  static Point unit(int dim, int axis) {
    Point p = zeros(dim);
    p.c_[axis] = 1.0;
    return p;
  }

  int dim() const noexcept { return dim_; }
  double operator[](int i) const noexcept { return c_[i]; }
  double& operator[](int i) noexcept { return c_[i]; }
  std::span<const double> coords() const noexcept { return {c_.data(), static_cast<std::size_t>(dim_)}; }

  bool finite() const noexcept {
    for (int i = 0; i < dim_; ++i)
      if (!std::isfinite(c_[i])) return false;
    return true;
  }

  Point& operator+=(const Point& o) {
    same_dim(o);
    for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Point& operator-=(const Point& o) {
    same_dim(o);
    for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Point& operator*=(double s) noexcept {
    for (int i = 0; i < dim_; ++i) c_[i] *= s;
    return *this;
  }
  Point& operator/=(double s) noexcept {
    for (int i = 0; i < dim_; ++i) c_[i] /= s;
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend Point operator/(Point a, double s) { return a /= s; }
  friend Point operator-(Point a) { return a *= -1.0; }

  friend bool operator==(const Point& a, const Point& b) noexcept {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

  // Lexicographic by coordinates; used for deterministic output ordering.
  friend bool lex_less(const Point& a, const Point& b) noexcept {
    for (int i = 0; i < a.dim_; ++i) {
      if (a.c_[i] < b.c_[i]) return true;
      if (a.c_[i] > b.c_[i]) return false;
    }
    return false;
  }

  void same_dim(const Point& o) const {
    if (o.dim_ != dim_) throw Error(ErrorCode::kDimensionMismatch, "point dimensions differ");
  }

 private:
  static void check_dim(int dim) {
    if (dim != 2 && dim != 3) throw Error(ErrorCode::kDimensionMismatch, "points must have 2 or 3 coordinates");
  }

  std::array<double, 3> c_{};
  int dim_ = 0;
};

inline double dot(const Point& a, const Point& b) {
  a.same_dim(b);
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_norm(const Point& a) { return dot(a, a); }

inline double norm(const Point& a) {
  if (a.dim() == 2) return std::hypot(a[0], a[1]);
  return std::hypot(a[0], a[1], a[2]);
}

inline double distance(const Point& a, const Point& b) { return norm(a - b); }

inline Point normalized(const Point& a) { return a / norm(a); }

// Counter-clockwise quarter turn (2D only).
inline Point perp(const Point& a) { return {-a[1], a[0]}; }

}  // namespace eikon
