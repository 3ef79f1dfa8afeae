#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "eikon/point.hpp"

namespace eikon::detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Number of coarse samples per closed component (or per spiral winding)
// before golden-section refinement.
inline constexpr int kCoarseSamples = 1024;

// Precomputed coarse boundary samples for shapes whose projection needs a
// global scan over a fixed parametrization.
struct ShapeCache {
  // 2D ellipse: parameter t_i = 2 pi i / n and the boundary points.
  std::vector<double> params;
  std::vector<Point> points;
  // 3D ellipsoid: unit directions u on a latitude/longitude grid (the
  // boundary point is center + diag(semi_axes) u).
  int n_lat = 0;
  int n_lon = 0;
  std::vector<Point> directions;
};

// Angle of (x, y) shifted into [base, base + 2 pi).
inline double angle_from(double y, double x, double base) {
  double a = std::atan2(y, x);
  double k = std::floor((a - base) / kTwoPi);
  a -= k * kTwoPi;
  if (a < base) a += kTwoPi;
  if (a >= base + kTwoPi) a -= kTwoPi;
  return a;
}

// Closest point on segment [a, b] to x, with the clamped parameter.
inline Point closest_on_segment(const Point& a, const Point& b, const Point& x, double* t_out = nullptr) {
  Point e = b - a;
  double len2 = squared_norm(e);
  double t = len2 > 0.0 ? dot(x - a, e) / len2 : 0.0;
  if (t < 0.0) t = 0.0;
  if (t > 1.0) t = 1.0;
  if (t_out) *t_out = t;
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return a + e * t;
}

}  // namespace eikon::detail

#include <random>

namespace eikon::detail {

// Uniform double in [0, 1) from the top 53 bits; spelled out so results do
// not depend on the standard library's distribution implementation.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace eikon::detail
