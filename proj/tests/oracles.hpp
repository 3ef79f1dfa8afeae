#pragma once

// Reference distances computed without the library's projection code: closed
// forms where they exist, otherwise dense sampling of an explicit
// parametrization followed by a golden-section polish of the best sample.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "eikon/point.hpp"

namespace oracle {

using eikon::Point;
constexpr double kPi = std::numbers::pi;

inline double disk_sd(const Point& x, double r = 1.0) { return r - eikon::norm(x); }

// [-1, 1]^2: inside, the nearest wall; outside, the distance to the box.
inline double square_sd(const Point& x) {
  double ax = std::abs(x[0]), ay = std::abs(x[1]);
  if (ax < 1.0 && ay < 1.0) return 1.0 - std::max(ax, ay);
  return -std::hypot(std::max(ax - 1.0, 0.0), std::max(ay - 1.0, 0.0));
}

inline double brute_min(const std::vector<Point>& pts, const Point& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& p : pts) best = std::min(best, eikon::squared_norm(p - x));
  return std::sqrt(best);
}

// min_t |c(t) - x| for t in [t0, t1]: n samples, then golden section around
// the best one.
inline double curve_distance(const std::function<Point(double)>& c, double t0, double t1, const Point& x,
                             int n = 20000) {
  double best_t = t0, best = std::numeric_limits<double>::infinity();
  const double step = (t1 - t0) / n;
  for (int i = 0; i <= n; ++i) {
    double t = t0 + step * i;
    double d = eikon::squared_norm(c(t) - x);
    if (d < best) {
      best = d;
      best_t = t;
    }
  }
  double lo = std::max(t0, best_t - step), hi = std::min(t1, best_t + step);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
    if (eikon::squared_norm(c(a) - x) < eikon::squared_norm(c(b) - x)) hi = b;
    else lo = a;
  }
  return std::min(std::sqrt(best), eikon::norm(c(0.5 * (lo + hi)) - x));
}

inline double ellipse_distance(double a, double b, const Point& x) {
  return curve_distance([&](double t) { return Point(a * std::cos(t), b * std::sin(t)); }, 0.0, 2.0 * kPi, x);
}

inline bool ellipse_inside(double a, double b, const Point& x) {
  return (x[0] / a) * (x[0] / a) + (x[1] / b) * (x[1] / b) < 1.0;
}

// Cusp x1 = |x2|^(1+alpha), parametrized by x2 in [-reach, reach].
inline double cusp_distance(double alpha, const Point& x, double reach) {
  auto c = [&](double s) { return Point(std::pow(std::abs(s), 1.0 + alpha), s); };
  double up = curve_distance(c, 0.0, reach, x);
  double down = curve_distance(c, -reach, 0.0, x);
  return std::min(up, down);
}

// Power-law spiral walls r = (1 + t)^-beta (outer) and r = (1 + t + pi)^-beta
// (inner), searched over t in [t0, t1].
inline double spiral_distance(double beta, bool exponential, const Point& x, double t0, double t1, int n = 200000) {
  auto f = [&](double t) { return exponential ? std::exp(-beta * t) : std::pow(1.0 + t, -beta); };
  auto outer = [&](double t) { return Point(std::cos(t), std::sin(t)) * f(t); };
  auto inner = [&](double t) { return Point(std::cos(t), std::sin(t)) * f(t + kPi); };
  return std::min(curve_distance(outer, t0, t1, x, n), curve_distance(inner, t0, t1, x, n));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

}  // namespace oracle
