#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "eikon/projection.hpp"

namespace eikon {

struct SpiralRecord {
  double theta = 0.0;
  Point z;  // midpoint of the radial segment between the walls at angle theta
  double abs_z = 0.0;
  double bound = 0.0;  // f(theta) / f(theta + pi) - 1
  double measured_ratio = 0.0;  // d(z) / |z|
};

struct SpiralEvidence {
  std::vector<SpiralRecord> records;
  bool bound_holds = true;  // measured_ratio <= bound + tol on every record
  bool ratio_decreasing = true;
  bool abs_z_decreasing = true;
};

// Throws kTruncationExceeded when theta + pi exceeds theta_max, kInvalidSpec
// for a non-spiral shape, thetas not above theta_min or not increasing.
SpiralEvidence spiral_ratio_sequence(const Shape& spiral, const std::vector<double>& thetas, double tol = 1e-6);

// Lower bound on d(z)/|z| for the exponential wall f(theta) = e^{-theta}:
// half the ratio (f - f(. + pi)) / (f + f(. + pi)) of the radial midpoint.
// The walls of the exponential spiral meet every ray at 45 degrees and the
// measured ratio settles near 0.53; the factor 1/2 leaves room for that tilt.
inline double exponential_ratio_floor() {
  const double e = std::exp(std::numbers::pi);
  return 0.5 * (e - 1.0) / (e + 1.0);
}

// Point on the radial segment at angle theta where the distances to the two
// walls agree (found by bisection); such points are medial.
Point spiral_medial_point(const Shape& spiral, double theta);

struct CuspSample {
  Point point;
  bool on_axis = false;
  bool medial = false;
};

struct CuspReport {
  std::vector<CuspSample> samples;
  int on_axis_medial = 0;
  int off_axis_regular = 0;
  int misclassified = 0;
  bool passed = false;
};

// n points (x1, 0) with x1 evenly spaced in (0, x1_max] must be medial, and n
// points (x1, +-u x1^{1/(1+alpha)}), u in [0.2, 0.8], strictly inside the cusp
// must not be.
CuspReport cusp_medial_check(double alpha, int n, double x1_max, double tol);

}  // namespace eikon
