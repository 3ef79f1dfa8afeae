#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eikon/projection.hpp"

namespace eikon {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed1e55ULL;

// Common result record of the regularity checks. `scales` and `residuals`
// always have the same length; their meaning depends on the test (step
// sizes and fit residuals, or radii and per-radius chi values).
struct RegularityReport {
  std::string test;
  Point point;
  std::vector<double> scales;
  std::vector<double> residuals;
  std::optional<Point> fitted_gradient;
  std::map<std::string, double> estimates;
  std::map<std::string, bool> verdicts;
};

// Fits g_h by least squares to (d(p + h v) - d(p)) / h over unit directions
// v (equal angles in 2D, a Fibonacci sphere in 3D) for h = h0 rho^k,
// k = 0..k_max, and reports the sup residual per scale. The point is called
// differentiable when the finest residual is <= tol.
RegularityReport differentiability_test(const Shape& shape, const Point& p, double h0, double rho, int k_max,
                                        int directions = 64, double tol = 1e-3);

// Max of |n' - n''| / |p' - p''| over boundary pairs within B(p, r), for each
// r of a strictly decreasing list. Estimate "chi" is the smallest-radius value.
RegularityReport chi_estimate(const Shape& shape, const Point& p, const std::vector<double>& radii,
                              int points_per_radius = 24);

// Sup over random pairs x, y in B(p, r) off the boundary of
//   |d(x) - d(y) - <grad d(x), x - y>| / (|x - y|^2 - (d(x) - d(y))^2),
// next to chi/2 at radius r.
RegularityReport c1_margin(const Shape& shape, const Point& p, double r, int n_pairs,
                           std::uint64_t seed = kDefaultSeed);

// Box region, optionally cut to a band of signed distance and kept clear of
// the medial set by medial_gap (points medial at that tolerance are skipped).
struct SampleRegion {
  Point lo;
  Point hi;
  double d_min = -std::numeric_limits<double>::infinity();
  double d_max = std::numeric_limits<double>::infinity();
  double medial_gap = 0.0;
};

// Max |grad d(x) - grad d(y)| / |x - y| over n_pairs sampled pairs whose
// points project onto the same boundary component. Every sampled point must
// have d(x) - a >= delta and a unique projection (kPreconditionViolated).
RegularityReport gradient_lipschitz_estimate(const Shape& shape, double a, double delta, int n_pairs,
                                             const SampleRegion& region, std::uint64_t seed = kDefaultSeed);

}  // namespace eikon
