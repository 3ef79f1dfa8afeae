#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "eikon/shape.hpp"

namespace eikon {

// Default clustering tolerance for projection queries.
inline constexpr double kDefaultTol = 1e-8;

// Reported multiplicity when the near-minimizers form a continuum (or more
// than kMaxClusters separate clusters).
inline constexpr int kMaxClusters = 64;
inline constexpr int kContinuum = kMaxClusters + 1;

// A local minimizer of |x - y| over the boundary.
struct BoundaryHit {
  Point point;
  double distance = 0.0;
  int component = 0;   // boundary piece the minimizer lies on
  bool smooth = true;  // boundary is C^1 at `point`
};

struct BoundaryScan {
  std::vector<BoundaryHit> hits;  // sorted by distance, then lexicographically
  // sup |x - y| - inf |x - y| over the whole boundary, when known in closed
  // form (disk and ball); +inf otherwise.
  double spread = std::numeric_limits<double>::infinity();
};

// All refined local minimizers of the distance from x to the boundary.
// Throws kTruncationExceeded for spiral queries inside the apex zone.
BoundaryScan boundary_minimizers(const Shape& shape, const Point& x);

struct ProjectionResult {
  std::vector<Point> points;    // one representative per cluster, lexicographic
  std::vector<int> components;  // boundary component of each representative
  double distance = 0.0;
  int multiplicity = 1;  // kContinuum when the near-minimizers form a continuum
  bool continuum = false;
  double tol_used = kDefaultTol;
};

// Unsigned distance to the boundary.
double unsigned_distance(const Shape& shape, const Point& x);

// Positive inside, negative outside, zero on the boundary.
double signed_distance(const Shape& shape, const Point& x);

// Global minimizers within tol of the optimum, clustered at radius tol.
ProjectionResult nearest_points(const Shape& shape, const Point& x, double tol = kDefaultTol);

// (x - pi(x)) / d(x) off the boundary when the projection is unique; the
// inner normal on C^1 boundary points; nullopt otherwise.
std::optional<Point> gradient(const Shape& shape, const Point& x, double tol = kDefaultTol);

// True when x has two or more nearest boundary points at tolerance tol.
bool is_medial(const Shape& shape, const Point& x, double tol = kDefaultTol);

// Everything the verification code needs at one point, from a single scan.
struct PointEvaluation {
  double signed_distance = 0.0;
  std::optional<Point> gradient;
  bool medial = false;
  bool on_boundary = false;
  ProjectionResult projection;
};

PointEvaluation evaluate(const Shape& shape, const Point& x, double tol = kDefaultTol);

// Distance below which a query counts as lying on the boundary.
inline constexpr double kBoundaryEps = 1e-12;

}  // namespace eikon
