#include "eikon/counterexamples.hpp"

#include <algorithm>
#include <limits>

#include "internal.hpp"

namespace eikon {

using detail::kPi;

namespace {

const Spiral& spiral_of(const Shape& shape) {
  if (shape.kind() != ShapeKind::kSpiral) throw Error(ErrorCode::kInvalidSpec, "shape is not a spiral");
  return shape.as<Spiral>();
}

// Distance from x to each spiral wall (component 0 outer, 1 inner).
std::pair<double, double> wall_distances(const Shape& shape, const Point& x) {
  double d[2] = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (const BoundaryHit& h : boundary_minimizers(shape, x).hits)
    if (h.component == 0 || h.component == 1) d[h.component] = std::min(d[h.component], h.distance);
  return {d[0], d[1]};
}

}  // namespace

SpiralEvidence spiral_ratio_sequence(const Shape& spiral, const std::vector<double>& thetas, double tol) {
  const Spiral& s = spiral_of(spiral);
  SpiralEvidence ev;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double theta = thetas[i];
    if (!(theta > s.theta_min)) throw Error(ErrorCode::kInvalidSpec, "theta must exceed theta_min");
    if (i > 0 && !(theta > thetas[i - 1])) throw Error(ErrorCode::kInvalidSpec, "thetas must increase");
    if (theta + kPi > s.theta_max) throw Error(ErrorCode::kTruncationExceeded, "theta + pi exceeds theta_max");
    const double outer = spiral_wall(s, theta), inner = spiral_wall(s, theta + kPi);
    SpiralRecord rec;
    rec.theta = theta;
    rec.z = Point(std::cos(theta), std::sin(theta)) * (0.5 * (outer + inner));
    rec.abs_z = norm(rec.z);
    rec.bound = outer / inner - 1.0;
    rec.measured_ratio = signed_distance(spiral, rec.z) / rec.abs_z;
    if (!(rec.measured_ratio <= rec.bound + tol)) ev.bound_holds = false;
    if (!ev.records.empty()) {
      if (!(rec.measured_ratio < ev.records.back().measured_ratio)) ev.ratio_decreasing = false;
      if (!(rec.abs_z < ev.records.back().abs_z)) ev.abs_z_decreasing = false;
    }
    ev.records.push_back(rec);
  }
  return ev;
}

Point spiral_medial_point(const Shape& spiral, double theta) {
  const Spiral& s = spiral_of(spiral);
  if (!(theta > s.theta_min) || theta + kPi > s.theta_max)
    throw Error(ErrorCode::kTruncationExceeded, "theta outside the sampled spiral");
  const Point dir(std::cos(theta), std::sin(theta));
  // Along the ray the outer-wall distance falls and the inner-wall distance
  // grows; bisect on their difference.
  double lo = spiral_wall(s, theta + kPi), hi = spiral_wall(s, theta);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    auto [d_out, d_in] = wall_distances(spiral, dir * mid);
    if (d_out > d_in) lo = mid;
    else hi = mid;
  }
  return dir * (0.5 * (lo + hi));
}

CuspReport cusp_medial_check(double alpha, int n, double x1_max, double tol) {
  if (!(x1_max > 0.0)) throw Error(ErrorCode::kInvalidSpec, "x1_max must be positive");
  if (n < 1) throw Error(ErrorCode::kInvalidSpec, "n must be positive");
  const Shape cusp = Shape::make(Cusp{alpha});
  CuspReport rep;
  for (int j = 0; j < n; ++j) {
    const double x1 = x1_max * (j + 1) / n;
    CuspSample s{Point(x1, 0.0), true, is_medial(cusp, Point(x1, 0.0), tol)};
    rep.on_axis_medial += s.medial;
    rep.samples.push_back(s);
  }
  for (int j = 0; j < n; ++j) {
    const double x1 = x1_max * (j + 1) / n;
    const double u = n > 1 ? 0.2 + 0.6 * j / (n - 1) : 0.5;
    double x2 = u * std::pow(x1, 1.0 / (1.0 + alpha));
    x2 = std::max(x2, 10.0 * tol);
    if (j % 2) x2 = -x2;
    Point x(x1, x2);
    CuspSample s{x, false, is_medial(cusp, x, tol)};
    rep.off_axis_regular += !s.medial;
    rep.samples.push_back(s);
  }
  rep.misclassified = (n - rep.on_axis_medial) + (n - rep.off_axis_regular);
  rep.passed = rep.misclassified == 0;
  return rep;
}

}  // namespace eikon
