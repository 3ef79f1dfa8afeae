#include "eikon/characteristics.hpp"

#include <algorithm>
#include <cmath>

namespace eikon {

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kMedialHit: return "MedialHit";
    case StopReason::kMaxTime: return "MaxTime";
    case StopReason::kGradientAbsent: return "GradientAbsent";
  }
  return "Unknown";
}

CharacteristicPath trace(const Shape& shape, const Point& x, double dt, double t_max, double tol) {
  shape.check_dim(x);
  if (!(dt > 0.0)) throw Error(ErrorCode::kInvalidSpec, "dt must be positive");
  if (shape.contains(x) != Side::kInside) throw Error(ErrorCode::kStartNotInDomain, "start point is not inside D");
  PointEvaluation ev = evaluate(shape, x, tol);
  if (ev.medial || !ev.gradient) throw Error(ErrorCode::kStartOnMedialAxis, "start point has no unique projection");

  CharacteristicPath path;
  path.start = x;
  path.dt = dt;
  path.samples.push_back({0.0, x, ev.signed_distance});
  Point current = x;
  Point grad = *ev.gradient;
  double t = 0.0;
  // Bounded loop: t_max / dt steps plus slack for the shortened last step.
  const long max_steps = static_cast<long>(std::ceil(t_max / dt)) + 2;
  for (long k = 0; k < max_steps; ++k) {
    if (t >= t_max) {
      path.stop_reason = StopReason::kMaxTime;
      return path;
    }
    const double t_next = std::min(static_cast<double>(k + 1) * dt, t_max);
    const double step = t_next - t;
    Point next = current + grad * step;
    PointEvaluation nev = evaluate(shape, next, tol);
    if (nev.medial) {
      path.stop_reason = StopReason::kMedialHit;
      return path;
    }
    if (!nev.gradient || nev.signed_distance <= 0.0) {
      path.stop_reason = StopReason::kGradientAbsent;
      return path;
    }
    t = t_next;
    current = next;
    grad = *nev.gradient;
    path.samples.push_back({t, current, nev.signed_distance});
  }
  path.stop_reason = StopReason::kMaxTime;
  return path;
}

CharacteristicCheck verify_characteristic(const Shape& shape, const CharacteristicPath& path) {
  if (path.samples.size() < 3) throw Error(ErrorCode::kTooFewSamples, "path needs at least 3 samples");
  const PathSample& first = path.samples.front();
  auto g0 = gradient(shape, first.point);
  if (!g0) throw Error(ErrorCode::kStartOnMedialAxis, "path start has no gradient");
  CharacteristicCheck out;
  const double t_stop = path.samples.back().t;
  for (std::size_t i = 0; i < path.samples.size(); ++i) {
    const PathSample& s = path.samples[i];
    Point rel = s.point - first.point;
    double along = dot(rel, *g0);
    out.max_line_deviation = std::max(out.max_line_deviation, norm(rel - *g0 * along));
    out.max_growth_residual = std::max(out.max_growth_residual, std::abs(s.d - first.d - (s.t - first.t)));
    // Drift is only meaningful away from the stopping point, where the
    // bracketed medial crossing may perturb the last samples.
    if (t_stop - s.t >= 3.0 * path.dt || path.stop_reason == StopReason::kMaxTime) {
      auto g = gradient(shape, s.point);
      if (g) out.max_gradient_drift = std::max(out.max_gradient_drift, norm(*g - *g0));
    }
    if (i > 0 && !(s.d > path.samples[i - 1].d)) out.monotone = false;
  }
  return out;
}

}  // namespace eikon
