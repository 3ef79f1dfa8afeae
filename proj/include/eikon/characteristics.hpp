#pragma once

#include <vector>

#include "eikon/projection.hpp"

namespace eikon {

enum class StopReason { kMedialHit, kMaxTime, kGradientAbsent };

const char* to_string(StopReason reason);

struct PathSample {
  double t = 0.0;
  Point point;
  double d = 0.0;
};

// Sampled integral curve of the distance gradient.
struct CharacteristicPath {
  Point start;
  double dt = 0.0;
  std::vector<PathSample> samples;
  StopReason stop_reason = StopReason::kMaxTime;

  // Time of the last accepted sample; at a medial hit this brackets the exit
  // time of the characteristic from below, to within dt.
  double stop_time() const { return samples.empty() ? 0.0 : samples.back().t; }
};

// Explicit Euler stepping x_{k+1} = x_k + dt * grad d(x_k) from x in D.
// Stops before the first sample that is medial at `tol` (or has no gradient),
// or once t reaches t_max. A tol of about 2 * dt detects steps that jump
// across the medial set.
CharacteristicPath trace(const Shape& shape, const Point& x, double dt, double t_max, double tol);

struct CharacteristicCheck {
  double max_line_deviation = 0.0;   // distance of samples to x + t grad d(x)
  double max_growth_residual = 0.0;  // |d(chi(t)) - d(x) - t|
  double max_gradient_drift = 0.0;   // |grad d(chi(t)) - grad d(x)|
  bool monotone = true;              // d strictly increasing along samples
};

// Needs at least 3 samples (kTooFewSamples otherwise).
CharacteristicCheck verify_characteristic(const Shape& shape, const CharacteristicPath& path);

}  // namespace eikon
