#include "eikon/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "internal.hpp"

namespace eikon {

using detail::kPi;
using detail::kTwoPi;

namespace {

std::vector<Point> unit_directions(int dim, int n) {
  std::vector<Point> dirs;
  dirs.reserve(n);
  if (dim == 2) {
    for (int i = 0; i < n; ++i) {
      double t = kTwoPi * i / n;
      dirs.emplace_back(std::cos(t), std::sin(t));
    }
    return dirs;
  }
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    double z = 1.0 - (2.0 * i + 1.0) / n;
    double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    double t = golden * i;
    dirs.emplace_back(s * std::cos(t), s * std::sin(t), z);
  }
  return dirs;
}

// Solves the (at most 3x3) symmetric system a x = b by Gaussian elimination
// with partial pivoting.
Point solve_small(std::array<std::array<double, 3>, 3> a, std::array<double, 3> b, int m) {
  for (int c = 0; c < m; ++c) {
    int piv = c;
    for (int r = c + 1; r < m; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = c + 1; r < m; ++r) {
      double f = a[r][c] / a[c][c];
      for (int k = c; k < m; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  Point x = Point::zeros(m);
  for (int r = m - 1; r >= 0; --r) {
    double s = b[r];
    for (int k = r + 1; k < m; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return x;
}

double sd_or_underflow(const Shape& shape, const Point& x) {
  try {
    return signed_distance(shape, x);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTruncationExceeded)
      throw Error(ErrorCode::kScaleUnderflow, "scale reaches the spiral truncation zone");
    throw;
  }
}

void require_on_boundary(const Shape& shape, const Point& p) {
  shape.check_dim(p);
  if (shape.boundary_residual(p) > 1e-9) throw Error(ErrorCode::kNotOnBoundary, "p is not on the boundary");
}

// Corners of the boundary (where the normal jumps) for the shapes that have any.
std::vector<Point> corner_points(const Shape& shape) {
  std::vector<Point> out;
  if (shape.kind() == ShapeKind::kPolygon) {
    out = shape.as<Polygon>().vertices;
  } else if (shape.kind() == ShapeKind::kSpiral) {
    const Spiral& s = shape.as<Spiral>();
    Point dir(std::cos(s.theta_min), std::sin(s.theta_min));
    out.push_back(dir * spiral_wall(s, s.theta_min));
    out.push_back(dir * spiral_wall(s, s.theta_min + kPi));
  }
  return out;
}

// Orthonormal tangent basis at a boundary point with inner normal n.
std::vector<Point> tangent_basis(const Point& n) {
  if (n.dim() == 2) return {perp(n)};
  Point helper = std::abs(n[0]) < 0.9 ? Point(1, 0, 0) : Point(0, 1, 0);
  Point t1 = normalized(helper - n * dot(helper, n));
  Point t2(n[1] * t1[2] - n[2] * t1[1], n[2] * t1[0] - n[0] * t1[2], n[0] * t1[1] - n[1] * t1[0]);
  return {t1, t2};
}

}  // namespace

RegularityReport differentiability_test(const Shape& shape, const Point& p, double h0, double rho, int k_max,
                                        int directions, double tol) {
  shape.check_dim(p);
  if (!(h0 > 0.0)) throw Error(ErrorCode::kInvalidSpec, "h0 must be positive");
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorCode::kInvalidSpec, "rho must lie in (0, 1)");
  if (k_max < 0) throw Error(ErrorCode::kInvalidSpec, "k_max must be nonnegative");
  if (directions < 64) throw Error(ErrorCode::kInvalidSpec, "at least 64 directions are required");

  const int m = p.dim();
  const std::vector<Point> dirs = unit_directions(m, directions);
  std::array<std::array<double, 3>, 3> gram{};
  for (const Point& v : dirs)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) gram[i][j] += v[i] * v[j];

  RegularityReport rep;
  rep.test = "differentiability";
  rep.point = p;
  const double d0 = sd_or_underflow(shape, p);
  std::vector<double> q(dirs.size());
  Point g = Point::zeros(m);
  for (int k = 0; k <= k_max; ++k) {
    const double h = h0 * std::pow(rho, k);
    if (h < 1e-12) throw Error(ErrorCode::kScaleUnderflow, "scale below 1e-12");
    std::array<double, 3> rhs{};
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      q[i] = (sd_or_underflow(shape, p + dirs[i] * h) - d0) / h;
      for (int c = 0; c < m; ++c) rhs[c] += q[i] * dirs[i][c];
    }
    g = solve_small(gram, rhs, m);
    double sup = 0.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) sup = std::max(sup, std::abs(q[i] - dot(g, dirs[i])));
    rep.scales.push_back(h);
    rep.residuals.push_back(sup);
  }
  rep.fitted_gradient = g;
  rep.estimates["gradient_norm"] = norm(g);
  rep.estimates["final_residual"] = rep.residuals.back();
  rep.estimates["tol"] = tol;
  rep.verdicts["differentiable"] = rep.residuals.back() <= tol;
  return rep;
}

RegularityReport chi_estimate(const Shape& shape, const Point& p, const std::vector<double>& radii,
                              int points_per_radius) {
  require_on_boundary(shape, p);
  if (radii.empty()) throw Error(ErrorCode::kInvalidSpec, "radii must not be empty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw Error(ErrorCode::kInvalidSpec, "radii must be positive");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw Error(ErrorCode::kInvalidSpec, "radii must decrease");
  }
  if (points_per_radius < 24) throw Error(ErrorCode::kInvalidSpec, "need at least 24 points (276 pairs)");
  for (const Point& c : corner_points(shape))
    if (distance(c, p) <= radii.front())
      throw Error(ErrorCode::kNotC1InNeighborhood, "boundary corner inside the largest radius");

  Point n_p;
  try {
    n_p = shape.inner_normal(p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotC1) throw Error(ErrorCode::kNotC1InNeighborhood, "p is a boundary corner");
    throw;
  }
  const std::vector<Point> basis = tangent_basis(n_p);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  const int n = points_per_radius;

  RegularityReport rep;
  rep.test = "chi";
  rep.point = p;
  for (double r : radii) {
    // Tangent-plane offsets of p, projected back to the boundary.
    std::vector<Point> pts{p};
    std::vector<Point> normals{n_p};
    for (int j = 0; j < n; ++j) {
      Point offset = Point::zeros(p.dim());
      if (basis.size() == 1) {
        offset = basis[0] * (-0.95 * r + 1.9 * r * j / (n - 1));
      } else {
        double rad = 0.95 * r * std::sqrt((j + 0.5) / n);
        offset = basis[0] * (rad * std::cos(golden * j)) + basis[1] * (rad * std::sin(golden * j));
      }
      BoundaryScan scan = boundary_minimizers(shape, p + offset);
      const BoundaryHit& hit = scan.hits.front();
      if (!hit.smooth) throw Error(ErrorCode::kNotC1InNeighborhood, "boundary corner near p");
      if (distance(hit.point, p) > r || hit.point == p) continue;
      Point nq;
      try {
        nq = shape.inner_normal(hit.point);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kNotC1) throw Error(ErrorCode::kNotC1InNeighborhood, "boundary corner near p");
        throw;
      }
      pts.push_back(hit.point);
      normals.push_back(nq);
    }
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t k = i + 1; k < pts.size(); ++k) {
        double gap = distance(pts[i], pts[k]);
        if (gap > 0.0) best = std::max(best, distance(normals[i], normals[k]) / gap);
      }
    rep.scales.push_back(r);
    rep.residuals.push_back(best);
  }
  rep.estimates["chi"] = rep.residuals.back();
  return rep;
}

// Random samples almost never land on a medial point, so walk a lattice over
// the ball instead: across the medial set the nearest point jumps, which a
// 4x foot-to-step ratio catches (the projection is 1/(1 - kappa d)-Lipschitz
// off it, and kappa d <= 3/4 is already a poor ball for this test).
namespace {

void scan_ball_for_medial(const Shape& shape, const Point& p, double r) {
  const int m = p.dim();
  const int half = m == 2 ? 16 : 8;
  const double s = r / half;
  const int side = 2 * half + 1;
  std::size_t total = 1;
  for (int k = 0; k < m; ++k) total *= side;
  std::vector<std::optional<Point>> feet(total);
  auto offset_of = [&](std::size_t idx) {
    Point off = Point::zeros(m);
    for (int k = m - 1; k >= 0; --k) {
      off[k] = s * (static_cast<int>(idx % side) - half);
      idx /= side;
    }
    return off;
  };
  for (std::size_t i = 0; i < total; ++i) {
    Point off = offset_of(i);
    if (norm(off) >= r) continue;
    Point x = p + off;
    PointEvaluation ev = evaluate(shape, x);
    if (std::abs(ev.signed_distance) <= kBoundaryEps) {
      feet[i] = x;
      continue;
    }
    if (ev.medial || !ev.gradient) throw Error(ErrorCode::kMedialInBall, "medial point inside B(p, r)");
    feet[i] = x - *ev.gradient * ev.signed_distance;
  }
  std::size_t stride = 1;
  for (int k = m - 1; k >= 0; --k) {
    for (std::size_t i = 0; i < total; ++i) {
      if (!feet[i] || (i / stride) % side == static_cast<std::size_t>(side - 1) || !feet[i + stride]) continue;
      if (distance(*feet[i], *feet[i + stride]) > 4.0 * s)
        throw Error(ErrorCode::kMedialInBall, "nearest point jumps inside B(p, r)");
    }
    stride *= side;
  }
}

}  // namespace

RegularityReport c1_margin(const Shape& shape, const Point& p, double r, int n_pairs, std::uint64_t seed) {
  require_on_boundary(shape, p);
  if (!(r > 0.0)) throw Error(ErrorCode::kInvalidSpec, "radius must be positive");
  if (n_pairs < 1) throw Error(ErrorCode::kInvalidSpec, "n_pairs must be positive");
  const double chi = chi_estimate(shape, p, {r}).estimates.at("chi");

  std::mt19937_64 rng(seed);
  const int m = p.dim();
  struct Sample {
    Point x;
    double d;
    Point g;
  };
  auto draw = [&]() -> Sample {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      Point off = Point::zeros(m);
      for (int k = 0; k < m; ++k) off[k] = (2.0 * detail::unit_uniform(rng) - 1.0) * r;
      if (norm(off) >= r) continue;
      Point x = p + off;
      PointEvaluation ev = evaluate(shape, x);
      if (std::abs(ev.signed_distance) <= kBoundaryEps) continue;
      if (ev.medial || !ev.gradient) throw Error(ErrorCode::kMedialInBall, "medial point inside B(p, r)");
      return {x, ev.signed_distance, *ev.gradient};
    }
    throw Error(ErrorCode::kPreconditionViolated, "could not sample B(p, r) off the boundary");
  };

  scan_ball_for_medial(shape, p, r);

  double sup = 0.0;
  int used = 0;
  for (int i = 0; i < n_pairs; ++i) {
    Sample x = draw(), y = draw();
    double dd = x.d - y.d;
    double den = squared_norm(x.x - y.x) - dd * dd;
    if (!(den > 1e-14)) continue;
    double lhs = std::abs(dd - dot(x.g, x.x - y.x));
    sup = std::max(sup, lhs / den);
    ++used;
  }
  RegularityReport rep;
  rep.test = "c1";
  rep.point = p;
  rep.scales = {r};
  rep.residuals = {sup};
  rep.estimates["ratio_sup"] = sup;
  rep.estimates["chi"] = chi;
  rep.estimates["chi_half"] = 0.5 * chi;
  rep.estimates["margin"] = sup - 0.5 * chi;
  rep.estimates["pairs_used"] = used;
  return rep;
}

RegularityReport gradient_lipschitz_estimate(const Shape& shape, double a, double delta, int n_pairs,
                                             const SampleRegion& region, std::uint64_t seed) {
  shape.check_dim(region.lo);
  shape.check_dim(region.hi);
  if (!(delta > 0.0)) throw Error(ErrorCode::kInvalidSpec, "delta must be positive");
  if (n_pairs < 1) throw Error(ErrorCode::kInvalidSpec, "n_pairs must be positive");
  const int m = shape.dim();
  for (int k = 0; k < m; ++k)
    if (!(region.hi[k] > region.lo[k])) throw Error(ErrorCode::kInvalidSpec, "region box must have lo < hi");

  std::mt19937_64 rng(seed);
  struct Sample {
    Point x;
    Point g;
    int component;
  };
  const double local = 0.05 * norm(region.hi - region.lo);
  // Half of the pairs are drawn independently over the region; the other half
  // pair x with a point within `local` of it, where the ratio is sharpest.
  auto draw = [&](const Point* near) -> Sample {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      Point x = Point::zeros(m);
      for (int k = 0; k < m; ++k) {
        double lo = region.lo[k], hi = region.hi[k];
        if (near) {
          lo = std::max(lo, (*near)[k] - local);
          hi = std::min(hi, (*near)[k] + local);
        }
        x[k] = lo + (hi - lo) * detail::unit_uniform(rng);
      }
      double d = signed_distance(shape, x);
      if (d < region.d_min || d > region.d_max) continue;
      if (region.medial_gap > 0.0 && is_medial(shape, x, region.medial_gap)) continue;
      PointEvaluation ev = evaluate(shape, x);
      if (ev.signed_distance - a < delta || ev.medial || !ev.gradient)
        throw Error(ErrorCode::kPreconditionViolated, "sample closer than delta to the level set or medial");
      return {x, *ev.gradient, ev.projection.components.front()};
    }
    throw Error(ErrorCode::kPreconditionViolated, "region yields no admissible samples");
  };

  double best = 0.0;
  int used = 0, filtered = 0;
  for (int i = 0; i < n_pairs; ++i) {
    Sample x = draw(nullptr);
    Sample y = draw(i % 2 ? &x.x : nullptr);
    double gap = distance(x.x, y.x);
    if (x.component != y.component || !(gap > 0.0)) {
      ++filtered;
      continue;
    }
    best = std::max(best, distance(x.g, y.g) / gap);
    ++used;
  }
  RegularityReport rep;
  rep.test = "lipschitz";
  rep.point = region.lo;
  rep.scales = {delta};
  rep.residuals = {best};
  rep.estimates["lipschitz"] = best;
  rep.estimates["bound"] = 3.0 / delta;
  rep.estimates["pairs_used"] = used;
  rep.estimates["pairs_filtered"] = filtered;
  rep.verdicts["within_bound"] = best <= 3.0 / delta + 0.01;
  return rep;
}

}  // namespace eikon
