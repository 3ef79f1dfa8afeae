#include "eikon/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"

namespace eikon {

using detail::kPi;
using detail::kTwoPi;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDedupRadius = 1e-10;

struct CurvePoint {
  Point y, d1, d2;
};

// Golden-section search for the minimum of |y(t) - x|^2 on [lo, hi], then a
// safeguarded Newton polish on the derivative to remove the flatness limit of
// a derivative-free search.
template <class Curve>
double refine_parameter(const Curve& curve, const Point& x, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  auto f = [&](double t) { return squared_norm(curve.at(t) - x); };
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  const double tol = 1e-13 * std::max(std::abs(lo), std::abs(hi));
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  double t = fc <= fd ? c : d;
  double ft = std::min(fc, fd);
  if (f(lo) <= ft) {
    t = lo;
    ft = f(lo);
  }
  if (f(hi) < ft) {
    t = hi;
    ft = f(hi);
  }
  for (int it = 0; it < 6; ++it) {
    CurvePoint cp = curve.derivs(t);
    Point r = cp.y - x;
    double g = 2.0 * dot(cp.d1, r);
    double h = 2.0 * (squared_norm(cp.d1) + dot(cp.d2, r));
    if (!std::isfinite(g) || !std::isfinite(h) || !(h > 0.0)) break;
    double tn = t - g / h;
    if (!(tn >= lo && tn <= hi)) break;
    double fn = f(tn);
    if (!(fn <= ft)) break;
    bool done = std::abs(tn - t) <= 1e-16 * std::max(1.0, std::abs(t));
    t = tn;
    ft = fn;
    if (done) break;
  }
  return t;
}

struct RawMin {
  double t;
  bool at_start;
  bool at_end;
};

// Coarse scan of t in [t0, t1] with n intervals, refining every discrete local
// minimum. Periodic curves use n samples with wrap-around neighbours.
template <class Curve>
std::vector<RawMin> scan_curve(const Curve& curve, const Point& x, double t0, double t1, int n, bool periodic) {
  const int m = periodic ? n : n + 1;
  std::vector<double> f(m);
  const double dt = (t1 - t0) / n;
  for (int i = 0; i < m; ++i) f[i] = squared_norm(curve.at(t0 + dt * i) - x);
  std::vector<RawMin> out;
  for (int i = 0; i < m; ++i) {
    double left = periodic ? f[(i - 1 + m) % m] : (i > 0 ? f[i - 1] : kInf);
    double right = periodic ? f[(i + 1) % m] : (i + 1 < m ? f[i + 1] : kInf);
    if (!(f[i] <= left && f[i] <= right)) continue;
    double lo = t0 + dt * (i - 1), hi = t0 + dt * (i + 1);
    if (!periodic) {
      lo = std::max(lo, t0);
      hi = std::min(hi, t1);
    }
    double t = refine_parameter(curve, x, lo, hi);
    const double snap = 1e-9 * (t1 - t0);
    RawMin r{t, false, false};
    if (!periodic && t - t0 <= snap) r = {t0, true, false};
    if (!periodic && t1 - t <= snap) r = {t1, false, true};
    out.push_back(r);
  }
  return out;
}

struct EllipseCurve {
  Point c;
  double a, b;
  Point at(double t) const { return {c[0] + a * std::cos(t), c[1] + b * std::sin(t)}; }
  CurvePoint derivs(double t) const {
    double ct = std::cos(t), st = std::sin(t);
    return {{c[0] + a * ct, c[1] + b * st}, {-a * st, b * ct}, {-a * ct, -b * st}};
  }
};

// One cusp branch, parametrized by u = |x2| >= 0; `sign` selects x2 = sign * u.
struct CuspBranch {
  double alpha;
  double sign;
  Point at(double u) const { return {std::pow(u, 1.0 + alpha), sign * u}; }
  CurvePoint derivs(double u) const {
    double p = std::pow(u, alpha);
    return {{u * p, sign * u}, {(1.0 + alpha) * p, sign}, {(1.0 + alpha) * alpha * p / u, 0.0}};
  }
};

// A spiral wall r = f(theta + shift) at polar angle theta.
struct SpiralCurve {
  const Spiral* s;
  double shift;
  Point at(double t) const { return Point(std::cos(t), std::sin(t)) * spiral_wall(*s, t + shift); }
  CurvePoint derivs(double t) const {
    double f0 = spiral_wall(*s, t + shift);
    double f1 = spiral_wall_derivative(*s, t + shift, 1);
    double f2 = spiral_wall_derivative(*s, t + shift, 2);
    Point u(std::cos(t), std::sin(t));
    Point v = perp(u);
    return {u * f0, u * f1 + v * f0, u * (f2 - f0) + v * (2.0 * f1)};
  }
};

void push_hit(std::vector<BoundaryHit>& hits, const Point& y, const Point& x, int component, bool smooth) {
  hits.push_back({y, distance(x, y), component, smooth});
}

void scan_disk(const Disk& s, const Point& x, BoundaryScan& out) {
  Point v = x - s.center;
  double e = norm(v);
  Point dir = e > 0.0 ? v / e : Point::unit(x.dim(), 0);
  push_hit(out.hits, s.center + dir * s.radius, x, 0, true);
  out.spread = 2.0 * std::min(s.radius, e);
}

void scan_halfspace(const HalfSpace& s, const Point& x, BoundaryScan& out) {
  double d = dot(s.normal, x) - s.offset;
  out.hits.push_back({x - s.normal * d, std::abs(d), 0, true});
}

void scan_polygon(const Polygon& s, const Point& x, BoundaryScan& out) {
  const auto& v = s.vertices;
  const int n = static_cast<int>(v.size());
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) {
    Point q = detail::closest_on_segment(v[i], v[(i + 1) % n], x, &t[i]);
    if (t[i] > 0.0 && t[i] < 1.0) push_hit(out.hits, q, x, i, true);
  }
  // A vertex is a local minimizer only when both incident edges clamp to it.
  for (int i = 0; i < n; ++i) {
    int prev = (i - 1 + n) % n;
    if (t[prev] == 1.0 && t[i] == 0.0) push_hit(out.hits, v[i], x, n + i, false);
  }
}

void scan_ellipse_2d(const Ellipse& s, const detail::ShapeCache& cache, const Point& x, BoundaryScan& out) {
  const int n = static_cast<int>(cache.points.size());
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = squared_norm(cache.points[i] - x);
  EllipseCurve curve{s.center, s.semi_axes[0], s.semi_axes[1]};
  const double dt = kTwoPi / n;
  for (int i = 0; i < n; ++i) {
    if (!(f[i] <= f[(i - 1 + n) % n] && f[i] <= f[(i + 1) % n])) continue;
    double t = refine_parameter(curve, x, cache.params[i] - dt, cache.params[i] + dt);
    push_hit(out.hits, curve.at(t), x, 0, true);
  }
}

// Newton iteration on the unit sphere for min |w - A u|^2, A = diag(axes).
Point refine_ellipsoid(const Point& axes, const Point& w, Point u) {
  auto f = [&](const Point& q) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      double r = axes[i] * q[i] - w[i];
      s += r * r;
    }
    return s;
  };
  double fu = f(u);
  for (int it = 0; it < 60; ++it) {
    Point g(0, 0, 0);
    for (int i = 0; i < 3; ++i) g[i] = 2.0 * axes[i] * (axes[i] * u[i] - w[i]);
    double ug = dot(u, g);
    Point helper = std::abs(u[0]) < 0.9 ? Point(1, 0, 0) : Point(0, 1, 0);
    Point e1 = normalized(helper - u * dot(helper, u));
    Point e2(u[1] * e1[2] - u[2] * e1[1], u[2] * e1[0] - u[0] * e1[2], u[0] * e1[1] - u[1] * e1[0]);
    double g1 = dot(e1, g), g2 = dot(e2, g);
    auto quad = [&](const Point& p, const Point& q) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) s += 2.0 * axes[i] * axes[i] * p[i] * q[i];
      return s;
    };
    double h11 = quad(e1, e1) - ug, h22 = quad(e2, e2) - ug, h12 = quad(e1, e2);
    double det = h11 * h22 - h12 * h12;
    double s1, s2;
    if (h11 > 0.0 && det > 0.0) {
      s1 = -(h22 * g1 - h12 * g2) / det;
      s2 = -(h11 * g2 - h12 * g1) / det;
    } else {
      double amax = std::max({axes[0], axes[1], axes[2]});
      double step = 0.25 / (amax * amax);
      s1 = -step * g1;
      s2 = -step * g2;
    }
    double scale = 1.0;
    bool accepted = false;
    Point un;
    for (int k = 0; k < 40; ++k) {
      un = normalized(u + (e1 * s1 + e2 * s2) * scale);
      double fn = f(un);
      if (fn <= fu) {
        accepted = true;
        fu = fn;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) break;
    double moved = distance(un, u);
    u = un;
    if (moved < 1e-15) break;
  }
  return u;
}

void scan_ellipse_3d(const Ellipse& s, const detail::ShapeCache& cache, const Point& x, BoundaryScan& out) {
  const int nl = cache.n_lat, nm = cache.n_lon;
  Point w = x - s.center;
  std::vector<double> f(cache.directions.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
      double r = s.semi_axes[i] * cache.directions[k][i] - w[i];
      acc += r * r;
    }
    f[k] = acc;
  }
  for (int i = 0; i < nl; ++i) {
    for (int j = 0; j < nm; ++j) {
      double fi = f[i * nm + j];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          int ii = i + di;
          if (ii < 0 || ii >= nl) continue;
          int jj = (j + dj + nm) % nm;
          if (f[ii * nm + jj] < fi) {
            is_min = false;
            break;
          }
        }
      }
      if (!is_min) continue;
      Point u = refine_ellipsoid(s.semi_axes, w, cache.directions[i * nm + j]);
      Point y = s.center;
      for (int a = 0; a < 3; ++a) y[a] += s.semi_axes[a] * u[a];
      push_hit(out.hits, y, x, 0, true);
    }
  }
}

void scan_cusp(const Cusp& s, const Point& x, BoundaryScan& out) {
  double r = norm(x);
  if (r == 0.0) {
    push_hit(out.hits, Point(0.0, 0.0), x, 2, true);
    return;
  }
  // Any minimizer y satisfies |y| <= |x| + |x - 0| = 2|x|.
  double reach = 2.0 * r * (1.0 + 1e-12);
  bool apex_upper = false, apex_lower = false;
  for (int b = 0; b < 2; ++b) {
    CuspBranch branch{s.alpha, b == 0 ? 1.0 : -1.0};
    for (const RawMin& m : scan_curve(branch, x, 0.0, reach, detail::kCoarseSamples, false)) {
      if (m.at_end) continue;
      if (m.at_start) {
        (b == 0 ? apex_upper : apex_lower) = true;
        continue;
      }
      push_hit(out.hits, branch.at(m.t), x, b, true);
    }
  }
  if (apex_upper && apex_lower) push_hit(out.hits, Point(0.0, 0.0), x, 2, true);
}

void scan_spiral(const Spiral& s, const Point& x, BoundaryScan& out) {
  double r = std::hypot(x[0], x[1]);
  if (r == 0.0) {
    push_hit(out.hits, Point(0.0, 0.0), x, 3, false);
    return;
  }
  if (r < 0.5 * spiral_wall(s, s.theta_max))
    throw Error(ErrorCode::kTruncationExceeded, "query lies inside the truncated apex zone of the spiral");
  const double theta_r = spiral_wall_inverse(s, r);
  bool outer_corner_wall = false, inner_corner_wall = false;
  for (int wall = 0; wall < 2; ++wall) {
    SpiralCurve curve{&s, wall == 0 ? 0.0 : kPi};
    // Windings k-1, k, k+1 around the bracketing winding of this wall.
    double center = std::max(theta_r - curve.shift, s.theta_min);
    double lo = std::max(s.theta_min, center - 2.0 * kTwoPi);
    double hi = center + 2.0 * kTwoPi;
    int n = static_cast<int>(std::ceil((hi - lo) / kTwoPi * detail::kCoarseSamples));
    for (const RawMin& m : scan_curve(curve, x, lo, hi, n, false)) {
      if (m.at_end) continue;
      if (m.at_start) {
        if (lo == s.theta_min) (wall == 0 ? outer_corner_wall : inner_corner_wall) = true;
        continue;
      }
      push_hit(out.hits, curve.at(m.t), x, wall, true);
    }
  }
  Point dir(std::cos(s.theta_min), std::sin(s.theta_min));
  Point inner_corner = dir * spiral_wall(s, s.theta_min + kPi);
  Point outer_corner = dir * spiral_wall(s, s.theta_min);
  double t = 0.0;
  Point q = detail::closest_on_segment(inner_corner, outer_corner, x, &t);
  if (t > 0.0 && t < 1.0) push_hit(out.hits, q, x, 2, true);
  if (t == 1.0 && outer_corner_wall) push_hit(out.hits, outer_corner, x, 4, false);
  if (t == 0.0 && inner_corner_wall) push_hit(out.hits, inner_corner, x, 5, false);
}

}  // namespace

BoundaryScan boundary_minimizers(const Shape& shape, const Point& x) {
  shape.check_dim(x);
  BoundaryScan out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          scan_disk(s, x, out);
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          scan_halfspace(s, x, out);
        } else if constexpr (std::is_same_v<T, Polygon>) {
          scan_polygon(s, x, out);
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          if (shape.dim() == 2)
            scan_ellipse_2d(s, shape.cache(), x, out);
          else
            scan_ellipse_3d(s, shape.cache(), x, out);
        } else if constexpr (std::is_same_v<T, Cusp>) {
          scan_cusp(s, x, out);
        } else if constexpr (std::is_same_v<T, Spiral>) {
          scan_spiral(s, x, out);
        }
      },
      shape.spec());
  auto& hits = out.hits;
  std::sort(hits.begin(), hits.end(), [](const BoundaryHit& a, const BoundaryHit& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return lex_less(a.point, b.point);
  });
  std::vector<BoundaryHit> unique;
  unique.reserve(hits.size());
  for (const auto& h : hits) {
    bool dup = false;
    for (const auto& u : unique)
      if (distance(u.point, h.point) <= kDedupRadius) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(h);
  }
  hits = std::move(unique);
  return out;
}

namespace {

ProjectionResult cluster(const BoundaryScan& scan, double tol) {
  ProjectionResult res;
  res.tol_used = tol;
  res.distance = scan.hits.front().distance;
  if (scan.spread <= tol) {
    res.points = {scan.hits.front().point};
    res.components = {scan.hits.front().component};
    res.multiplicity = kContinuum;
    res.continuum = true;
    return res;
  }
  std::vector<const BoundaryHit*> reps;
  for (const auto& h : scan.hits) {
    if (h.distance > res.distance + tol) break;
    bool merged = false;
    for (const auto* r : reps)
      if (distance(r->point, h.point) <= tol) {
        merged = true;
        break;
      }
    if (!merged) reps.push_back(&h);
  }
  if (static_cast<int>(reps.size()) > kMaxClusters) {
    res.points = {reps.front()->point};
    res.components = {reps.front()->component};
    res.multiplicity = kContinuum;
    res.continuum = true;
    return res;
  }
  std::sort(reps.begin(), reps.end(), [](const BoundaryHit* a, const BoundaryHit* b) {
    return lex_less(a->point, b->point);
  });
  for (const auto* r : reps) {
    res.points.push_back(r->point);
    res.components.push_back(r->component);
  }
  res.multiplicity = static_cast<int>(reps.size());
  return res;
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidSpec, "tolerance must be positive");
}

}  // namespace

double unsigned_distance(const Shape& shape, const Point& x) {
  return boundary_minimizers(shape, x).hits.front().distance;
}

double signed_distance(const Shape& shape, const Point& x) {
  double d = unsigned_distance(shape, x);
  if (d == 0.0) return 0.0;
  return shape.contains(x) == Side::kInside ? d : -d;
}

ProjectionResult nearest_points(const Shape& shape, const Point& x, double tol) {
  check_tol(tol);
  return cluster(boundary_minimizers(shape, x), tol);
}

PointEvaluation evaluate(const Shape& shape, const Point& x, double tol) {
  check_tol(tol);
  BoundaryScan scan = boundary_minimizers(shape, x);
  PointEvaluation ev;
  ev.projection = cluster(scan, tol);
  const double d = ev.projection.distance;
  ev.signed_distance = d == 0.0 ? 0.0 : (shape.contains(x) == Side::kInside ? d : -d);
  ev.medial = ev.projection.multiplicity >= 2;
  ev.on_boundary = d <= kBoundaryEps;
  if (ev.on_boundary) {
    const BoundaryHit& h = scan.hits.front();
    if (h.smooth) {
      try {
        ev.gradient = shape.inner_normal(h.point);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotC1) throw;
      }
    }
  } else if (!ev.medial) {
    ev.gradient = (x - ev.projection.points.front()) / ev.signed_distance;
  }
  return ev;
}

std::optional<Point> gradient(const Shape& shape, const Point& x, double tol) {
  return evaluate(shape, x, tol).gradient;
}

bool is_medial(const Shape& shape, const Point& x, double tol) { return nearest_points(shape, x, tol).multiplicity >= 2; }

}  // namespace eikon
