#include "eikon/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"

namespace eikon {

using detail::kPi;
using detail::kTwoPi;

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kTruncationExceeded: return "TruncationExceeded";
    case ErrorCode::kNotOnBoundary: return "NotOnBoundary";
    case ErrorCode::kNotC1: return "NotC1";
    case ErrorCode::kStartNotInDomain: return "StartNotInDomain";
    case ErrorCode::kStartOnMedialAxis: return "StartOnMedialAxis";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kEmptyBand: return "EmptyBand";
    case ErrorCode::kLevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::kInvalidTube: return "InvalidTube";
    case ErrorCode::kScaleUnderflow: return "ScaleUnderflow";
    case ErrorCode::kNotC1InNeighborhood: return "NotC1InNeighborhood";
    case ErrorCode::kMedialInBall: return "MedialInBall";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

const char* to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kDisk: return "disk";
    case ShapeKind::kEllipse: return "ellipse";
    case ShapeKind::kHalfSpace: return "halfspace";
    case ShapeKind::kPolygon: return "polygon";
    case ShapeKind::kSpiral: return "spiral";
    case ShapeKind::kCusp: return "cusp";
  }
  return "unknown";
}

double spiral_wall(const Spiral& s, double theta) {
  if (s.wall == SpiralWall::kExponential) return std::exp(-s.beta * theta);
  return std::pow(1.0 + theta, -s.beta);
}

double spiral_wall_derivative(const Spiral& s, double theta, int order) {
  if (order == 0) return spiral_wall(s, theta);
  if (s.wall == SpiralWall::kExponential) {
    double f = std::exp(-s.beta * theta);
    return order == 1 ? -s.beta * f : s.beta * s.beta * f;
  }
  double u = 1.0 + theta;
  if (order == 1) return -s.beta * std::pow(u, -s.beta - 1.0);
  return s.beta * (s.beta + 1.0) * std::pow(u, -s.beta - 2.0);
}

double spiral_wall_inverse(const Spiral& s, double r) {
  if (s.wall == SpiralWall::kExponential) return -std::log(r) / s.beta;
  return std::pow(r, -1.0 / s.beta) - 1.0;
}

namespace {

void invalid(const std::string& msg) { throw Error(ErrorCode::kInvalidSpec, msg); }

double orient(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= p[1] &&
         p[1] <= std::max(a[1], b[1]);
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  double d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
  double d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

void validate_polygon(Polygon& poly) {
  auto& v = poly.vertices;
  if (v.size() < 3) invalid("polygon needs at least 3 vertices");
  for (const auto& p : v) {
    if (p.dim() != 2) invalid("polygon vertices must be 2D");
    if (!p.finite()) invalid("polygon vertex is not finite");
  }
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] == v[(i + 1) % n]) invalid("polygon has a repeated vertex");
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& c = v[j];
      const Point& d = v[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Adjacent edges share one vertex; they may only touch there.
        const Point& shared = (j == i + 1) ? b : a;
        const Point& other_first = (j == i + 1) ? a : b;
        const Point& other_second = (j == i + 1) ? d : c;
        if (orient(other_first, shared, other_second) == 0.0 &&
            dot(other_first - shared, other_second - shared) > 0.0)
          invalid("polygon folds back on itself");
        continue;
      }
      if (segments_intersect(a, b, c, d)) invalid("polygon is self-intersecting");
    }
  }
  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    area2 += a[0] * b[1] - b[0] * a[1];
  }
  if (area2 == 0.0) invalid("polygon has zero area");
  if (area2 < 0.0) std::reverse(v.begin(), v.end());
}

template <class Curve>
void sample_curve(const Curve& curve, double t0, double t1, double spacing, std::vector<Point>& out,
                  bool include_end) {
  Point prev = curve(t0);
  out.push_back(prev);
  double t = t0;
  double dt = (t1 - t0) / 64.0;
  const double min_dt = std::max(std::abs(t1 - t0), 1.0) * 1e-15;
  while (t < t1) {
    double step = std::min(dt, t1 - t);
    Point next = curve(t + step);
    while (distance(next, prev) > spacing && step > min_dt) {
      step *= 0.5;
      next = curve(t + step);
    }
    t = (t1 - t <= step) ? t1 : t + step;
    if (t >= t1 && !include_end) break;
    out.push_back(next);
    prev = next;
    dt = step * 1.5;
  }
}

}  // namespace

Shape::Shape(ShapeSpec spec, int dim) : spec_(std::move(spec)), dim_(dim) {}

Shape Shape::make(ShapeSpec spec) {
  int dim = 2;
  auto cache = std::make_shared<detail::ShapeCache>();
  std::visit(
      [&](auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          dim = s.center.dim();
          if (dim != 2 && dim != 3) invalid("disk center must be 2D or 3D");
          if (!s.center.finite()) invalid("disk center is not finite");
          if (!(s.radius > 0.0) || !std::isfinite(s.radius)) invalid("disk radius must be positive");
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          dim = s.center.dim();
          if (dim != 2 && dim != 3) invalid("ellipse center must be 2D or 3D");
          if (s.semi_axes.dim() != dim)
            throw Error(ErrorCode::kDimensionMismatch, "ellipse semi_axes dimension must match center");
          if (!s.center.finite()) invalid("ellipse center is not finite");
          for (int i = 0; i < dim; ++i)
            if (!(s.semi_axes[i] > 0.0) || !std::isfinite(s.semi_axes[i]))
              invalid("ellipse semi-axes must be positive");
          if (dim == 2) {
            const int n = detail::kCoarseSamples;
            cache->params.resize(n);
            cache->points.reserve(n);
            for (int i = 0; i < n; ++i) {
              double t = kTwoPi * i / n;
              cache->params[i] = t;
              cache->points.push_back(
                  Point(s.center[0] + s.semi_axes[0] * std::cos(t), s.center[1] + s.semi_axes[1] * std::sin(t)));
            }
          } else {
            cache->n_lat = 48;
            cache->n_lon = 96;
            for (int i = 0; i < cache->n_lat; ++i) {
              double phi = kPi * (i + 0.5) / cache->n_lat;
              for (int j = 0; j < cache->n_lon; ++j) {
                double lam = kTwoPi * j / cache->n_lon;
                cache->directions.push_back(
                    Point(std::sin(phi) * std::cos(lam), std::sin(phi) * std::sin(lam), std::cos(phi)));
              }
            }
          }
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          dim = s.normal.dim();
          if (dim != 2 && dim != 3) invalid("half-space normal must be 2D or 3D");
          if (!s.normal.finite() || !std::isfinite(s.offset)) invalid("half-space parameters are not finite");
          double len = norm(s.normal);
          if (!(len > 0.0)) invalid("half-space normal must be non-zero");
          if (len != 1.0) {
            s.normal /= len;
            s.offset /= len;
          }
        } else if constexpr (std::is_same_v<T, Polygon>) {
          validate_polygon(s);
        } else if constexpr (std::is_same_v<T, Spiral>) {
          if (!(s.beta > 0.0) || !std::isfinite(s.beta)) invalid("spiral beta must be positive");
          if (!(s.theta_min >= 0.0) || !std::isfinite(s.theta_min)) invalid("spiral theta_min must be >= 0");
          if (!(s.theta_max > s.theta_min + kTwoPi) || !std::isfinite(s.theta_max))
            invalid("spiral theta_max must exceed theta_min by at least one winding");
        } else if constexpr (std::is_same_v<T, Cusp>) {
          if (!(s.alpha > 0.0 && s.alpha < 1.0)) invalid("cusp alpha must lie in (0, 1)");
        }
      },
      spec);
  Shape shape(std::move(spec), dim);
  shape.cache_ = std::move(cache);
  return shape;
}

namespace {

// Winding parameters on the ray through z: returns false when z is the apex.
struct SpiralRay {
  double r = 0.0;
  double angle = 0.0;  // in [theta_min, theta_min + 2 pi)
};

SpiralRay spiral_ray(const Spiral& s, const Point& z) {
  return {std::hypot(z[0], z[1]), detail::angle_from(z[1], z[0], s.theta_min)};
}

// Smallest |r - wall radius| over the walls crossing the ray, plus which wall
// (0 = outer wall r = f(theta), 1 = inner wall r = f(theta + pi)) and theta.
struct WallMatch {
  double residual = std::numeric_limits<double>::infinity();
  int wall = -1;
  double theta = 0.0;
};

WallMatch spiral_wall_match(const Spiral& s, const SpiralRay& ray) {
  WallMatch best;
  double theta_r = spiral_wall_inverse(s, ray.r);
  for (int wall = 0; wall < 2; ++wall) {
    double shift = wall == 0 ? 0.0 : kPi;
    double k0 = std::floor((theta_r - shift - ray.angle) / kTwoPi);
    for (double k = k0 - 1; k <= k0 + 2; k += 1.0) {
      if (k < 0) continue;
      double theta = ray.angle + kTwoPi * k;
      double res = std::abs(ray.r - spiral_wall(s, theta + shift));
      if (res < best.residual) best = {res, wall, theta};
    }
  }
  return best;
}

}  // namespace

Side Shape::contains(const Point& x) const {
  check_dim(x);
  return std::visit(
      [&](const auto& s) -> Side {
        using T = std::decay_t<decltype(s)>;
        bool inside = false;
        if constexpr (std::is_same_v<T, Disk>) {
          inside = distance(x, s.center) < s.radius;
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          double q = 0.0;
          for (int i = 0; i < dim_; ++i) {
            double u = (x[i] - s.center[i]) / s.semi_axes[i];
            q += u * u;
          }
          inside = q < 1.0;
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          inside = dot(s.normal, x) > s.offset;
        } else if constexpr (std::is_same_v<T, Polygon>) {
          const auto& v = s.vertices;
          const std::size_t n = v.size();
          for (std::size_t i = 0; i < n; ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % n];
            if (orient(a, b, x) == 0.0 && on_segment(a, b, x)) return Side::kOutside;
          }
          bool odd = false;
          for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            const Point& a = v[i];
            const Point& b = v[j];
            if ((a[1] > x[1]) != (b[1] > x[1])) {
              double xc = a[0] + (x[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
              if (x[0] < xc) odd = !odd;
            }
          }
          inside = odd;
        } else if constexpr (std::is_same_v<T, Spiral>) {
          SpiralRay ray = spiral_ray(s, x);
          if (ray.r == 0.0) return Side::kOutside;
          double theta_r = spiral_wall_inverse(s, ray.r);
          // theta_k = angle + 2 pi k must satisfy theta_r - pi < theta_k < theta_r.
          double k0 = std::floor((theta_r - ray.angle) / kTwoPi);
          for (double k = k0 - 1; k <= k0 + 1; k += 1.0) {
            if (k < 0) continue;
            double theta = ray.angle + kTwoPi * k;
            if (!(theta > s.theta_min)) continue;
            if (spiral_wall(s, theta + kPi) < ray.r && ray.r < spiral_wall(s, theta)) {
              inside = true;
              break;
            }
          }
        } else if constexpr (std::is_same_v<T, Cusp>) {
          inside = x[0] > std::pow(std::abs(x[1]), 1.0 + s.alpha);
        }
        return inside ? Side::kInside : Side::kOutside;
      },
      spec_);
}

double Shape::boundary_residual(const Point& p) const {
  check_dim(p);
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return std::abs(distance(p, s.center) - s.radius);
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          double q = 0.0, amin = s.semi_axes[0];
          for (int i = 0; i < dim_; ++i) {
            double u = (p[i] - s.center[i]) / s.semi_axes[i];
            q += u * u;
            amin = std::min(amin, s.semi_axes[i]);
          }
          return std::abs(std::sqrt(q) - 1.0) * amin;
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          return std::abs(dot(s.normal, p) - s.offset);
        } else if constexpr (std::is_same_v<T, Polygon>) {
          double best = std::numeric_limits<double>::infinity();
          const auto& v = s.vertices;
          for (std::size_t i = 0; i < v.size(); ++i)
            best = std::min(best, distance(p, detail::closest_on_segment(v[i], v[(i + 1) % v.size()], p)));
          return best;
        } else if constexpr (std::is_same_v<T, Spiral>) {
          SpiralRay ray = spiral_ray(s, p);
          if (ray.r == 0.0) return 0.0;
          Point dir(std::cos(s.theta_min), std::sin(s.theta_min));
          Point cap = detail::closest_on_segment(dir * spiral_wall(s, s.theta_min + kPi),
                                                 dir * spiral_wall(s, s.theta_min), p);
          return std::min(spiral_wall_match(s, ray).residual, distance(p, cap));
        } else if constexpr (std::is_same_v<T, Cusp>) {
          return std::abs(p[0] - std::pow(std::abs(p[1]), 1.0 + s.alpha));
        }
      },
      spec_);
}

Point Shape::inner_normal(const Point& p) const {
  check_dim(p);
  constexpr double kOnBoundaryTol = 1e-9;
  if (boundary_residual(p) > kOnBoundaryTol)
    throw Error(ErrorCode::kNotOnBoundary, "point is not on the boundary");
  return std::visit(
      [&](const auto& s) -> Point {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return normalized(s.center - p);
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          Point g = Point::zeros(dim_);
          for (int i = 0; i < dim_; ++i) g[i] = -(p[i] - s.center[i]) / (s.semi_axes[i] * s.semi_axes[i]);
          return normalized(g);
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          return s.normal;
        } else if constexpr (std::is_same_v<T, Polygon>) {
          const auto& v = s.vertices;
          const std::size_t n = v.size();
          for (const auto& q : v)
            if (distance(p, q) <= kOnBoundaryTol) throw Error(ErrorCode::kNotC1, "polygon vertex");
          std::size_t best = 0;
          double best_d = std::numeric_limits<double>::infinity();
          for (std::size_t i = 0; i < n; ++i) {
            double d = distance(p, detail::closest_on_segment(v[i], v[(i + 1) % n], p));
            if (d < best_d) {
              best_d = d;
              best = i;
            }
          }
          return normalized(perp(v[(best + 1) % n] - v[best]));
        } else if constexpr (std::is_same_v<T, Spiral>) {
          SpiralRay ray = spiral_ray(s, p);
          if (ray.r == 0.0) throw Error(ErrorCode::kNotC1, "spiral apex");
          Point dir(std::cos(s.theta_min), std::sin(s.theta_min));
          Point outer_corner = dir * spiral_wall(s, s.theta_min);
          Point inner_corner = dir * spiral_wall(s, s.theta_min + kPi);
          if (distance(p, outer_corner) <= kOnBoundaryTol || distance(p, inner_corner) <= kOnBoundaryTol)
            throw Error(ErrorCode::kNotC1, "spiral end-cap corner");
          WallMatch m = spiral_wall_match(s, ray);
          double cap_d = distance(p, detail::closest_on_segment(inner_corner, outer_corner, p));
          if (cap_d < m.residual) return perp(dir);
          Point er(std::cos(ray.angle), std::sin(ray.angle));
          Point et = perp(er);
          if (m.wall == 0) {
            double ratio = spiral_wall_derivative(s, m.theta, 1) / spiral_wall(s, m.theta);
            return normalized(et * ratio - er);
          }
          double ratio = spiral_wall_derivative(s, m.theta + kPi, 1) / spiral_wall(s, m.theta + kPi);
          return normalized(er - et * ratio);
        } else if constexpr (std::is_same_v<T, Cusp>) {
          double a = std::abs(p[1]);
          double slope = (1.0 + s.alpha) * std::pow(a, s.alpha) * (p[1] < 0 ? -1.0 : 1.0);
          return normalized(Point(1.0, -slope));
        }
      },
      spec_);
}

std::vector<Point> Shape::boundary_sample(double spacing, double extent) const {
  if (!(spacing > 0.0)) throw Error(ErrorCode::kInvalidSpec, "spacing must be positive");
  std::vector<Point> out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          if (dim_ == 2) {
            int n = std::max(3, static_cast<int>(std::ceil(kTwoPi * s.radius / spacing)));
            out.reserve(n);
            for (int i = 0; i < n; ++i) {
              double t = kTwoPi * i / n;
              out.push_back(s.center + Point(std::cos(t), std::sin(t)) * s.radius);
            }
          } else {
            int n_lat = static_cast<int>(std::ceil(kPi * s.radius / spacing)) + 1;
            for (int i = 0; i <= n_lat; ++i) {
              double phi = kPi * i / n_lat;
              int n_lon = std::max(1, static_cast<int>(std::ceil(kTwoPi * s.radius * std::sin(phi) / spacing)));
              for (int j = 0; j < n_lon; ++j) {
                double lam = kTwoPi * j / n_lon;
                out.push_back(s.center + Point(std::sin(phi) * std::cos(lam), std::sin(phi) * std::sin(lam),
                                               std::cos(phi)) *
                                             s.radius);
              }
            }
          }
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          if (dim_ == 2) {
            auto curve = [&](double t) {
              return Point(s.center[0] + s.semi_axes[0] * std::cos(t), s.center[1] + s.semi_axes[1] * std::sin(t));
            };
            sample_curve(curve, 0.0, kTwoPi, spacing, out, false);
            // Close the loop: the wrap-around gap must also respect the spacing.
            while (distance(out.back(), out.front()) > spacing) {
              double t = std::atan2((out.back()[1] - s.center[1]) / s.semi_axes[1],
                                    (out.back()[0] - s.center[0]) / s.semi_axes[0]);
              if (t < 0) t += kTwoPi;
              out.push_back(curve(0.5 * (t + kTwoPi)));
            }
          } else {
            double amax = std::max({s.semi_axes[0], s.semi_axes[1], s.semi_axes[2]});
            int n_lat = static_cast<int>(std::ceil(kPi * amax / spacing)) + 1;
            for (int i = 0; i <= n_lat; ++i) {
              double phi = kPi * i / n_lat;
              int n_lon = std::max(1, static_cast<int>(std::ceil(kTwoPi * amax * std::sin(phi) / spacing)));
              for (int j = 0; j < n_lon; ++j) {
                double lam = kTwoPi * j / n_lon;
                out.push_back(Point(s.center[0] + s.semi_axes[0] * std::sin(phi) * std::cos(lam),
                                    s.center[1] + s.semi_axes[1] * std::sin(phi) * std::sin(lam),
                                    s.center[2] + s.semi_axes[2] * std::cos(phi)));
              }
            }
          }
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          Point foot = s.normal * s.offset;
          int n = static_cast<int>(std::ceil(2.0 * extent / spacing));
          if (dim_ == 2) {
            Point t = perp(s.normal);
            for (int i = 0; i <= n; ++i) out.push_back(foot + t * (-extent + 2.0 * extent * i / n));
          } else {
            Point helper = std::abs(s.normal[0]) < 0.9 ? Point(1, 0, 0) : Point(0, 1, 0);
            Point t1 = normalized(helper - s.normal * dot(helper, s.normal));
            Point t2(s.normal[1] * t1[2] - s.normal[2] * t1[1], s.normal[2] * t1[0] - s.normal[0] * t1[2],
                     s.normal[0] * t1[1] - s.normal[1] * t1[0]);
            for (int i = 0; i <= n; ++i)
              for (int j = 0; j <= n; ++j)
                out.push_back(foot + t1 * (-extent + 2.0 * extent * i / n) + t2 * (-extent + 2.0 * extent * j / n));
          }
        } else if constexpr (std::is_same_v<T, Polygon>) {
          const auto& v = s.vertices;
          for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& a = v[i];
            Point e = v[(i + 1) % v.size()] - a;
            int k = std::max(1, static_cast<int>(std::ceil(norm(e) / spacing)));
            for (int j = 0; j < k; ++j) out.push_back(a + e * (static_cast<double>(j) / k));
          }
        } else if constexpr (std::is_same_v<T, Spiral>) {
          auto outer = [&](double t) { return Point(std::cos(t), std::sin(t)) * spiral_wall(s, t); };
          auto inner = [&](double t) { return Point(std::cos(t), std::sin(t)) * spiral_wall(s, t + kPi); };
          sample_curve(outer, s.theta_min, s.theta_max, spacing, out, true);
          sample_curve(inner, s.theta_min, s.theta_max, spacing, out, true);
          Point dir(std::cos(s.theta_min), std::sin(s.theta_min));
          double r0 = spiral_wall(s, s.theta_min + kPi), r1 = spiral_wall(s, s.theta_min);
          int k = std::max(1, static_cast<int>(std::ceil((r1 - r0) / spacing)));
          for (int j = 1; j < k; ++j) out.push_back(dir * (r0 + (r1 - r0) * j / k));
        } else if constexpr (std::is_same_v<T, Cusp>) {
          auto curve = [&](double t) { return Point(std::pow(std::abs(t), 1.0 + s.alpha), t); };
          sample_curve(curve, -extent, 0.0, spacing, out, true);
          sample_curve(curve, 0.0, extent, spacing, out, true);
          // The apex appears as the end of the first branch and the start of the second.
          auto apex = std::find(out.begin() + 1, out.end(), Point(0.0, 0.0));
          if (apex != out.end()) {
            auto dup = std::find(apex + 1, out.end(), Point(0.0, 0.0));
            if (dup != out.end()) out.erase(dup);
          }
        }
      },
      spec_);
  return out;
}

}  // namespace eikon
