#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eikon/point.hpp"

namespace eikon {

// Ball in R^m (a disk when m = 2).
struct Disk {
  Point center;
  double radius = 1.0;
};

// Axis-aligned ellipse / ellipsoid.
struct Ellipse {
  Point center;
  Point semi_axes;
};

// {x : <normal, x> > offset}.
struct HalfSpace {
  Point normal;
  double offset = 0.0;
};

// Closed simple loop in the plane; stored counter-clockwise.
struct Polygon {
  std::vector<Point> vertices;
};

enum class SpiralWall {
  kPowerLaw,     // f(theta) = (1 + theta)^(-beta)
  kExponential,  // f(theta) = exp(-beta * theta); wall ratio does not tend to 1
};

// Thickened spiral {r e^{i theta} : theta > theta_min, f(theta + pi) < r < f(theta)}.
// theta_max bounds boundary sampling and the admissible query zone near 0.
struct Spiral {
  double beta = 1.0;
  double theta_min = 0.0;
  double theta_max = 40.0 * 3.14159265358979323846;
  SpiralWall wall = SpiralWall::kPowerLaw;
};

// D_alpha = {x1 > |x2|^(1 + alpha)}.
struct Cusp {
  double alpha = 0.5;
};

using ShapeSpec = std::variant<Disk, Ellipse, HalfSpace, Polygon, Spiral, Cusp>;

enum class ShapeKind { kDisk, kEllipse, kHalfSpace, kPolygon, kSpiral, kCusp };

enum class Side { kInside, kOutside };

const char* to_string(ShapeKind kind);

// Spiral wall function and its closed-form inverse.
double spiral_wall(const Spiral& s, double theta);
double spiral_wall_derivative(const Spiral& s, double theta, int order);
double spiral_wall_inverse(const Spiral& s, double r);

namespace detail {
struct ShapeCache;
}

// A validated, immutable domain. Cheap to copy.
class Shape {
 public:
  // Validates the spec; throws kInvalidSpec on out-of-range parameters or a
  // self-intersecting polygon. Clockwise polygons are reoriented.
  static Shape make(ShapeSpec spec);

  ShapeKind kind() const noexcept { return static_cast<ShapeKind>(spec_.index()); }
  int dim() const noexcept { return dim_; }
  const ShapeSpec& spec() const noexcept { return spec_; }

  template <class T>
  const T& as() const {
    return std::get<T>(spec_);
  }

  // Open-set membership; boundary points are Outside.
  Side contains(const Point& x) const;

  // Points on the boundary with consecutive gap <= spacing along each
  // component. Unbounded boundaries (half-space, cusp) are sampled within
  // `extent` of the origin; the spiral is sampled for theta in
  // [theta_min, theta_max].
  std::vector<Point> boundary_sample(double spacing, double extent = 2.0) const;

  // Inner unit normal at a C^1 boundary point. Throws kNotOnBoundary when p
  // misses the boundary equation by more than 1e-9 and kNotC1 at corners.
  Point inner_normal(const Point& p) const;

  // Residual of the boundary equation at p (0 on the boundary).
  double boundary_residual(const Point& p) const;

  const detail::ShapeCache& cache() const { return *cache_; }

  void check_dim(const Point& x) const {
    if (x.dim() != dim_) throw Error(ErrorCode::kDimensionMismatch, "query dimension does not match shape");
  }

 private:
  Shape(ShapeSpec spec, int dim);

  ShapeSpec spec_;
  int dim_ = 2;
  std::shared_ptr<const detail::ShapeCache> cache_;
};

}  // namespace eikon
