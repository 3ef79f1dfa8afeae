#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "eikon/shape.hpp"

using namespace eikon;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no eikon::Error thrown";
  return ErrorCode::kPreconditionViolated;
}

Shape unit_square() { return Shape::make(Polygon{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}}); }

}  // namespace

TEST(Point, ArithmeticAndDims) {
  Point a(3.0, 4.0);
  EXPECT_DOUBLE_EQ(norm(a), 5.0);
  EXPECT_EQ(perp(Point(1.0, 0.0)), Point(0.0, 1.0));
  EXPECT_EQ(a - a, Point(0.0, 0.0));
  EXPECT_EQ(code_of([&] { return a + Point(1.0, 2.0, 3.0); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { return Point::zeros(4); }), ErrorCode::kDimensionMismatch);
  EXPECT_TRUE(lex_less(Point(0.0, 1.0), Point(1.0, 0.0)));
}

TEST(Shape, RejectsInvalidSpecs) {
  EXPECT_EQ(code_of([] { Shape::make(Disk{{0.0, 0.0}, 0.0}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([] { Shape::make(Ellipse{{0.0, 0.0}, {1.0, -1.0}}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([] { Shape::make(HalfSpace{{0.0, 0.0}, 0.0}); }), ErrorCode::kInvalidSpec);
  // Bow tie.
  EXPECT_EQ(code_of([] { Shape::make(Polygon{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([] { Shape::make(Polygon{{{0, 0}, {1, 0}}}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([] { Shape::make(Spiral{1.0, 0.0, 3.0, SpiralWall::kPowerLaw}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([] { Shape::make(Cusp{1.0}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([] { Shape::make(Cusp{0.0}); }), ErrorCode::kInvalidSpec);
}

TEST(Shape, ClockwisePolygonIsReoriented) {
  Shape s = Shape::make(Polygon{{{-1, 1}, {1, 1}, {1, -1}, {-1, -1}}});
  const auto& v = s.as<Polygon>().vertices;
  double area = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    area += a[0] * b[1] - a[1] * b[0];
  }
  EXPECT_GT(area, 0.0);
}

TEST(Shape, Membership) {
  Shape disk = Shape::make(Disk{{0.0, 0.0}, 1.0});
  EXPECT_EQ(disk.contains(Point(0.0, 0.0)), Side::kInside);
  EXPECT_EQ(disk.contains(Point(1.0, 0.0)), Side::kOutside);  // boundary counts as outside
  EXPECT_EQ(disk.contains(Point(1.1, 0.0)), Side::kOutside);

  Shape sq = unit_square();
  EXPECT_EQ(sq.contains(Point(0.5, 0.5)), Side::kInside);
  EXPECT_EQ(sq.contains(Point(1.0, 0.3)), Side::kOutside);
  EXPECT_EQ(sq.contains(Point(-1.0, -1.0)), Side::kOutside);

  Shape hs = Shape::make(HalfSpace{{2.0, 0.0}, 1.0});  // x1 > 0.5 after normalization
  EXPECT_EQ(hs.contains(Point(0.6, 9.0)), Side::kInside);
  EXPECT_EQ(hs.contains(Point(0.4, 9.0)), Side::kOutside);

  Shape cusp = Shape::make(Cusp{0.5});
  EXPECT_EQ(cusp.contains(Point(0.5, 0.0)), Side::kInside);
  EXPECT_EQ(cusp.contains(Point(1.0, 0.0)), Side::kInside);
  EXPECT_EQ(cusp.contains(Point(0.3, 0.5)), Side::kOutside);  // 0.5^1.5 > 0.3
  EXPECT_EQ(cusp.contains(Point(0.0, 0.0)), Side::kOutside);

  Spiral sp;
  Shape spiral = Shape::make(sp);
  // f(pi) ~ 0.2416 < 0.7 < f(0) = 1 on the first winding, just off the cap
  // ray theta = 0, which itself is boundary.
  EXPECT_EQ(spiral.contains(Point(std::cos(0.01), std::sin(0.01)) * 0.7), Side::kInside);
  EXPECT_EQ(spiral.contains(Point(0.7, 0.0)), Side::kOutside);
  for (double theta : {1.0, 10.0, 50.0}) {
    double r = 0.5 * (spiral_wall(sp, theta) + spiral_wall(sp, theta + M_PI));
    EXPECT_EQ(spiral.contains(Point(std::cos(theta), std::sin(theta)) * r), Side::kInside) << theta;
    // Just past the outer wall, the point sits between the windings.
    double past = spiral_wall(sp, theta) * 1.0001;
    EXPECT_EQ(spiral.contains(Point(std::cos(theta), std::sin(theta)) * past), Side::kOutside) << theta;
  }
}

TEST(Shape, InnerNormals) {
  Shape disk = Shape::make(Disk{{0.0, 0.0}, 1.0});
  Point n = disk.inner_normal(Point(1.0, 0.0));
  EXPECT_NEAR(n[0], -1.0, 1e-15);
  EXPECT_NEAR(n[1], 0.0, 1e-15);
  EXPECT_EQ(code_of([&] { disk.inner_normal(Point(0.5, 0.0)); }), ErrorCode::kNotOnBoundary);

  Shape ell = Shape::make(Ellipse{{0.0, 0.0}, {2.0, 1.0}});
  n = ell.inner_normal(Point(0.0, 1.0));
  EXPECT_NEAR(n[1], -1.0, 1e-15);

  Shape sq = unit_square();
  EXPECT_EQ(code_of([&] { sq.inner_normal(Point(1.0, 1.0)); }), ErrorCode::kNotC1);
  n = sq.inner_normal(Point(1.0, 0.2));
  EXPECT_NEAR(n[0], -1.0, 1e-15);

  Shape cusp = Shape::make(Cusp{0.5});
  n = cusp.inner_normal(Point(0.0, 0.0));
  EXPECT_NEAR(n[0], 1.0, 1e-15);
  EXPECT_NEAR(n[1], 0.0, 1e-15);

  Shape ball = Shape::make(Disk{{0.0, 0.0, 0.0}, 2.0});
  n = ball.inner_normal(Point(0.0, 0.0, 2.0));
  EXPECT_NEAR(n[2], -1.0, 1e-15);
}

TEST(Shape, SpiralWallInverse) {
  for (SpiralWall w : {SpiralWall::kPowerLaw, SpiralWall::kExponential}) {
    Spiral s{1.5, 0.0, 100.0, w};
    for (double t : {0.0, 0.3, 7.0, 42.0}) EXPECT_NEAR(spiral_wall_inverse(s, spiral_wall(s, t)), t, 1e-9 * (1 + t));
  }
  Spiral s;
  EXPECT_NEAR(spiral_wall(s, 100.0) / spiral_wall(s, 100.0 + M_PI) - 1.0, M_PI / 101.0, 1e-15);
}

TEST(Shape, BoundarySamplesAreDenseAndOnBoundary) {
  const double spacing = 1e-2;
  std::vector<Shape> closed = {Shape::make(Disk{{0.3, -0.2}, 1.5}), Shape::make(Ellipse{{0.0, 0.0}, {2.0, 1.0}}),
                               unit_square(), Shape::make(Polygon{{{0, 0}, {2, 0}, {1, 0.5}, {2, 1}, {0, 1}}})};
  for (const Shape& s : closed) {
    auto pts = s.boundary_sample(spacing);
    ASSERT_GT(pts.size(), 10u);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_LE(s.boundary_residual(pts[i]), 1e-9);
      EXPECT_LE(distance(pts[i], pts[(i + 1) % pts.size()]), spacing * (1 + 1e-12)) << to_string(s.kind()) << i;
    }
  }
  Shape cusp = Shape::make(Cusp{0.5});
  auto pts = cusp.boundary_sample(spacing, 1.0);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    EXPECT_LE(cusp.boundary_residual(pts[i]), 1e-9);
    EXPECT_LE(distance(pts[i], pts[i + 1]), spacing * (1 + 1e-12));
  }
  Shape spiral = Shape::make(Spiral{});
  for (const Point& p : spiral.boundary_sample(1e-2)) EXPECT_LE(spiral.boundary_residual(p), 1e-9);
}

TEST(Shape, SampleCounts) {
  auto circle = Shape::make(Disk{{0.0, 0.0}, 1.0}).boundary_sample(0.1);
  EXPECT_GE(circle.size(), 63u);
  for (const Point& p : circle) EXPECT_NEAR(norm(p), 1.0, 1e-12);
  auto sq = unit_square().boundary_sample(0.5);
  for (Point v : {Point(-1, -1), Point(1, -1), Point(1, 1), Point(-1, 1)})
    EXPECT_NE(std::find(sq.begin(), sq.end(), v), sq.end());
  for (const Point& p : Shape::make(Cusp{0.5}).boundary_sample(0.01))
    EXPECT_NEAR(p[0], std::pow(std::abs(p[1]), 1.5), 1e-12);
  EXPECT_NEAR(spiral_wall(Spiral{}, 40.0 * M_PI), 1.0 / 126.66, 1e-4);
  EXPECT_EQ(code_of([] { Shape::make(Polygon{{{0, 0}, {1, 0}, {0.5, 0.1}, {0.5, -0.1}}}); }),
            ErrorCode::kInvalidSpec);
}

TEST(Shape, DimensionChecks) {
  Shape disk = Shape::make(Disk{{0.0, 0.0}, 1.0});
  EXPECT_EQ(code_of([&] { disk.contains(Point(0.0, 0.0, 0.0)); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { Shape::make(Polygon{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([] { Shape::make(Ellipse{{0.0, 0.0}, {1.0, 1.0, 1.0}}); }), ErrorCode::kDimensionMismatch);
}
