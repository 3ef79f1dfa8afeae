#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eikon/eikonal.hpp"
#include "oracles.hpp"

using namespace eikon;

namespace {

GridSpec square_grid(double lo, double hi, int n) { return GridSpec::covering(Point(lo, lo), Point(hi, hi), {n, n}); }

double signed_area(const Chain& c) {
  double a = 0.0;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const Point& p = c.vertices[i];
    const Point& q = c.vertices[(i + 1) % c.vertices.size()];
    a += p[0] * q[1] - p[1] * q[0];
  }
  return 0.5 * a;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kPreconditionViolated;
}

}  // namespace

TEST(Grid, Indexing) {
  GridSpec g;
  g.origin = Point(0.0, 0.0, 0.0);
  g.h = 0.5;
  g.dims = {3, 4, 5};
  EXPECT_EQ(g.cell_count(), 60u);
  for (std::size_t i = 0; i < g.cell_count(); ++i) EXPECT_EQ(g.linear_index(g.multi_index(i)), i);
  std::vector<int> idx{1, 2, 3};
  EXPECT_EQ(g.linear_index(idx), 1u * 20 + 2 * 5 + 3);
  EXPECT_EQ(g.cell_center(g.linear_index(idx)), Point(0.75, 1.25, 1.75));
  EXPECT_EQ(code_of([] { GridSpec::covering(Point(0.0, 0.0), Point(1.0, 2.0), {10, 10}); }),
            ErrorCode::kInvalidSpec);
}

TEST(Fmm, HalfSpaceIsExact) {
  Shape hs = Shape::make(HalfSpace{{1.0, 0.0}, 0.0});
  for (int n : {17, 64}) {
    GridField f = solve_fmm(hs, square_grid(-1.0, 1.0, n));
    EXPECT_LE(grid_error(f, hs).max_abs, 1e-12) << n;
  }
  Shape hs3 = Shape::make(HalfSpace{{0.0, 0.0, 1.0}, 0.1});
  GridSpec g = GridSpec::covering(Point(-1.0, -1.0, -1.0), Point(1.0, 1.0, 1.0), {16, 16, 16});
  EXPECT_LE(grid_error(solve_fmm(hs3, g), hs3).max_abs, 1e-12);
}

TEST(Fmm, DiskFirstOrder) {
  Shape disk = Shape::make(Disk{{0.0, 0.0}, 1.0});
  GridSpec g = square_grid(-1.5, 1.5, 128);
  FmmDiagnostics diag;
  GridField f = solve_fmm(disk, g, &diag);
  double worst_inside = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    Point x = g.cell_center(i);
    double exact = oracle::disk_sd(x);
    ASSERT_TRUE(std::isfinite(f.values[i]));
    if (f.frozen[i]) {
      EXPECT_EQ(f.values[i], signed_distance(disk, x));
      EXPECT_LE(std::abs(exact), 2.0 * g.h);
    } else {
      // Sign-merge consistency.
      EXPECT_EQ(f.values[i] > 0, exact > 0) << i;
    }
    if (exact > 0) worst_inside = std::max(worst_inside, std::abs(f.values[i] - exact));
  }
  EXPECT_LE(worst_inside, 2.0 * g.h);
  // Upwind causality within each sign region.
  for (const auto* seq : {&diag.accepted_inside, &diag.accepted_outside}) {
    ASSERT_FALSE(seq->empty());
    for (std::size_t i = 1; i < seq->size(); ++i) EXPECT_GE((*seq)[i], (*seq)[i - 1]);
  }
  // Halving h shrinks the error by a first-order factor.
  GridField fine = solve_fmm(disk, square_grid(-1.5, 1.5, 256));
  GridError e = grid_error(f, disk, &fine);
  double ratio = std::pow(2.0, e.order_estimate);
  EXPECT_GE(ratio, 1.4);
  EXPECT_LE(ratio, 2.8);
  EXPECT_TRUE(std::isnan(grid_error(f, disk).order_estimate));
}

TEST(Fmm, EllipseConvergence) {
  Shape ell = Shape::make(Ellipse{{0.0, 0.0}, {2.0, 1.0}});
  GridField coarse = solve_fmm(ell, square_grid(-2.5, 2.5, 100));
  GridField fine = solve_fmm(ell, square_grid(-2.5, 2.5, 200));
  double ratio = std::pow(2.0, grid_error(coarse, ell, &fine).order_estimate);
  EXPECT_GE(ratio, 1.4);
  EXPECT_LE(ratio, 2.8);
}

TEST(Fmm, SquareErrorsSitOnDiagonals) {
  Shape sq = Shape::make(Polygon{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}});
  GridSpec g = square_grid(-1.5, 1.5, 256);
  GridField f = solve_fmm(sq, g);
  double worst = 0.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    Point x = g.cell_center(i);
    double err = std::abs(f.values[i] - oracle::square_sd(x));
    if (err > worst) {
      worst = err;
      arg = i;
    }
  }
  EXPECT_LE(worst, 3.0 * g.h);
  Point x = g.cell_center(arg);
  EXPECT_LE(std::abs(std::abs(x[0]) - std::abs(x[1])), 4.0 * g.h) << x[0] << "," << x[1];
}

TEST(Fmm, EmptyBand) {
  Shape disk = Shape::make(Disk{{0.0, 0.0}, 1.0});
  GridSpec far = GridSpec::covering(Point(5.0, 5.0), Point(6.0, 6.0), {10, 10});
  EXPECT_EQ(code_of([&] { solve_fmm(disk, far); }), ErrorCode::kEmptyBand);
}

TEST(Fmm, SpiralZoneIsSkipped) {
  Spiral sp;
  sp.theta_max = 10.0;  // rejection radius f(10)/2 ~ 0.045, larger than a cell
  Shape spiral = Shape::make(sp);
  GridSpec g = square_grid(-1.1, 1.1, 64);
  GridField exact = sample_signed_distance(spiral, g);
  GridField f = solve_fmm(spiral, g);
  ASSERT_EQ(f.values.size(), exact.values.size());
  std::size_t nan_cells = 0;
  for (std::size_t i = 0; i < exact.values.size(); ++i) {
    if (!std::isnan(exact.values[i])) continue;
    ++nan_cells;
    EXPECT_FALSE(f.frozen[i]);
  }
  EXPECT_GT(nan_cells, 0u);
}

TEST(LevelSet, DiskCircle) {
  Shape disk = Shape::make(Disk{{0.0, 0.0}, 1.0});
  GridSpec g = square_grid(-1.5, 1.5, 128);
  GridField f = solve_fmm(disk, g);
  LevelSet ls = extract_level_set(f, 0.5);
  ASSERT_EQ(ls.chains.size(), 1u);
  EXPECT_TRUE(ls.chains[0].closed);
  EXPECT_GT(signed_area(ls.chains[0]), 0.0);  // {u > a} on the left: counter-clockwise
  for (const Point& v : ls.chains[0].vertices) {
    EXPECT_NEAR(norm(v), 0.5, g.h);
    EXPECT_NEAR(interpolate(f, v), 0.5, 1e-9);
  }
  LevelSet boundary = extract_level_set(sample_signed_distance(disk, g), 0.0);
  ASSERT_EQ(boundary.chains.size(), 1u);
  for (const Point& v : boundary.chains[0].vertices) EXPECT_NEAR(norm(v), 1.0, g.h * g.h);
}

TEST(LevelSet, HalfSpaceLine) {
  Shape hs = Shape::make(HalfSpace{{1.0, 0.0}, 0.0});
  GridField f = solve_fmm(hs, square_grid(-1.0, 1.0, 64));
  LevelSet ls = extract_level_set(f, 0.25);
  ASSERT_EQ(ls.chains.size(), 1u);
  EXPECT_FALSE(ls.chains[0].closed);
  for (const Point& v : ls.chains[0].vertices) EXPECT_NEAR(v[0], 0.25, 1e-9);
  // x1 > 0.25 on the left means the chain runs toward -x2.
  EXPECT_LT(ls.chains[0].vertices.back()[1], ls.chains[0].vertices.front()[1]);
  EXPECT_EQ(code_of([&] { extract_level_set(f, 5.0); }), ErrorCode::kLevelOutOfRange);
}

TEST(LevelSet, SaddleIsDeterministic) {
  GridField f;
  f.grid.origin = Point(0.0, 0.0);
  f.grid.h = 1.0;
  f.grid.dims = {2, 2};
  // Row-major (x fastest last): (0,0)=1, (0,1)=0, (1,0)=0, (1,1)=1.
  f.values = {1.0, 0.0, 0.0, 1.0};
  f.frozen.assign(4, 0);
  LevelSet above = extract_level_set(f, 0.4);  // centre 0.5 > 0.4: above corners connect
  LevelSet below = extract_level_set(f, 0.6);
  ASSERT_EQ(above.chains.size(), 2u);
  ASSERT_EQ(below.chains.size(), 2u);
  for (const LevelSet* ls : {&above, &below})
    for (const Chain& c : ls->chains) {
      EXPECT_EQ(c.vertices.size(), 2u);
      for (const Point& v : c.vertices) EXPECT_NEAR(interpolate(f, v), ls->level, 1e-12);
    }
  // Above: each chain cuts off a low corner, (1,0) or (0,1).
  auto cuts = [](const Chain& c, Point corner) {
    return distance(c.vertices[0], corner) < 0.71 && distance(c.vertices[1], corner) < 0.71;
  };
  EXPECT_TRUE(cuts(above.chains[0], Point(1.5, 0.5)) || cuts(above.chains[0], Point(0.5, 1.5)));
  EXPECT_TRUE(cuts(below.chains[0], Point(0.5, 0.5)) || cuts(below.chains[0], Point(1.5, 1.5)));
}

TEST(LevelSet, Interpolation) {
  GridSpec g = square_grid(0.0, 1.0, 10);
  GridField f;
  f.grid = g;
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    Point c = g.cell_center(i);
    f.values.push_back(2.0 * c[0] - 3.0 * c[1] + 1.0);
  }
  f.frozen.assign(f.values.size(), 0);
  EXPECT_NEAR(interpolate(f, Point(0.33, 0.71)), 2 * 0.33 - 3 * 0.71 + 1, 1e-13);
  EXPECT_EQ(code_of([&] { interpolate(f, Point(0.01, 0.5)); }), ErrorCode::kInvalidSpec);
}

TEST(LevelDistance, DiskAndHalfSpace) {
  Shape disk = Shape::make(Disk{{0.0, 0.0}, 1.0});
  std::vector<Point> ring;
  for (int i = 0; i < 16; ++i) ring.push_back(Point(std::cos(0.4 * i), std::sin(0.4 * i)) * 0.5);
  EXPECT_LE(verify_level_distance(disk, 0.2, ring), 1e-6);

  Shape hs = Shape::make(HalfSpace{{1.0, 0.0}, 0.0});
  EXPECT_LE(verify_level_distance(hs, 1.0, {Point(3.0, 7.0)}), 1e-9);

  EXPECT_EQ(code_of([&] { verify_level_distance(disk, 0.2, {Point(0.9, 0.0)}); }), ErrorCode::kInvalidTube);
  EXPECT_EQ(code_of([&] { verify_level_distance(disk, 0.2, {Point(0.0, 0.0)}); }), ErrorCode::kInvalidTube);
  EXPECT_EQ(code_of([&] { verify_level_distance(disk, 0.0, ring); }), ErrorCode::kInvalidTube);
}

TEST(LevelDistance, EllipseTube) {
  Shape ell = Shape::make(Ellipse{{0.0, 0.0}, {2.0, 1.0}});
  // Points at depth 0.3 along inner normals, away from the major axis.
  std::vector<Point> samples;
  for (int i = 0; i < 100; ++i) {
    double t = 0.3 + 2.5 * i / 99.0;
    Point q(2.0 * std::cos(t), std::sin(t));
    samples.push_back(q + ell.inner_normal(q) * 0.3);
  }
  EXPECT_LE(verify_level_distance(ell, 0.1, samples, 1e-4), 1e-6);
}
