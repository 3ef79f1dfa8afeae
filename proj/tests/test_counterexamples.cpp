#include <gtest/gtest.h>

#include <cmath>

#include "eikon/counterexamples.hpp"
#include "eikon/eikonal.hpp"
#include "oracles.hpp"

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

Shape power_spiral(double theta_max = 4000.0) {
  Spiral sp;
  sp.theta_max = theta_max;
  return Shape::make(sp);
}

}  // namespace

TEST(Spiral, BoundAtHundred) {
  SpiralEvidence ev = spiral_ratio_sequence(power_spiral(), {100.0});
  ASSERT_EQ(ev.records.size(), 1u);
  // f(100)/f(100 + pi) - 1 = pi/101 for f = 1/(1 + theta).
  EXPECT_NEAR(ev.records[0].bound, 0.031104877758314942, 1e-15);
  EXPECT_LE(ev.records[0].measured_ratio, ev.records[0].bound);
  EXPECT_GT(ev.records[0].measured_ratio, 0.0);
}

TEST(Spiral, RatioDecreasesWithTheta) {
  SpiralEvidence ev = spiral_ratio_sequence(power_spiral(), {10.0, 100.0, 1000.0});
  EXPECT_TRUE(ev.bound_holds);
  EXPECT_TRUE(ev.ratio_decreasing);
  EXPECT_TRUE(ev.abs_z_decreasing);
  EXPECT_LT(ev.records.back().measured_ratio, 2e-3);
  for (const SpiralRecord& r : ev.records) {
    EXPECT_NEAR(r.abs_z, norm(r.z), 1e-15);
    EXPECT_NEAR(std::atan2(r.z[1], r.z[0]), std::remainder(r.theta, 2 * M_PI), 1e-9);
  }
}

TEST(Spiral, DistancesMatchBruteForce) {
  SpiralEvidence ev = spiral_ratio_sequence(power_spiral(), {12.0, 50.0, 100.0});
  for (const SpiralRecord& r : ev.records) {
    double ref = oracle::spiral_distance(1.0, false, r.z, r.theta - 9.0, r.theta + 9.0);
    EXPECT_NEAR(r.measured_ratio * r.abs_z, ref, 1e-9) << r.theta;
  }
}

TEST(Spiral, ExponentialWallKeepsTheRatio) {
  Spiral sp;
  sp.theta_max = 40.0;
  sp.wall = SpiralWall::kExponential;
  Shape spiral = Shape::make(sp);
  SpiralEvidence ev = spiral_ratio_sequence(spiral, {5.0, 10.0, 20.0, 30.0});
  for (const SpiralRecord& r : ev.records) {
    double ref = oracle::spiral_distance(1.0, true, r.z, r.theta - 9.0, r.theta + 9.0);
    EXPECT_NEAR(r.measured_ratio, ref / r.abs_z, 1e-7) << r.theta;
    // Self-similar: the same value at every angle.
    EXPECT_NEAR(r.measured_ratio, 0.53265431845393973, 1e-9) << r.theta;
    EXPECT_GE(r.measured_ratio, exponential_ratio_floor());
  }
  EXPECT_NEAR(exponential_ratio_floor(), 0.45857616783363719, 1e-15);
}

TEST(Spiral, MedialPoint) {
  Shape spiral = power_spiral();
  for (double theta : {3.0, 30.0, 300.0}) {
    Point m = spiral_medial_point(spiral, theta);
    EXPECT_EQ(spiral.contains(m), Side::kInside);
    EXPECT_TRUE(is_medial(spiral, m, 1e-6 * norm(m))) << theta;
  }
}

TEST(Spiral, Truncation) {
  Shape spiral = power_spiral(100.0);
  EXPECT_EQ(code_of([&] { spiral_ratio_sequence(spiral, {99.0}); }), ErrorCode::kTruncationExceeded);
  EXPECT_EQ(code_of([&] { spiral_ratio_sequence(spiral, {20.0, 10.0}); }), ErrorCode::kInvalidSpec);
  EXPECT_EQ(code_of([&] { spiral_ratio_sequence(spiral, {0.0}); }), ErrorCode::kInvalidSpec);
  Shape disk = Shape::make(Disk{{0.0, 0.0}, 1.0});
  EXPECT_EQ(code_of([&] { spiral_ratio_sequence(disk, {1.0}); }), ErrorCode::kInvalidSpec);
}

TEST(Cusp, AxisIsMedialAndNothingElse) {
  CuspReport rep = cusp_medial_check(0.5, 100, 1.0, 1e-6);
  EXPECT_EQ(rep.samples.size(), 200u);
  EXPECT_EQ(rep.on_axis_medial, 100);
  EXPECT_EQ(rep.off_axis_regular, 100);
  EXPECT_EQ(rep.misclassified, 0);
  EXPECT_TRUE(rep.passed);
  for (const CuspSample& s : rep.samples) {
    if (s.on_axis) continue;
    EXPECT_GT(s.point[0], std::pow(std::abs(s.point[1]), 1.5));
  }
}

TEST(Cusp, GridScanFindsOnlyTheAxis) {
  Shape cusp = Shape::make(Cusp{0.5});
  GridSpec g = GridSpec::covering(Point(0.0, -0.5), Point(1.0, 0.5), {40, 40});
  int medial_cells = 0;
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    Point x = g.cell_center(i);
    if (cusp.contains(x) != Side::kInside) continue;
    if (is_medial(cusp, x, g.h)) {
      ++medial_cells;
      EXPECT_LE(std::abs(x[1]), g.h) << x[0] << "," << x[1];
    }
  }
  // Both rows next to the axis, for every column inside the domain.
  EXPECT_GE(medial_cells, 60);
}
