#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eikon/projection.hpp"

namespace eikon {

// Uniform cell-centred grid: cell i has centre origin + (i + 1/2) h per axis.
struct GridSpec {
  Point origin;
  double h = 0.0;
  std::vector<int> dims;

  int dim() const { return static_cast<int>(dims.size()); }
  std::size_t cell_count() const;
  // Row-major: the last axis varies fastest.
  std::size_t linear_index(std::span<const int> idx) const;
  std::vector<int> multi_index(std::size_t linear) const;
  Point cell_center(std::size_t linear) const;

  // Grid covering [lo, hi] per axis with n cells along each axis; the
  // spacing is taken from the first axis and must agree on the others.
  static GridSpec covering(const Point& lo, const Point& hi, const std::vector<int>& cells);
};

struct GridField {
  GridSpec grid;
  std::vector<double> values;       // +inf on cells the solve never reached
  std::vector<std::uint8_t> frozen;  // 1 on the exactly initialised band
};

// Acceptance order of each sign region, for causality checks.
struct FmmDiagnostics {
  std::vector<double> accepted_inside;
  std::vector<double> accepted_outside;
};

// First-order fast marching for |grad u| = 1 with u = d_D on the band
// |d_D| <= 2h. Inside and outside are marched separately and merged with the
// sign convention of signed_distance. Throws kEmptyBand when no cell lies in
// the band.
GridField solve_fmm(const Shape& shape, const GridSpec& grid, FmmDiagnostics* diagnostics = nullptr);

// Exact signed distance at every cell centre; NaN where the shape cannot be
// evaluated (spiral apex zone).
GridField sample_signed_distance(const Shape& shape, const GridSpec& grid);

struct Chain {
  std::vector<Point> vertices;
  bool closed = false;
};

// Level set {u = level} of a 2D field as polylines; the region u > level lies
// to the left of every chain.
struct LevelSet {
  double level = 0.0;
  std::vector<Chain> chains;
};

LevelSet extract_level_set(const GridField& field, double level);

// Bilinear interpolation of the field at x (x inside the hull of centres).
double interpolate(const GridField& field, const Point& x);

// Max over samples y of |dist(y, S_a) - (d_D(y) - a)|, where S_a = {d_D = a}
// is sampled densely (consecutive gap <= spacing) by offsetting boundary
// samples along the inner normal. Samples must satisfy d_D(y) > a > 0 with a
// unique projection (kInvalidTube otherwise).
double verify_level_distance(const Shape& shape, double a, const std::vector<Point>& samples,
                             double spacing = 1e-5);

struct GridError {
  double max_abs = 0.0;
  double mean_abs = 0.0;
  double order_estimate = 0.0;  // NaN unless a refined field is supplied
  std::size_t cells = 0;
};

// Error of a solved field against the exact signed distance. When `refined`
// (same box, half spacing) is given, order_estimate = log2(max_h / max_{h/2}).
GridError grid_error(const GridField& field, const Shape& shape, const GridField* refined = nullptr);

}  // namespace eikon
