#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include "eikon/eikonal.hpp"

namespace eikon {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::size_t GridSpec::cell_count() const {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

std::size_t GridSpec::linear_index(std::span<const int> idx) const {
  std::size_t lin = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) lin = lin * static_cast<std::size_t>(dims[k]) + idx[k];
  return lin;
}

std::vector<int> GridSpec::multi_index(std::size_t linear) const {
  std::vector<int> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = static_cast<int>(linear % static_cast<std::size_t>(dims[k]));
    linear /= static_cast<std::size_t>(dims[k]);
  }
  return idx;
}

Point GridSpec::cell_center(std::size_t linear) const {
  Point p = origin;
  std::vector<int> idx = multi_index(linear);
  for (int k = 0; k < dim(); ++k) p[k] = origin[k] + (idx[k] + 0.5) * h;
  return p;
}

GridSpec GridSpec::covering(const Point& lo, const Point& hi, const std::vector<int>& cells) {
  lo.same_dim(hi);
  if (static_cast<int>(cells.size()) != lo.dim())
    throw Error(ErrorCode::kDimensionMismatch, "cell counts must match the box dimension");
  GridSpec g;
  g.origin = lo;
  g.dims = cells;
  for (int k = 0; k < lo.dim(); ++k) {
    if (!(hi[k] > lo[k])) throw Error(ErrorCode::kInvalidSpec, "grid box must have min < max on every axis");
    if (cells[k] < 2) throw Error(ErrorCode::kInvalidSpec, "grid needs at least 2 cells per axis");
  }
  g.h = (hi[0] - lo[0]) / cells[0];
  for (int k = 1; k < lo.dim(); ++k) {
    double hk = (hi[k] - lo[k]) / cells[k];
    if (std::abs(hk - g.h) > 1e-12 * g.h) throw Error(ErrorCode::kInvalidSpec, "grid spacing must be isotropic");
  }
  return g;
}

namespace {

void check_grid(const Shape& shape, const GridSpec& grid) {
  if (grid.dim() != shape.dim()) throw Error(ErrorCode::kDimensionMismatch, "grid and shape dimensions differ");
  if (grid.origin.dim() != grid.dim()) throw Error(ErrorCode::kDimensionMismatch, "grid origin dimension");
  if (!(grid.h > 0.0)) throw Error(ErrorCode::kInvalidSpec, "grid spacing must be positive");
  for (int d : grid.dims)
    if (d < 1) throw Error(ErrorCode::kInvalidSpec, "grid dims must be positive");
}

struct Strides {
  std::vector<std::size_t> stride;
  explicit Strides(const GridSpec& g) : stride(g.dims.size()) {
    std::size_t s = 1;
    for (std::size_t k = g.dims.size(); k-- > 0;) {
      stride[k] = s;
      s *= static_cast<std::size_t>(g.dims[k]);
    }
  }
  int coord(const GridSpec& g, std::size_t i, std::size_t k) const {
    return static_cast<int>((i / stride[k]) % static_cast<std::size_t>(g.dims[k]));
  }
};

// Upwind update from the smallest known neighbour along each axis: solve
// sum (u - a_k)^2 = h^2 over the largest prefix of sorted a_k that keeps
// u above every a_k used; a negative discriminant keeps the smaller set.
double upwind_update(std::vector<double>& a, double h) {
  std::sort(a.begin(), a.end());
  double u = a[0] + h;
  double sum = a[0], sum2 = a[0] * a[0];
  for (std::size_t m = 1; m < a.size(); ++m) {
    if (!(u > a[m])) break;
    double s = sum + a[m], s2 = sum2 + a[m] * a[m];
    double cnt = static_cast<double>(m + 1);
    double disc = s * s - cnt * (s2 - h * h);
    if (disc < 0.0) break;
    u = (s + std::sqrt(disc)) / cnt;
    sum = s;
    sum2 = s2;
  }
  return u;
}

}  // namespace

GridField sample_signed_distance(const Shape& shape, const GridSpec& grid) {
  check_grid(shape, grid);
  GridField field;
  field.grid = grid;
  const std::size_t n = grid.cell_count();
  field.values.resize(n);
  field.frozen.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      field.values[i] = signed_distance(shape, grid.cell_center(i));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTruncationExceeded) throw;
      field.values[i] = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return field;
}

GridField solve_fmm(const Shape& shape, const GridSpec& grid, FmmDiagnostics* diagnostics) {
  check_grid(shape, grid);
  const std::size_t n = grid.cell_count();
  const double h = grid.h;
  const Strides strides(grid);
  const std::size_t m = grid.dims.size();

  GridField field;
  field.grid = grid;
  field.values.assign(n, kInf);
  field.frozen.assign(n, 0);
  std::vector<std::uint8_t> inside(n, 0);
  bool any_band = false;
  for (std::size_t i = 0; i < n; ++i) {
    Point x = grid.cell_center(i);
    inside[i] = shape.contains(x) == Side::kInside;
    double d;
    try {
      d = signed_distance(shape, x);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTruncationExceeded) throw;
      continue;
    }
    if (std::abs(d) <= 2.0 * h) {
      field.values[i] = d;
      field.frozen[i] = 1;
      any_band = true;
    }
  }
  if (!any_band) throw Error(ErrorCode::kEmptyBand, "no grid cell lies within 2h of the boundary");

  enum : std::uint8_t { kFar = 0, kTrial = 1, kKnown = 2 };
  using Entry = std::pair<double, std::size_t>;
  std::vector<double> a;
  a.reserve(m);

  for (int region = 1; region >= 0; --region) {
    std::vector<double> u(n, kInf);
    std::vector<std::uint8_t> state(n, kFar);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (std::size_t i = 0; i < n; ++i) {
      if (field.frozen[i] && inside[i] == region) {
        u[i] = std::abs(field.values[i]);
        state[i] = kKnown;
      }
    }
    auto update = [&](std::size_t i) {
      a.clear();
      for (std::size_t k = 0; k < m; ++k) {
        int c = strides.coord(grid, i, k);
        double best = kInf;
        if (c > 0) {
          std::size_t j = i - strides.stride[k];
          if (state[j] == kKnown && inside[j] == region) best = std::min(best, u[j]);
        }
        if (c + 1 < grid.dims[k]) {
          std::size_t j = i + strides.stride[k];
          if (state[j] == kKnown && inside[j] == region) best = std::min(best, u[j]);
        }
        if (best < kInf) a.push_back(best);
      }
      if (a.empty()) return;
      double cand = upwind_update(a, h);
      if (cand < u[i]) {
        u[i] = cand;
        state[i] = kTrial;
        heap.push({cand, i});
      }
    };
    auto relax_neighbours = [&](std::size_t i) {
      for (std::size_t k = 0; k < m; ++k) {
        int c = strides.coord(grid, i, k);
        if (c > 0) {
          std::size_t j = i - strides.stride[k];
          if (state[j] != kKnown && inside[j] == region) update(j);
        }
        if (c + 1 < grid.dims[k]) {
          std::size_t j = i + strides.stride[k];
          if (state[j] != kKnown && inside[j] == region) update(j);
        }
      }
    };
    for (std::size_t i = 0; i < n; ++i)
      if (state[i] == kKnown && inside[i] == region) relax_neighbours(i);
    std::vector<double>* trace = nullptr;
    if (diagnostics) trace = region ? &diagnostics->accepted_inside : &diagnostics->accepted_outside;
    while (!heap.empty()) {
      auto [val, i] = heap.top();
      heap.pop();
      if (state[i] == kKnown || val != u[i]) continue;
      state[i] = kKnown;
      if (trace) trace->push_back(val);
      relax_neighbours(i);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (inside[i] == region && !field.frozen[i] && u[i] < kInf) field.values[i] = region ? u[i] : -u[i];
  }
  return field;
}

GridError grid_error(const GridField& field, const Shape& shape, const GridField* refined) {
  GridError out;
  double sum = 0.0;
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    double v = field.values[i];
    if (!std::isfinite(v)) continue;
    double exact;
    try {
      exact = signed_distance(shape, field.grid.cell_center(i));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTruncationExceeded) throw;
      continue;
    }
    double err = std::abs(v - exact);
    out.max_abs = std::max(out.max_abs, err);
    sum += err;
    ++out.cells;
  }
  out.mean_abs = out.cells ? sum / static_cast<double>(out.cells) : 0.0;
  out.order_estimate = std::numeric_limits<double>::quiet_NaN();
  if (refined) {
    GridError fine = grid_error(*refined, shape);
    out.order_estimate = std::log2(out.max_abs / fine.max_abs);
  }
  return out;
}

}  // namespace eikon
