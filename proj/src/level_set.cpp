#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "eikon/eikonal.hpp"

namespace eikon {

namespace {

struct Grid2 {
  const GridField& f;
  int nx, ny;
  explicit Grid2(const GridField& field) : f(field), nx(field.grid.dims[0]), ny(field.grid.dims[1]) {}
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * ny + j; }
  double v(int i, int j) const { return f.values[idx(i, j)]; }
  Point center(int i, int j) const {
    return {f.grid.origin[0] + (i + 0.5) * f.grid.h, f.grid.origin[1] + (j + 0.5) * f.grid.h};
  }
};

// Dual-edge key: the edge from centre (i, j) along `axis` to the next centre.
long long edge_key(const Grid2& g, int i, int j, int axis) {
  return static_cast<long long>(g.idx(i, j)) * 2 + axis;
}

Point edge_point(const Grid2& g, long long key, double level) {
  int axis = static_cast<int>(key % 2);
  std::size_t lin = static_cast<std::size_t>(key / 2);
  int i = static_cast<int>(lin / g.ny), j = static_cast<int>(lin % g.ny);
  int i2 = axis == 0 ? i + 1 : i, j2 = axis == 0 ? j : j + 1;
  double va = g.v(i, j), vb = g.v(i2, j2);
  double t = (level - va) / (vb - va);
  Point p = g.center(i, j), q = g.center(i2, j2);
  // Exact endpoints when the crossing sits on a centre.
  if (t <= 0.0) return p;
  if (t >= 1.0) return q;
  return p + (q - p) * t;
}

}  // namespace

LevelSet extract_level_set(const GridField& field, double level) {
  if (field.grid.dim() != 2) throw Error(ErrorCode::kDimensionMismatch, "level sets are extracted in 2D only");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : field.values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(level >= lo && level < hi)) throw Error(ErrorCode::kLevelOutOfRange, "level outside the field range");

  const Grid2 g(field);
  // Segment from a start edge (corner above -> corner below, walking the
  // cell counter-clockwise) to an end edge; this keeps {u > level} on the left.
  std::map<long long, long long> next;
  for (int i = 0; i + 1 < g.nx; ++i) {
    for (int j = 0; j + 1 < g.ny; ++j) {
      const double c[4] = {g.v(i, j), g.v(i + 1, j), g.v(i + 1, j + 1), g.v(i, j + 1)};
      bool finite = true;
      for (double x : c) finite = finite && std::isfinite(x);
      if (!finite) continue;
      bool above[4];
      int mask = 0;
      for (int k = 0; k < 4; ++k) {
        above[k] = c[k] > level;
        mask |= above[k] << k;
      }
      if (mask == 0 || mask == 15) continue;
      const long long keys[4] = {edge_key(g, i, j, 0), edge_key(g, i + 1, j, 1), edge_key(g, i, j + 1, 0),
                                 edge_key(g, i, j, 1)};
      int starts[2], ends[2], ns = 0, ne = 0;
      for (int k = 0; k < 4; ++k) {
        bool a = above[k], b = above[(k + 1) % 4];
        if (a && !b) starts[ns++] = k;
        if (!a && b) ends[ne++] = k;
      }
      if (ns == 1) {
        next[keys[starts[0]]] = keys[ends[0]];
        continue;
      }
      // Saddle: the cell average decides whether the above corners connect.
      bool centre_above = 0.25 * (c[0] + c[1] + c[2] + c[3]) > level;
      for (int s = 0; s < 2; ++s) {
        int k = starts[s];
        int e = centre_above ? (k + 1) % 4 : (k + 3) % 4;
        next[keys[k]] = keys[e];
      }
    }
  }

  std::set<long long> targets;
  for (const auto& [from, to] : next) targets.insert(to);

  LevelSet out;
  out.level = level;
  std::set<long long> used;
  auto walk = [&](long long head, bool closed) {
    Chain chain;
    chain.closed = closed;
    long long k = head;
    chain.vertices.push_back(edge_point(g, k, level));
    while (true) {
      auto it = next.find(k);
      if (it == next.end() || used.count(k)) break;
      used.insert(k);
      k = it->second;
      if (closed && k == head) break;
      chain.vertices.push_back(edge_point(g, k, level));
    }
    out.chains.push_back(std::move(chain));
  };
  for (const auto& [from, to] : next)
    if (!targets.count(from)) walk(from, false);
  for (const auto& [from, to] : next)
    if (!used.count(from)) walk(from, true);
  return out;
}

double interpolate(const GridField& field, const Point& x) {
  const GridSpec& g = field.grid;
  if (x.dim() != g.dim()) throw Error(ErrorCode::kDimensionMismatch, "point and grid dimensions differ");
  const int m = g.dim();
  int base[3] = {0, 0, 0};
  double w[3] = {0, 0, 0};
  for (int k = 0; k < m; ++k) {
    double s = (x[k] - g.origin[k]) / g.h - 0.5;
    const double top = g.dims[k] - 1;
    if (s < -1e-9 || s > top + 1e-9) throw Error(ErrorCode::kInvalidSpec, "point outside the hull of cell centres");
    s = std::clamp(s, 0.0, top);
    int b = std::min(static_cast<int>(std::floor(s)), std::max(0, g.dims[k] - 2));
    base[k] = b;
    w[k] = s - b;
  }
  double sum = 0.0;
  std::vector<int> idx(m);
  for (int corner = 0; corner < (1 << m); ++corner) {
    double weight = 1.0;
    for (int k = 0; k < m; ++k) {
      int bit = (corner >> k) & 1;
      idx[k] = std::min(base[k] + bit, g.dims[k] - 1);
      weight *= bit ? w[k] : 1.0 - w[k];
    }
    if (weight == 0.0) continue;
    sum += weight * field.values[g.linear_index(idx)];
  }
  return sum;
}

double verify_level_distance(const Shape& shape, double a, const std::vector<Point>& samples, double spacing) {
  if (!(a > 0.0)) throw Error(ErrorCode::kInvalidTube, "level a must be positive");
  if (!(spacing > 0.0)) throw Error(ErrorCode::kInvalidSpec, "spacing must be positive");
  std::vector<double> target(samples.size());
  double reach = 0.0;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    shape.check_dim(samples[s]);
    PointEvaluation ev = evaluate(shape, samples[s]);
    if (!(ev.signed_distance > a) || ev.medial || !ev.gradient)
      throw Error(ErrorCode::kInvalidTube, "sample must satisfy d > a with a unique projection");
    target[s] = ev.signed_distance - a;
    reach = std::max(reach, norm(samples[s]) + ev.signed_distance);
  }
  if (samples.empty()) return 0.0;

  // S_a as the boundary pushed inward by a. Offsets that land closer than a
  // to the boundary (past a focal point) are not on S_a; they are rejected
  // lazily, only when they win the brute-force minimum.
  std::vector<Point> level_pts;
  for (const Point& q : shape.boundary_sample(spacing, reach + 1.0)) {
    try {
      level_pts.push_back(q + shape.inner_normal(q) * a);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotC1) throw;
    }
  }
  std::vector<std::int8_t> valid(level_pts.size(), -1);
  auto is_valid = [&](std::size_t k) {
    if (valid[k] < 0) {
      double d;
      try {
        d = signed_distance(shape, level_pts[k]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kTruncationExceeded) throw;
        d = -1.0;
      }
      valid[k] = std::abs(d - a) <= 1e-9 * std::max(1.0, a);
    }
    return valid[k] == 1;
  };

  double worst = 0.0;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Point& y = samples[s];
    double best = std::numeric_limits<double>::infinity();
    while (true) {
      std::size_t arg = level_pts.size();
      double cand = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < level_pts.size(); ++k) {
        if (valid[k] == 0) continue;
        double dk = squared_norm(level_pts[k] - y);
        if (dk < cand) {
          cand = dk;
          arg = k;
        }
      }
      if (arg == level_pts.size()) break;
      if (is_valid(arg)) {
        best = std::sqrt(cand);
        break;
      }
    }
    worst = std::max(worst, std::abs(best - target[s]));
  }
  return worst;
}

}  // namespace eikon
