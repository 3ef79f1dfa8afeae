#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "eikon/io.hpp"

namespace eikon::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw Error(ErrorCode::kInvalidSpec, "bad number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidSpec, "empty list");
  return out;
}

Point parse_point(const std::string& text) {
  std::vector<double> c = parse_list(text);
  return Point::from(c);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidSpec, "cannot write '" + path + "'");
  f << content;
}

bool wants_json(const std::string& path, const std::string& format) {
  if (format == "json") return true;
  if (format == "csv") return false;
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

std::string field_text(const GridField& field, bool json) {
  if (json) return grid_to_json(field) + "\n";
  std::ostringstream ss;
  write_grid_csv(ss, field);
  return ss.str();
}

// Everything a subcommand may need; each subcommand registers the subset of
// flags it uses.
struct Options {
  std::string scene_path;
  std::string out_path;
  std::string format;
  std::string point;
  std::string start;
  std::string radii = "0.1,0.01,0.001";
  std::string thetas = "10,100,1000";
  std::string wall = "power";
  double tol = 0.0;
  double dt = 1e-3;
  double tmax = 10.0;
  double level = 0.0;
  double delta = 0.5;
  double spacing = 1e-5;
  double radius = 0.1;
  double h0 = 0.1;
  double rho = 0.5;
  int kmax = -1;
  int count = 0;
  double d_min = std::numeric_limits<double>::quiet_NaN();
  double d_max = std::numeric_limits<double>::infinity();
  double medial_gap = 0.0;
  double beta = 1.0;
  double theta_max = 4000.0;
  double alpha = 0.5;
  double x1_max = 1.0;
  bool refine = false;
  bool exact = false;
  std::uint64_t seed = kDefaultSeed;
};

struct Loaded {
  Scene scene;
  Shape shape;
};

Loaded load(const Options& o) {
  Scene scene = load_scene(o.scene_path);
  Shape shape = Shape::make(scene.shape);
  return {std::move(scene), std::move(shape)};
}

GridSpec require_grid(const Scene& scene) {
  if (!scene.grid) throw Error(ErrorCode::kInvalidSpec, "scene has no 'grid' section");
  return *scene.grid;
}

// Sampling box: the scene grid when present, else [-2, 2]^m.
std::pair<Point, Point> sample_box(const Loaded& l) {
  const int m = l.shape.dim();
  Point lo = Point::zeros(m), hi = Point::zeros(m);
  for (int k = 0; k < m; ++k) {
    if (l.scene.grid) {
      lo[k] = l.scene.grid->origin[k];
      hi[k] = lo[k] + l.scene.grid->dims[k] * l.scene.grid->h;
    } else {
      lo[k] = -2.0;
      hi[k] = 2.0;
    }
  }
  return {lo, hi};
}

Point random_in(const Point& lo, const Point& hi, std::mt19937_64& rng) {
  Point x = lo;
  for (int k = 0; k < lo.dim(); ++k)
    x[k] = lo[k] + (hi[k] - lo[k]) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  return x;
}

double scene_tol(const Options& o, const Scene& scene, double fallback) {
  if (o.tol > 0.0) return o.tol;
  if (scene.tol) return *scene.tol;
  return fallback;
}

int emit_report(std::ostream& out, RegularityReport& rep) {
  bool pass = true;
  for (const auto& [name, ok] : rep.verdicts) pass = pass && ok;
  rep.verdicts["pass"] = pass;
  out << report_to_json(rep) << "\n";
  return pass ? kOk : kFailed;
}

// ---- subcommands -----------------------------------------------------------

int cmd_grid(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  GridField f = sample_signed_distance(l.shape, require_grid(l.scene));
  write_file(o.out_path, field_text(f, wants_json(o.out_path, o.format)));
  out << "cells " << f.values.size() << "\n";
  return kOk;
}

int cmd_medial(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  GridSpec g = require_grid(l.scene);
  const double tol = scene_tol(o, l.scene, g.h);
  std::ostringstream csv;
  const int m = g.dim();
  csv << "x1,x2" << (m == 3 ? ",x3" : "") << "\n";
  std::size_t found = 0;
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    Point x = g.cell_center(i);
    bool medial;
    try {
      medial = is_medial(l.shape, x, tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTruncationExceeded) throw;
      continue;
    }
    if (!medial) continue;
    ++found;
    for (int k = 0; k < m; ++k) csv << (k ? "," : "") << format_double(x[k]);
    csv << "\n";
  }
  if (o.out_path.empty()) out << csv.str();
  else write_file(o.out_path, csv.str());
  out << "medial_points " << found << "\n";
  return kOk;
}

int cmd_trace(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  Point x = parse_point(o.start);
  const double tol = o.tol > 0.0 ? o.tol : 2.0 * o.dt;
  CharacteristicPath path = trace(l.shape, x, o.dt, o.tmax, tol);
  std::ostringstream csv;
  write_path_csv(csv, path);
  if (o.out_path.empty()) out << csv.str();
  else write_file(o.out_path, csv.str());
  out << "stop_reason " << to_string(path.stop_reason) << "\n";
  out << "stop_time " << format_double(path.stop_time()) << "\n";
  out << "samples " << path.samples.size() << "\n";
  if (path.samples.size() < 3) return kOk;
  CharacteristicCheck c = verify_characteristic(l.shape, path);
  out << "max_line_deviation " << format_double(c.max_line_deviation) << "\n";
  out << "max_growth_residual " << format_double(c.max_growth_residual) << "\n";
  out << "max_gradient_drift " << format_double(c.max_gradient_drift) << "\n";
  out << "monotone " << (c.monotone ? "true" : "false") << "\n";
  return kOk;
}

GridSpec refined(const GridSpec& g) {
  GridSpec r = g;
  r.h = g.h / 2.0;
  for (int& d : r.dims) d *= 2;
  return r;
}

int cmd_fmm(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  GridSpec g = require_grid(l.scene);
  GridField f = solve_fmm(l.shape, g);
  write_file(o.out_path, field_text(f, wants_json(o.out_path, o.format)));
  GridError e;
  if (o.refine) {
    GridField fine = solve_fmm(l.shape, refined(g));
    e = grid_error(f, l.shape, &fine);
  } else {
    e = grid_error(f, l.shape);
  }
  out << "h " << format_double(g.h) << "\n";
  out << "max_abs " << format_double(e.max_abs) << "\n";
  out << "mean_abs " << format_double(e.mean_abs) << "\n";
  out << "cells " << e.cells << "\n";
  if (o.refine) out << "order_estimate " << format_double(e.order_estimate) << "\n";
  return kOk;
}

int cmd_levelset(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  GridSpec g = require_grid(l.scene);
  GridField f = o.exact ? sample_signed_distance(l.shape, g) : solve_fmm(l.shape, g);
  LevelSet ls = extract_level_set(f, o.level);
  std::ostringstream csv;
  csv << "chain,closed,x,y\n";
  for (std::size_t c = 0; c < ls.chains.size(); ++c)
    for (const Point& v : ls.chains[c].vertices)
      csv << c << ',' << (ls.chains[c].closed ? 1 : 0) << ',' << format_double(v[0]) << ',' << format_double(v[1])
          << "\n";
  if (o.out_path.empty()) out << csv.str();
  else write_file(o.out_path, csv.str());
  out << "chains " << ls.chains.size() << "\n";
  return kOk;
}

// ---- verify ----------------------------------------------------------------

int verify_eikonal(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  auto [lo, hi] = sample_box(l);
  const int want = o.count > 0 ? o.count : 1000;
  std::mt19937_64 rng(o.seed);
  const double fd_h = 1e-5;
  double defect = 0.0, fd_err = 0.0;
  int used = 0;
  for (long attempt = 0; used < want && attempt < 100L * want; ++attempt) {
    Point x = random_in(lo, hi, rng);
    try {
      PointEvaluation ev = evaluate(l.shape, x);
      if (std::abs(ev.signed_distance) <= 1e-3 || !ev.gradient || is_medial(l.shape, x, 1e-3)) continue;
      defect = std::max(defect, std::abs(norm(*ev.gradient) - 1.0));
      Point fd = Point::zeros(x.dim());
      for (int k = 0; k < x.dim(); ++k) {
        Point e = Point::unit(x.dim(), k) * fd_h;
        fd[k] = (signed_distance(l.shape, x + e) - signed_distance(l.shape, x - e)) / (2.0 * fd_h);
      }
      fd_err = std::max(fd_err, norm(fd - *ev.gradient));
      ++used;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTruncationExceeded) throw;
    }
  }
  RegularityReport rep;
  rep.test = "eikonal";
  rep.point = lo;
  rep.estimates["max_norm_defect"] = defect;
  rep.estimates["max_fd_error"] = fd_err;
  rep.estimates["points"] = used;
  rep.verdicts["unit_gradient"] = used > 0 && defect <= 1e-9;
  rep.verdicts["matches_central_differences"] = used > 0 && fd_err <= 1e-3;
  return emit_report(out, rep);
}

int verify_boundary_gradient(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  Point p = parse_point(o.point);
  const int kmax = o.kmax >= 0 ? o.kmax : 12;
  RegularityReport rep = differentiability_test(l.shape, p, o.h0, o.rho, kmax);
  rep.test = "boundary-gradient";
  try {
    Point n = l.shape.inner_normal(p);
    double err = distance(*rep.fitted_gradient, n);
    rep.estimates["normal_error"] = err;
    rep.verdicts["matches_inner_normal"] = err <= 1e-3;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotC1 && e.code() != ErrorCode::kNotOnBoundary) throw;
  }
  return emit_report(out, rep);
}

int verify_characteristics(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  Point x = parse_point(o.point);
  const double tol = o.tol > 0.0 ? o.tol : 2.0 * o.dt;
  CharacteristicPath path = trace(l.shape, x, o.dt, o.tmax, tol);
  CharacteristicCheck c = verify_characteristic(l.shape, path);
  RegularityReport rep;
  rep.test = "characteristics";
  rep.point = x;
  rep.scales = {o.dt};
  rep.residuals = {c.max_line_deviation};
  rep.fitted_gradient = gradient(l.shape, x);
  rep.estimates["max_line_deviation"] = c.max_line_deviation;
  rep.estimates["max_growth_residual"] = c.max_growth_residual;
  rep.estimates["max_gradient_drift"] = c.max_gradient_drift;
  rep.estimates["stop_time"] = path.stop_time();
  rep.estimates["samples"] = static_cast<double>(path.samples.size());
  rep.verdicts["straight"] = c.max_line_deviation <= 1e-2;
  rep.verdicts["unit_growth"] = c.max_growth_residual <= 1e-2;
  rep.verdicts["monotone"] = c.monotone;
  return emit_report(out, rep);
}

int verify_level_distance_cmd(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  auto [lo, hi] = sample_box(l);
  const int want = o.count > 0 ? o.count : 100;
  std::mt19937_64 rng(o.seed);
  std::vector<Point> samples;
  for (long attempt = 0; static_cast<int>(samples.size()) < want && attempt < 1000L * want; ++attempt) {
    Point x = random_in(lo, hi, rng);
    try {
      if (signed_distance(l.shape, x) > o.level + 1e-3 && !is_medial(l.shape, x, 1e-3)) samples.push_back(x);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTruncationExceeded) throw;
    }
  }
  if (samples.empty()) throw Error(ErrorCode::kInvalidTube, "no admissible tube samples in the scene box");
  double residual = verify_level_distance(l.shape, o.level, samples, o.spacing);
  RegularityReport rep;
  rep.test = "level-distance";
  rep.point = lo;
  rep.scales = {o.spacing};
  rep.residuals = {residual};
  rep.estimates["level"] = o.level;
  rep.estimates["max_residual"] = residual;
  rep.estimates["samples"] = static_cast<double>(samples.size());
  rep.verdicts["identity_holds"] = residual <= 1e-4;
  return emit_report(out, rep);
}

int verify_chi(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  RegularityReport rep = chi_estimate(l.shape, parse_point(o.point), parse_list(o.radii));
  const auto& v = rep.residuals;
  bool stable = true;
  if (v.size() >= 2) {
    double a = v[v.size() - 2], b = v.back();
    stable = std::abs(a - b) <= 0.1 * std::max(a, b) + 1e-12;
  }
  rep.verdicts["tail_stable"] = stable;
  return emit_report(out, rep);
}

int verify_c1(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  const int pairs = o.count > 0 ? o.count : 2000;
  RegularityReport rep = c1_margin(l.shape, parse_point(o.point), o.radius, pairs, o.seed);
  const double chi = rep.estimates.at("chi");
  rep.verdicts["within_margin"] = rep.estimates.at("ratio_sup") <= 0.5 * chi + std::max(0.2 * chi, 1e-12);
  return emit_report(out, rep);
}

int verify_lipschitz(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  auto [lo, hi] = sample_box(l);
  SampleRegion region{lo, hi, std::isnan(o.d_min) ? o.level + o.delta : o.d_min, o.d_max, o.medial_gap};
  const int pairs = o.count > 0 ? o.count : 10000;
  RegularityReport rep = gradient_lipschitz_estimate(l.shape, o.level, o.delta, pairs, region, o.seed);
  return emit_report(out, rep);
}

// ---- counterexamples -------------------------------------------------------

int counterexample_spiral(const Options& o, std::ostream& out) {
  Spiral s;
  s.beta = o.beta;
  s.theta_max = o.theta_max;
  if (o.wall == "exp") s.wall = SpiralWall::kExponential;
  else if (o.wall != "power") throw Error(ErrorCode::kInvalidSpec, "wall must be power or exp");
  Shape shape = Shape::make(s);
  SpiralEvidence ev = spiral_ratio_sequence(shape, parse_list(o.thetas));
  if (!o.out_path.empty()) {
    std::ostringstream csv;
    write_evidence_csv(csv, ev);
    write_file(o.out_path, csv.str());
  }
  out << "theta,abs_z,bound,measured_ratio\n";
  for (const SpiralRecord& r : ev.records)
    out << format_double(r.theta) << ',' << format_double(r.abs_z) << ',' << format_double(r.bound) << ','
        << format_double(r.measured_ratio) << "\n";
  bool pass;
  if (s.wall == SpiralWall::kPowerLaw) {
    // Default: the finest scale whose sphere stays clear of the truncation zone.
    int kmax = o.kmax;
    if (kmax < 0) {
      const double zone = 0.5 * spiral_wall(s, s.theta_max);
      kmax = static_cast<int>(std::floor(std::log(zone / o.h0) / std::log(o.rho)));
    }
    RegularityReport d = differentiability_test(shape, Point(0.0, 0.0), o.h0, o.rho, kmax);
    const double gnorm = d.estimates.at("gradient_norm");
    out << "bound_holds " << (ev.bound_holds ? "true" : "false") << "\n";
    out << "ratio_decreasing " << (ev.ratio_decreasing ? "true" : "false") << "\n";
    out << "gradient_norm_at_0 " << format_double(gnorm) << "\n";
    out << "finest_scale " << format_double(d.scales.back()) << "\n";
    pass = ev.bound_holds && ev.ratio_decreasing && gnorm <= 0.01;
  } else {
    // Negative control: the ratio must stay away from zero.
    const double floor = exponential_ratio_floor();
    pass = true;
    for (const SpiralRecord& r : ev.records) pass = pass && r.measured_ratio >= floor;
    out << "ratio_floor " << format_double(floor) << "\n";
  }
  out << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kFailed;
}

int counterexample_cusp(const Options& o, std::ostream& out) {
  const int n = o.count > 0 ? o.count : 100;
  const double tol = o.tol > 0.0 ? o.tol : 1e-6;
  CuspReport rep = cusp_medial_check(o.alpha, n, o.x1_max, tol);
  if (!o.out_path.empty()) {
    std::ostringstream csv;
    csv << "x1,x2,on_axis,medial\n";
    for (const CuspSample& s : rep.samples)
      csv << format_double(s.point[0]) << ',' << format_double(s.point[1]) << ',' << s.on_axis << ',' << s.medial
          << "\n";
    write_file(o.out_path, csv.str());
  }
  const int kmax = o.kmax >= 0 ? o.kmax : 20;
  RegularityReport apex = differentiability_test(Shape::make(Cusp{o.alpha}), Point(0.0, 0.0), o.h0, o.rho, kmax);
  const bool apex_ok = apex.verdicts.at("differentiable") && distance(*apex.fitted_gradient, Point(1.0, 0.0)) <= 1e-3;
  out << "on_axis_medial " << rep.on_axis_medial << "/" << n << "\n";
  out << "off_axis_regular " << rep.off_axis_regular << "/" << n << "\n";
  out << "misclassified " << rep.misclassified << "\n";
  out << "apex_gradient " << format_double((*apex.fitted_gradient)[0]) << ','
      << format_double((*apex.fitted_gradient)[1]) << "\n";
  out << "apex_residual " << format_double(apex.residuals.back()) << "\n";
  const bool pass = rep.passed && apex_ok;
  out << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed distance and regularity toolkit", "eikon"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto scene = [&](CLI::App* c) { c->add_option("--scene", o.scene_path, "Scene JSON file")->required(); };
  auto grid_out = [&](CLI::App* c) {
    c->add_option("--out", o.out_path, "Output file")->required();
    c->add_option("--format", o.format, "csv or json (default: from the file extension)")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Random seed"); };

  auto* grid = app.add_subcommand("grid", "Sample the exact signed distance on the scene grid");
  scene(grid);
  grid_out(grid);
  grid->callback([&] { action = [&] { return cmd_grid(o, out); }; });

  auto* medial = app.add_subcommand("medial", "List grid centres with two or more nearest boundary points");
  scene(medial);
  medial->add_option("--tol", o.tol, "Medial tolerance (default: scene tol, else grid spacing)");
  medial->add_option("--out", o.out_path, "Output CSV (default: stdout)");
  medial->callback([&] { action = [&] { return cmd_medial(o, out); }; });

  auto* tr = app.add_subcommand("trace", "Follow the distance gradient from a start point");
  scene(tr);
  tr->add_option("--start", o.start, "Start point x,y[,z]")->required();
  tr->add_option("--dt", o.dt, "Step size")->check(CLI::PositiveNumber);
  tr->add_option("--tmax", o.tmax, "Maximum time");
  tr->add_option("--tol", o.tol, "Medial tolerance (default 2*dt)");
  tr->add_option("--out", o.out_path, "Path CSV (default: stdout)");
  tr->callback([&] { action = [&] { return cmd_trace(o, out); }; });

  auto* fmm = app.add_subcommand("fmm", "Fast marching solve on the scene grid");
  scene(fmm);
  grid_out(fmm);
  fmm->add_flag("--refine", o.refine, "Also solve at h/2 and report the convergence order");
  fmm->callback([&] { action = [&] { return cmd_fmm(o, out); }; });

  auto* ls = app.add_subcommand("levelset", "Extract a level set of the solved field (2D)");
  scene(ls);
  ls->add_option("--level", o.level, "Level a")->required();
  ls->add_option("--out", o.out_path, "Chain CSV (default: stdout)");
  ls->add_flag("--exact", o.exact, "Use the exact sampled distance instead of the fast marching field");
  ls->callback([&] { action = [&] { return cmd_levelset(o, out); }; });

  auto* verify = app.add_subcommand("verify", "Run one regularity check and print a JSON report");
  verify->require_subcommand(1);
  auto* v_eik = verify->add_subcommand("eikonal", "|grad d| = 1 at random non-medial points");
  scene(v_eik);
  seed(v_eik);
  v_eik->add_option("--points", o.count, "Number of points (default 1000)");
  v_eik->callback([&] { action = [&] { return verify_eikonal(o, out); }; });

  auto* v_bg = verify->add_subcommand("boundary-gradient", "Differentiability test at a point");
  scene(v_bg);
  v_bg->add_option("--point", o.point, "Point x,y[,z]")->required();
  v_bg->add_option("--h0", o.h0, "Largest scale");
  v_bg->add_option("--rho", o.rho, "Scale ratio in (0,1)");
  v_bg->add_option("--kmax", o.kmax, "Number of refinements (default 12)");
  v_bg->callback([&] { action = [&] { return verify_boundary_gradient(o, out); }; });

  auto* v_ch = verify->add_subcommand("characteristics", "Trace and check a characteristic");
  scene(v_ch);
  v_ch->add_option("--point", o.point, "Start point x,y[,z]")->required();
  v_ch->add_option("--dt", o.dt, "Step size")->check(CLI::PositiveNumber);
  v_ch->add_option("--tmax", o.tmax, "Maximum time");
  v_ch->add_option("--tol", o.tol, "Medial tolerance (default 2*dt)");
  v_ch->callback([&] { action = [&] { return verify_characteristics(o, out); }; });

  auto* v_ld = verify->add_subcommand("level-distance", "Distance to the level set {d = a} equals d - a");
  scene(v_ld);
  seed(v_ld);
  v_ld->add_option("--level", o.level, "Level a > 0")->required();
  v_ld->add_option("--samples", o.count, "Number of tube samples (default 100)");
  v_ld->add_option("--spacing", o.spacing, "Sampling spacing of the level set");
  v_ld->callback([&] { action = [&] { return verify_level_distance_cmd(o, out); }; });

  auto* v_chi = verify->add_subcommand("chi", "Normal oscillation estimate at a boundary point");
  scene(v_chi);
  v_chi->add_option("--point", o.point, "Boundary point x,y[,z]")->required();
  v_chi->add_option("--radii", o.radii, "Decreasing radii, comma separated");
  v_chi->callback([&] { action = [&] { return verify_chi(o, out); }; });

  auto* v_c1 = verify->add_subcommand("c1", "Second-order margin at a boundary point");
  scene(v_c1);
  seed(v_c1);
  v_c1->add_option("--point", o.point, "Boundary point x,y[,z]")->required();
  v_c1->add_option("--radius", o.radius, "Ball radius");
  v_c1->add_option("--pairs", o.count, "Number of pairs (default 2000)");
  v_c1->callback([&] { action = [&] { return verify_c1(o, out); }; });

  auto* v_lip = verify->add_subcommand("lipschitz", "Lipschitz constant of the gradient beyond a level");
  scene(v_lip);
  seed(v_lip);
  v_lip->add_option("--level", o.level, "Level a");
  v_lip->add_option("--delta", o.delta, "Distance delta beyond the level")->check(CLI::PositiveNumber);
  v_lip->add_option("--pairs", o.count, "Number of pairs (default 10000)");
  v_lip->add_option("--dmin", o.d_min, "Smallest sampled signed distance (default level + delta)");
  v_lip->add_option("--dmax", o.d_max, "Largest sampled signed distance");
  v_lip->add_option("--medial-gap", o.medial_gap, "Skip points medial at this tolerance");
  v_lip->callback([&] { action = [&] { return verify_lipschitz(o, out); }; });

  auto* cx = app.add_subcommand("counterexample", "Evidence for the spiral and cusp constructions");
  cx->require_subcommand(1);
  auto* cx_sp = cx->add_subcommand("spiral", "Ratio d(z)/|z| along the spiral and the gradient at 0");
  cx_sp->add_option("--thetas", o.thetas, "Increasing angles, comma separated");
  cx_sp->add_option("--beta", o.beta, "Wall exponent");
  cx_sp->add_option("--theta-max", o.theta_max, "Truncation angle");
  cx_sp->add_option("--wall", o.wall, "power or exp")->check(CLI::IsMember({"power", "exp"}));
  cx_sp->add_option("--h0", o.h0, "Largest scale of the test at 0");
  cx_sp->add_option("--rho", o.rho, "Scale ratio");
  cx_sp->add_option("--kmax", o.kmax, "Refinements of the test at 0 (default: finest admissible)");
  cx_sp->add_option("--out", o.out_path, "Evidence CSV");
  cx_sp->callback([&] { action = [&] { return counterexample_spiral(o, out); }; });

  auto* cx_cu = cx->add_subcommand("cusp", "Medial classification along and off the cusp axis");
  cx_cu->add_option("--alpha", o.alpha, "Cusp exponent in (0,1)");
  cx_cu->add_option("--n", o.count, "Points per class (default 100)");
  cx_cu->add_option("--x1-max", o.x1_max, "Largest x1");
  cx_cu->add_option("--tol", o.tol, "Medial tolerance (default 1e-6)");
  cx_cu->add_option("--h0", o.h0, "Largest scale of the apex test");
  cx_cu->add_option("--rho", o.rho, "Scale ratio");
  cx_cu->add_option("--kmax", o.kmax, "Refinements of the apex test (default 20)");
  cx_cu->add_option("--out", o.out_path, "Sample CSV");
  cx_cu->callback([&] { action = [&] { return counterexample_cusp(o, out); }; });

  std::vector<std::string> argv_store{"eikon"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  if (!action) return kBadInput;
  try {
    return action();
  } catch (const eikon::Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace eikon::cli
