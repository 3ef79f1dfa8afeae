#include "eikon/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace eikon {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kInvalidSpec, what); }

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) bad(std::string("expected number field '") + key + "'");
  return j[key].get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  return number(j, key);
}

Point point_of(const json& j) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 3)) bad("a point must be an array of 2 or 3 numbers");
  std::vector<double> c;
  for (const json& x : j) {
    if (!x.is_number()) bad("point coordinates must be numbers");
    c.push_back(x.get<double>());
  }
  return Point::from(c);
}

Point point_field(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing point field '") + key + "'");
  return point_of(j[key]);
}

json point_json(const Point& p) {
  json a = json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

// Finite doubles as numbers, everything else as a string tag.
json value_json(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double value_of(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  bad("grid value must be a number or one of \"inf\", \"-inf\", \"nan\"");
}

ShapeSpec shape_of(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) bad("shape needs a string 'type'");
  const std::string type = j["type"].get<std::string>();
  if (type == "disk") {
    Disk d;
    d.center = j.contains("center") ? point_of(j["center"]) : Point(0.0, 0.0);
    d.radius = number_or(j, "radius", 1.0);
    return d;
  }
  if (type == "ellipse") return Ellipse{j.contains("center") ? point_of(j["center"]) : Point(0.0, 0.0),
                                        point_field(j, "semi_axes")};
  if (type == "halfspace") return HalfSpace{point_field(j, "normal"), number_or(j, "offset", 0.0)};
  if (type == "polygon") {
    if (!j.contains("vertices") || !j["vertices"].is_array()) bad("polygon needs 'vertices'");
    Polygon p;
    for (const json& v : j["vertices"]) p.vertices.push_back(point_of(v));
    return p;
  }
  if (type == "spiral") {
    Spiral s;
    s.beta = number_or(j, "beta", s.beta);
    s.theta_min = number_or(j, "theta_min", s.theta_min);
    s.theta_max = number_or(j, "theta_max", s.theta_max);
    if (j.contains("wall")) {
      const std::string w = j["wall"].is_string() ? j["wall"].get<std::string>() : "";
      if (w == "power") s.wall = SpiralWall::kPowerLaw;
      else if (w == "exp") s.wall = SpiralWall::kExponential;
      else bad("spiral wall must be \"power\" or \"exp\"");
    }
    return s;
  }
  if (type == "cusp") return Cusp{number_or(j, "alpha", 0.5)};
  bad("unknown shape type '" + type + "'");
}

json shape_json(const ShapeSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return {{"type", "disk"}, {"center", point_json(s.center)}, {"radius", s.radius}};
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          return {{"type", "ellipse"}, {"center", point_json(s.center)}, {"semi_axes", point_json(s.semi_axes)}};
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          return {{"type", "halfspace"}, {"normal", point_json(s.normal)}, {"offset", s.offset}};
        } else if constexpr (std::is_same_v<T, Polygon>) {
          json v = json::array();
          for (const Point& p : s.vertices) v.push_back(point_json(p));
          return {{"type", "polygon"}, {"vertices", v}};
        } else if constexpr (std::is_same_v<T, Spiral>) {
          return {{"type", "spiral"},
                  {"beta", s.beta},
                  {"theta_min", s.theta_min},
                  {"theta_max", s.theta_max},
                  {"wall", s.wall == SpiralWall::kPowerLaw ? "power" : "exp"}};
        } else {
          return {{"type", "cusp"}, {"alpha", s.alpha}};
        }
      },
      spec);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

GridSpec grid_of(const json& g, int dim) {
  if (!g.is_object() || !g.contains("bbox") || !g["bbox"].is_array()) bad("grid needs 'bbox'");
  const json& box = g["bbox"];
  if (static_cast<int>(box.size()) != dim) bad("grid bbox must have one [min, max] pair per axis");
  Point lo = Point::zeros(dim), hi = Point::zeros(dim);
  for (int k = 0; k < dim; ++k) {
    if (!box[k].is_array() || box[k].size() != 2 || !box[k][0].is_number() || !box[k][1].is_number())
      bad("bbox entries must be [min, max]");
    lo[k] = box[k][0].get<double>();
    hi[k] = box[k][1].get<double>();
    if (!(lo[k] < hi[k])) bad("bbox min must be below max on every axis");
  }
  if (!g.contains("n")) bad("grid needs 'n'");
  std::vector<int> cells;
  if (g["n"].is_number_integer()) {
    int n = g["n"].get<int>();
    if (n < 2) bad("grid n must be at least 2");
    double h = (hi[0] - lo[0]) / n;
    for (int k = 0; k < dim; ++k) cells.push_back(std::max(2, static_cast<int>(std::lround((hi[k] - lo[k]) / h))));
    GridSpec spec;
    spec.origin = lo;
    spec.h = h;
    spec.dims = cells;
    return spec;
  }
  if (!g["n"].is_array()) bad("grid n must be an integer or an array of integers");
  for (const json& c : g["n"]) {
    if (!c.is_number_integer()) bad("grid n must hold integers");
    cells.push_back(c.get<int>());
  }
  try {
    return GridSpec::covering(lo, hi, cells);
  } catch (const Error& e) {
    bad(e.what());
  }
}

}  // namespace

ShapeSpec parse_shape(const std::string& text) { return shape_of(parse_json(text)); }

std::string shape_to_json(const ShapeSpec& spec) { return shape_json(spec).dump(); }

Scene parse_scene(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("shape")) bad("scene needs a 'shape' object");
  Scene scene;
  scene.shape = shape_of(j["shape"]);
  // Validate here so a bad scene fails at load time.
  Shape shape = Shape::make(scene.shape);
  if (j.contains("grid")) scene.grid = grid_of(j["grid"], shape.dim());
  if (j.contains("tol")) {
    double t = number(j, "tol");
    if (!(t > 0.0)) bad("tol must be positive");
    scene.tol = t;
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open scene file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

void write_grid_csv(std::ostream& out, const GridField& field) {
  const GridSpec& g = field.grid;
  out << "dims";
  for (int d : g.dims) out << ',' << d;
  out << "\norigin";
  for (double c : g.origin.coords()) out << ',' << format_double(c);
  out << "\nh," << format_double(g.h) << "\nvalue,frozen\n";
  for (std::size_t i = 0; i < field.values.size(); ++i)
    out << format_double(field.values[i]) << ',' << (field.frozen.empty() ? 0 : int(field.frozen[i])) << '\n';
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') bad("bad number '" + s + "' in grid CSV");
  return v;
}

}  // namespace

GridField read_grid_csv(std::istream& in) {
  GridField field;
  std::string line;
  auto header = [&](const char* name) {
    if (!std::getline(in, line)) bad("truncated grid CSV");
    auto parts = split_csv(line);
    if (parts.empty() || parts[0] != name) bad(std::string("grid CSV: expected '") + name + "' line");
    parts.erase(parts.begin());
    return parts;
  };
  for (const std::string& s : header("dims")) field.grid.dims.push_back(static_cast<int>(parse_double(s)));
  std::vector<double> origin;
  for (const std::string& s : header("origin")) origin.push_back(parse_double(s));
  if (origin.size() != field.grid.dims.size()) bad("grid CSV: origin and dims disagree");
  field.grid.origin = Point::from(origin);
  auto hs = header("h");
  if (hs.size() != 1) bad("grid CSV: expected a single spacing");
  field.grid.h = parse_double(hs[0]);
  if (!std::getline(in, line) || line != "value,frozen") bad("grid CSV: expected 'value,frozen'");
  const std::size_t n = field.grid.cell_count();
  field.values.reserve(n);
  field.frozen.reserve(n);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto parts = split_csv(line);
    if (parts.size() != 2) bad("grid CSV: rows need value,frozen");
    field.values.push_back(parse_double(parts[0]));
    field.frozen.push_back(parts[1] == "1");
  }
  if (field.values.size() != n) bad("grid CSV: row count does not match dims");
  return field;
}

std::string grid_to_json(const GridField& field) {
  json meta = {{"dims", field.grid.dims}, {"origin", point_json(field.grid.origin)}, {"h", field.grid.h}};
  json values = json::array(), frozen = json::array();
  for (double v : field.values) values.push_back(value_json(v));
  for (auto f : field.frozen) frozen.push_back(int(f));
  return json{{"meta", meta}, {"values", values}, {"frozen", frozen}}.dump();
}

GridField grid_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("meta") || !j.contains("values")) bad("grid JSON needs 'meta' and 'values'");
  const json& meta = j["meta"];
  GridField field;
  try {
    field.grid.dims = meta.at("dims").get<std::vector<int>>();
    field.grid.h = meta.at("h").get<double>();
  } catch (const json::exception& e) {
    bad(std::string("grid JSON meta: ") + e.what());
  }
  field.grid.origin = point_of(meta.at("origin"));
  for (const json& v : j["values"]) field.values.push_back(value_of(v));
  if (j.contains("frozen"))
    for (const json& f : j["frozen"]) field.frozen.push_back(f.is_number() && f.get<int>() != 0);
  else
    field.frozen.assign(field.values.size(), 0);
  if (field.values.size() != field.grid.cell_count() || field.frozen.size() != field.values.size())
    bad("grid JSON: array sizes do not match dims");
  return field;
}

void write_path_csv(std::ostream& out, const CharacteristicPath& path) {
  const int m = path.start.dim();
  out << 't';
  for (int k = 1; k <= m; ++k) out << ",x" << k;
  out << ",d\n";
  for (const PathSample& s : path.samples) {
    out << format_double(s.t);
    for (double c : s.point.coords()) out << ',' << format_double(c);
    out << ',' << format_double(s.d) << '\n';
  }
}

void write_evidence_csv(std::ostream& out, const SpiralEvidence& evidence) {
  out << "theta,z_x,z_y,abs_z,bound,measured_ratio\n";
  for (const SpiralRecord& r : evidence.records)
    out << format_double(r.theta) << ',' << format_double(r.z[0]) << ',' << format_double(r.z[1]) << ','
        << format_double(r.abs_z) << ',' << format_double(r.bound) << ',' << format_double(r.measured_ratio) << '\n';
}

std::string report_to_json(const RegularityReport& report) {
  json j;
  j["test"] = report.test;
  j["point"] = point_json(report.point);
  json scales = json::array(), residuals = json::array();
  for (double s : report.scales) scales.push_back(value_json(s));
  for (double r : report.residuals) residuals.push_back(value_json(r));
  j["scales"] = scales;
  j["residuals"] = residuals;
  j["fitted_gradient"] = report.fitted_gradient ? point_json(*report.fitted_gradient) : json(nullptr);
  json est = json::object();
  for (const auto& [k, v] : report.estimates) est[k] = value_json(v);
  j["estimates"] = est;
  j["verdicts"] = report.verdicts;
  return j.dump(2);
}

}  // namespace eikon
