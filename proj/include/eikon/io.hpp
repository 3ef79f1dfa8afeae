#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "eikon/characteristics.hpp"
#include "eikon/counterexamples.hpp"
#include "eikon/eikonal.hpp"
#include "eikon/regularity.hpp"

namespace eikon {

// 17 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double v);

// Scene file: {"shape": {...}, "grid": {"bbox": [[min, max], ...], "n": N or
// [N1, N2(, N3)]}, "tol": t}. With a scalar n the spacing comes from the first
// axis and the other axes get as many cells as fit their extent.
struct Scene {
  ShapeSpec shape;
  std::optional<GridSpec> grid;
  std::optional<double> tol;
};

// All throw kInvalidSpec on malformed input.
ShapeSpec parse_shape(const std::string& json);
std::string shape_to_json(const ShapeSpec& spec);
Scene parse_scene(const std::string& json);
Scene load_scene(const std::string& path);

// Grid CSV: "dims,...", "origin,...", "h,..." header lines, a "value,frozen"
// column header, then one row per cell in row-major order.
void write_grid_csv(std::ostream& out, const GridField& field);
GridField read_grid_csv(std::istream& in);

// {"meta": {"dims", "origin", "h"}, "values": [...], "frozen": [...]};
// non-finite values are written as the strings "inf", "-inf", "nan".
std::string grid_to_json(const GridField& field);
GridField grid_from_json(const std::string& json);

// t,x1,x2(,x3),d
void write_path_csv(std::ostream& out, const CharacteristicPath& path);
// theta,z_x,z_y,abs_z,bound,measured_ratio
void write_evidence_csv(std::ostream& out, const SpiralEvidence& evidence);

std::string report_to_json(const RegularityReport& report);

}  // namespace eikon
