#include <pybind11/pybind11.h>
#include <pybind11/numpy.h>
#include <pybind11/stl.h>

#include "eikon/characteristics.hpp"
#include "eikon/counterexamples.hpp"
#include "eikon/eikonal.hpp"
#include "eikon/io.hpp"
#include "eikon/regularity.hpp"

namespace py = pybind11;

// Points cross the boundary as plain sequences of 2 or 3 floats and come back
// as tuples.
namespace pybind11::detail {
template <>
struct type_caster<eikon::Point> {
  PYBIND11_TYPE_CASTER(eikon::Point, const_name("Sequence[float]"));

  bool load(handle src, bool) {
    if (!src || !py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
    auto seq = py::reinterpret_borrow<py::sequence>(src);
    if (seq.size() != 2 && seq.size() != 3) return false;
    double c[3];
    for (std::size_t i = 0; i < seq.size(); ++i) {
      try {
        c[i] = seq[i].cast<double>();
      } catch (const py::cast_error&) {
        return false;
      }
    }
    value = eikon::Point::from({c, seq.size()});
    return true;
  }

  static handle cast(const eikon::Point& p, return_value_policy, handle) {
    py::tuple t(p.dim());
    for (int i = 0; i < p.dim(); ++i) t[i] = p[i];
    return t.release();
  }
};
}  // namespace pybind11::detail

namespace {

using namespace eikon;

py::dict report_dict(const RegularityReport& r) {
  py::dict d;
  d["test"] = r.test;
  d["point"] = r.point;
  d["scales"] = r.scales;
  d["residuals"] = r.residuals;
  d["fitted_gradient"] = r.fitted_gradient ? py::cast(*r.fitted_gradient) : py::none();
  d["estimates"] = r.estimates;
  d["verdicts"] = r.verdicts;
  return d;
}

py::dict field_dict(const GridField& f) {
  std::vector<py::ssize_t> shape(f.grid.dims.begin(), f.grid.dims.end());
  py::array_t<double> values(shape);
  std::copy(f.values.begin(), f.values.end(), values.mutable_data());
  py::array_t<bool> frozen(shape);
  std::copy(f.frozen.begin(), f.frozen.end(), frozen.mutable_data());
  py::dict d;
  d["origin"] = f.grid.origin;
  d["h"] = f.grid.h;
  d["values"] = values;
  d["frozen"] = frozen;
  return d;
}

GridSpec grid_of(const Point& lo, const Point& hi, const std::vector<int>& n) { return GridSpec::covering(lo, hi, n); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed distance functions, their regularity, and the counterexamples that bound it.";

  // Raised with args (message, code name); subclasses ValueError.
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "EikonError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type.get_stored(), py::make_tuple(e.what(), to_string(e.code())));
    }
  });

  py::class_<Shape>(m, "Shape")
      .def_static(
          "from_json", [](const std::string& js) { return Shape::make(parse_shape(js)); }, py::arg("spec"))
      .def_static(
          "disk", [](const Point& c, double r) { return Shape::make(Disk{c, r}); }, py::arg("center"),
          py::arg("radius"))
      .def_static(
          "ellipse", [](const Point& c, const Point& axes) { return Shape::make(Ellipse{c, axes}); },
          py::arg("center"), py::arg("semi_axes"))
      .def_static(
          "halfspace", [](const Point& n, double offset) { return Shape::make(HalfSpace{n, offset}); },
          py::arg("normal"), py::arg("offset") = 0.0)
      .def_static(
          "polygon", [](const std::vector<Point>& v) { return Shape::make(Polygon{v}); }, py::arg("vertices"))
      .def_static(
          "spiral",
          [](double beta, double theta_max, const std::string& wall) {
            Spiral s;
            s.beta = beta;
            s.theta_max = theta_max;
            if (wall == "exp") s.wall = SpiralWall::kExponential;
            else if (wall != "power") throw Error(ErrorCode::kInvalidSpec, "wall must be power or exp");
            return Shape::make(s);
          },
          py::arg("beta") = 1.0, py::arg("theta_max") = 4000.0, py::arg("wall") = "power")
      .def_static(
          "cusp", [](double alpha) { return Shape::make(Cusp{alpha}); }, py::arg("alpha") = 0.5)
      .def_property_readonly("kind", [](const Shape& s) { return std::string(to_string(s.kind())); })
      .def_property_readonly("dim", &Shape::dim)
      .def("contains", [](const Shape& s, const Point& x) { return s.contains(x) == Side::kInside; })
      .def("inner_normal", &Shape::inner_normal)
      .def("to_json", [](const Shape& s) { return shape_to_json(s.spec()); })
      .def("__repr__", [](const Shape& s) { return "Shape(" + shape_to_json(s.spec()) + ")"; });

  m.def("signed_distance", &signed_distance, py::arg("shape"), py::arg("x"));
  m.def("unsigned_distance", &unsigned_distance, py::arg("shape"), py::arg("x"));
  m.def("gradient", &gradient, py::arg("shape"), py::arg("x"), py::arg("tol") = kDefaultTol);
  m.def("is_medial", &is_medial, py::arg("shape"), py::arg("x"), py::arg("tol") = kDefaultTol);
  m.def(
      "nearest_points",
      [](const Shape& s, const Point& x, double tol) {
        ProjectionResult r = nearest_points(s, x, tol);
        py::dict d;
        d["points"] = r.points;
        d["distance"] = r.distance;
        d["multiplicity"] = r.multiplicity;
        d["continuum"] = r.continuum;
        return d;
      },
      py::arg("shape"), py::arg("x"), py::arg("tol") = kDefaultTol);

  m.def(
      "trace",
      [](const Shape& s, const Point& x, double dt, double t_max, double tol) {
        CharacteristicPath p = trace(s, x, dt, t_max, tol);
        CharacteristicCheck c = p.samples.size() >= 3 ? verify_characteristic(s, p) : CharacteristicCheck{};
        py::list samples;
        for (const PathSample& q : p.samples) samples.append(py::make_tuple(q.t, q.point, q.d));
        py::dict d;
        d["samples"] = samples;
        d["stop_reason"] = std::string(to_string(p.stop_reason));
        d["max_line_deviation"] = c.max_line_deviation;
        d["max_growth_residual"] = c.max_growth_residual;
        d["monotone"] = c.monotone;
        return d;
      },
      py::arg("shape"), py::arg("x"), py::arg("dt") = 1e-3, py::arg("t_max") = 10.0, py::arg("tol") = 2e-3);

  m.def(
      "solve_fmm", [](const Shape& s, const Point& lo, const Point& hi, const std::vector<int>& n) {
        return field_dict(solve_fmm(s, grid_of(lo, hi, n)));
      },
      py::arg("shape"), py::arg("lo"), py::arg("hi"), py::arg("n"));
  m.def(
      "sample_signed_distance",
      [](const Shape& s, const Point& lo, const Point& hi, const std::vector<int>& n) {
        return field_dict(sample_signed_distance(s, grid_of(lo, hi, n)));
      },
      py::arg("shape"), py::arg("lo"), py::arg("hi"), py::arg("n"));

  m.def(
      "differentiability_test",
      [](const Shape& s, const Point& p, double h0, double rho, int k_max) {
        return report_dict(differentiability_test(s, p, h0, rho, k_max));
      },
      py::arg("shape"), py::arg("p"), py::arg("h0") = 0.1, py::arg("rho") = 0.5, py::arg("k_max") = 12);
  m.def(
      "chi_estimate",
      [](const Shape& s, const Point& p, const std::vector<double>& radii) {
        return report_dict(chi_estimate(s, p, radii));
      },
      py::arg("shape"), py::arg("p"), py::arg("radii"));
  m.def(
      "c1_margin",
      [](const Shape& s, const Point& p, double r, int n_pairs, std::uint64_t seed) {
        return report_dict(c1_margin(s, p, r, n_pairs, seed));
      },
      py::arg("shape"), py::arg("p"), py::arg("r"), py::arg("n_pairs") = 2000, py::arg("seed") = kDefaultSeed);

  m.def(
      "spiral_ratio_sequence",
      [](const Shape& s, const std::vector<double>& thetas) {
        SpiralEvidence ev = spiral_ratio_sequence(s, thetas);
        py::list rows;
        for (const SpiralRecord& r : ev.records) {
          py::dict d;
          d["theta"] = r.theta;
          d["z"] = r.z;
          d["abs_z"] = r.abs_z;
          d["bound"] = r.bound;
          d["measured_ratio"] = r.measured_ratio;
          rows.append(d);
        }
        return rows;
      },
      py::arg("shape"), py::arg("thetas"));
}
