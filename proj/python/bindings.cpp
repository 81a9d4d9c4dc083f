#include "gentlefan/arrangement.hpp"
#include "gentlefan/cli.hpp"
#include "gentlefan/dehn.hpp"
#include "gentlefan/silting.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gf;

namespace {

py::object fraction(const Q& q) {
  static py::object F = py::module_::import("fractions").attr("Fraction");
  return F(py::str(to_string(q)));
}

}  // namespace

PYBIND11_MODULE(_gentlefan, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidDissection>(m, "InvalidDissection", PyExc_ValueError);
  py::register_exception<InvalidLaminate>(m, "InvalidLaminate", PyExc_ValueError);

  py::class_<Dissection>(m, "Dissection")
      .def_readonly("name", &Dissection::name)
      .def_readonly("n", &Dissection::n)
      .def("__repr__", [](const Dissection& d) { return "<Dissection " + d.name + " n=" + std::to_string(d.n) + ">"; });

  py::class_<Laminate>(m, "Laminate")
      .def_readonly("closed", &Laminate::closed)
      .def_readonly("generalized", &Laminate::generalized)
      .def("crossings", &Laminate::crossings)
      .def("__eq__", [](const Laminate& a, const Laminate& b) { return a == b; });

  m.def("load_dissection", &load_dissection, py::arg("path"));
  m.def("parse_dissection", [](const std::string& s) { return parse_dissection(s); }, py::arg("text"));
  m.def("validate", [](const Dissection& d) {
    SurfaceInvariants s = validate(d);
    py::dict r;
    r["genus"] = s.genus;
    r["boundary"] = s.boundary_components;
    r["circ_punctures"] = s.circ_punctures;
    r["bullet_punctures"] = s.bullet_punctures;
    r["circ_marked"] = s.circ_marked;
    r["bullet_marked"] = s.bullet_marked;
    r["euler"] = s.euler_characteristic;
    r["arcs"] = s.arcs;
    return r;
  });

  // arcs are 1-based here as in the file format
  m.def("elementary", [](const Dissection& d, int arc, int sign) { return elementary(d, arc - 1, sign); });
  m.def("parse_laminate", &parse_laminate, py::arg("d"), py::arg("spec"), py::arg("generalized") = false);
  m.def("to_spec", &to_spec);
  m.def("g_vector", &g_vector);
  m.def("compatible", &compatible);
  m.def("positive_position", &positive_position);
  m.def("crossings", &crossings_with);
  m.def("invert_g", [](const Dissection& d, const GVector& g) { return invert_g(d, g).members; });
  m.def("twist", &twist, py::arg("d"), py::arg("gamma"), py::arg("loop"), py::arg("m") = 1);
  m.def("inverse_twist", &inverse_twist, py::arg("d"), py::arg("gamma"), py::arg("loop"), py::arg("m") = 1);

  m.def(
      "enumerate_fan",
      [](const Dissection& d, int bound) {
        Fan f = enumerate_fan(d, bound);
        py::dict r;
        r["rays"] = f.ray_g;
        r["maximal"] = f.maximal;
        r["cones"] = f.cones;
        r["finite"] = to_string(f.finite);
        return r;
      },
      py::arg("d"), py::arg("bound") = 3);
  m.def("coverage", [](const Dissection& d, int bound) { return fraction(coverage(d, bound)); }, py::arg("d"),
        py::arg("bound") = 3);
  m.def(
      "density",
      [](const Dissection& d, const GVector& g, int steps) {
        DensityCertificate c = density_sequence(d, g, steps);
        py::list out;
        for (const DensityStep& s : c.steps) {
          py::dict r;
          r["m"] = s.m;
          r["gvectors"] = s.gvectors;
          r["ray_distance"] = fraction(s.distance2);
          out.append(r);
        }
        return out;
      },
      py::arg("d"), py::arg("g"), py::arg("steps") = 8);

  m.def("quiver", [](const Dissection& d) {
    Quiver q = quiver_of(d);
    py::list arrows, rel;
    for (const Arrow& a : q.arrows) arrows.append(py::make_tuple(a.name, a.source + 1, a.target + 1));
    for (auto [a, b] : q.relations) rel.append(q.word({a, b}));
    py::dict r;
    r["arrows"] = arrows;
    r["relations"] = rel;
    return r;
  });

  py::class_<StringComplex>(m, "StringComplex")
      .def_readonly("degrees", &StringComplex::degrees)
      .def_property_readonly("vertices",
                             [](const StringComplex& T) {
                               std::vector<int> v;
                               for (int x : T.vertices) v.push_back(x + 1);
                               return v;
                             })
      .def("g", &complex_g);
  m.def("string_complex", &string_complex);
  m.def("complex_string", [](const Dissection& d, const StringComplex& T) { return to_string(quiver_of(d), T); });
  m.def("complex_laminate", &complex_laminate);
  m.def("obstructions", [](const Dissection& d, const StringComplex& T, const StringComplex& T2) {
    Quiver q = quiver_of(d);
    std::vector<std::string> out;
    for (const HomObstruction& o : hom_obstructions(d, T, T2)) out.push_back(to_string(d, q, o));
    return out;
  });
  m.def("is_presilting", &is_presilting);
  m.def("is_silting", &is_silting);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
