#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holocert/pipeline.hpp"

namespace py = pybind11;
using namespace holocert;

namespace {

FoliationParams params_from_text(const std::string& text) {
  try {
    return params_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

RunConfig make_config(unsigned seed, double radius, double rtol) {
  RunConfig cfg;
  cfg.command = "certify";
  cfg.params_path = "<memory>";
  cfg.seed = seed;
  cfg.radius = radius;
  cfg.rtol = rtol;
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact certification of holonomy rigidity, native core";

  auto base = py::register_exception<Error>(m, "HolocertError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<GenericityError>(m, "GenericityError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IntegrationError>(m, "IntegrationError", base.ptr());

  py::class_<GR>(m, "GaussianRational")
      .def(py::init([](const std::string& s) { return GR::parse(s); }), py::arg("literal"))
      .def(py::init<long>())
      .def_property_readonly("re", [](const GR& z) { return z.re().get_str(); })
      .def_property_readonly("im", [](const GR& z) { return z.im().get_str(); })
      .def("conj", &GR::conj)
      .def("inv", &GR::inv)
      .def("__complex__", &GR::to_complex)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const GR& z) { return py::hash(py::str(z.to_string())); })
      .def("__str__", &GR::to_string)
      .def("__repr__", [](const GR& z) { return "GaussianRational('" + z.to_string() + "')"; });

  m.def("genericity", [](const std::string& params) {
    return genericity_to_json(validate_genericity(params_from_text(params))).dump();
  });
  m.def("expand", [](const std::string& params, int dmax) {
    const FoliationParams p = params_from_text(params);
    require_generic(p);
    if (dmax < 1 || dmax > kMaxDegree) throw ConfigError("dmax must lie in 1..6");
    return expand_report(p, dmax).dump();
  });
  m.def("conditions", [](const std::string& params, int dmax) {
    const FoliationParams p = params_from_text(params);
    require_generic(p);
    if (dmax < 3 || dmax > kMaxDegree) throw ConfigError("dmax must lie in 3..6");
    return conditions_report(p, dmax).dump();
  });
  m.def(
      "certify",
      [](const std::string& params, bool numeric, unsigned seed, double radius, double rtol) {
        const FoliationParams p = params_from_text(params);
        const RunConfig cfg = make_config(seed, radius, rtol);
        py::gil_scoped_release release;
        return canonical_dump(certificate_to_json(run_certify(p, cfg, numeric)));
      },
      py::arg("params"), py::arg("numeric") = false, py::arg("seed") = 1u, py::arg("radius") = 0.5,
      py::arg("rtol") = 1e-10);
  m.def(
      "verify_numeric",
      [](const std::string& params, unsigned seed, double radius, double rtol) {
        const FoliationParams p = params_from_text(params);
        require_generic(p);
        const RunConfig cfg = make_config(seed, radius, rtol);
        py::gil_scoped_release release;
        return report_to_json(run_numeric_checks(p, cfg.numeric())).dump();
      },
      py::arg("params"), py::arg("seed") = 1u, py::arg("radius") = 0.5, py::arg("rtol") = 1e-10);
}
