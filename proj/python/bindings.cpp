#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rlp/alternant.hpp"
#include "rlp/errors.hpp"
#include "rlp/io.hpp"
#include "rlp/spectra_gen.hpp"
#include "rlp/tau_engine.hpp"
#include "rlp/verify.hpp"
#include "rlp/wavefunctions.hpp"

namespace py = pybind11;

namespace {

rlp::SpectralInput make_input(std::vector<double> kappas, const std::string& mode,
                              std::vector<double> values, double c_phys) {
  rlp::SpectralInput in;
  in.kappas = std::move(kappas);
  in.c_phys = c_phys;
  if (mode == "symmetric") {
    in.norming = rlp::SymmetricMode{};
  } else if (mode == "constants") {
    in.norming = rlp::NormingConstants{std::move(values)};
  } else if (mode == "shifts") {
    in.norming = rlp::Shifts{std::move(values)};
  } else {
    throw rlp::Error(rlp::ErrorCode::ParseError, "unknown norming mode '" + mode + "'");
  }
  return in;
}

py::dict spectrum_dict(const rlp::SpectralInput& in) {
  return py::module_::import("json").attr("loads")(rlp::to_json(in).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reflectionless potentials from bound-state spectra";

  static py::exception<rlp::Error> rlp_error(m, "RlpError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const rlp::Error& e) {
      py::object exc = rlp_error;
      py::object inst = exc(std::string(rlp::to_string(e.code())) + ": " + e.what());
      inst.attr("code") = std::string(rlp::to_string(e.code()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  py::class_<rlp::ValidatedSpectrum>(m, "Spectrum")
      .def(py::init([](std::vector<double> kappas, const std::string& mode,
                       std::vector<double> values, double c_phys) {
             return rlp::validate(make_input(std::move(kappas), mode, std::move(values), c_phys));
           }),
           py::arg("kappas"), py::arg("mode") = "symmetric",
           py::arg("values") = std::vector<double>{}, py::arg("c_phys") = 1.0)
      .def_property_readonly("kappas", [](const rlp::ValidatedSpectrum& s) {
        return std::vector<double>(s.kappas().begin(), s.kappas().end());
      })
      .def_property_readonly("shifts", [](const rlp::ValidatedSpectrum& s) {
        return std::vector<double>(s.shifts().begin(), s.shifts().end());
      })
      .def_property_readonly("c_phys", &rlp::ValidatedSpectrum::c_phys)
      .def("__len__", &rlp::ValidatedSpectrum::size);

  m.def("preset", [](const std::string& name) { return spectrum_dict(rlp::preset_spectrum(name)); },
        py::arg("name"));
  m.def("preset_spectrum", [](const std::string& name) {
    return rlp::validate(rlp::preset_spectrum(name));
  }, py::arg("name"));

  m.def("alternant_product", [](const std::vector<double>& k) { return rlp::alternant_product(k); });

  m.def("potential", [](const rlp::ValidatedSpectrum& s, const std::vector<double>& xs) {
    return rlp::sample_potential(rlp::build_expansion(s), xs).vs;
  }, py::arg("spectrum"), py::arg("xs"));

  m.def("log_tau", [](const rlp::ValidatedSpectrum& s, double x) {
    return rlp::eval_tau(rlp::build_expansion(s), x).log_tau;
  }, py::arg("spectrum"), py::arg("x"));

  m.def("merged_amplitudes", [](const rlp::ValidatedSpectrum& s) {
    return rlp::merged_amplitudes(rlp::build_expansion(s));
  }, py::arg("spectrum"));

  m.def("term_count", [](const rlp::ValidatedSpectrum& s) {
    return rlp::build_expansion(s).size();
  }, py::arg("spectrum"));

  m.def("wavefunctions", [](const rlp::ValidatedSpectrum& s, const std::vector<double>& xs) {
    const rlp::WavefunctionSet set(s);
    std::vector<std::vector<double>> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(set.evaluate(x));
    return out;
  }, py::arg("spectrum"), py::arg("xs"));

  m.def("bound_states", [](const std::vector<double>& xs, const std::vector<double>& vs,
                           int count, double c_phys) {
    rlp::PotentialCurve curve{xs, vs, c_phys};
    return rlp::bound_states(curve, count);
  }, py::arg("xs"), py::arg("vs"), py::arg("count"), py::arg("c_phys") = 1.0);

  m.def("verify", [](const rlp::ValidatedSpectrum& s, double min, double max, double step) {
    const auto grid = rlp::uniform_grid(min, max, step);
    const auto curve = rlp::sample_potential(rlp::build_expansion(s), grid);
    return py::module_::import("json").attr("loads")(
        rlp::to_json(rlp::verify_reconstruction(curve, s)).dump());
  }, py::arg("spectrum"), py::arg("min"), py::arg("max"), py::arg("step"));
}
