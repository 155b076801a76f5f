#include <chrono>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellrank/errors.hpp"
#include "ellrank/model_text.hpp"
#include "ellrank/report.hpp"

namespace py = pybind11;
using namespace ellrank;

namespace {

// Results cross the boundary as JSON text; the package decodes them.
std::string fibers(const std::string& text) {
  const ModelFile f = parse_model_text(text);
  Json j;
  j["label"] = f.label;
  j["model"] = to_json(f.model);
  j["configuration"] = to_json(fiber_configuration(f.model));
  return j.dump();
}

std::string construct(const std::string& a_text, const std::string& b_text, const std::string& c_text) {
  Rational a, b, c;
  try {
    a = parse_rational(a_text);
    b = parse_rational(b_text);
    c = parse_rational(c_text);
  } catch (const std::exception&) {
    throw BadParameters("parameters must be rationals");
  }
  const WeierstrassModel model = reduce_constants(minimalize(family_E_abc(a, b, c)).first).first;
  const std::string label = "E_{" + to_string(a) + "," + to_string(b) + "," + to_string(c) + "}";
  Json j;
  j["label"] = label;
  j["model"] = to_json(model);
  j["model_text"] = model_text(model, label);
  j["configuration"] = to_json(fiber_configuration(model));
  j["ledger"] = to_json(construction_pipeline(c, a, b));
  return j.dump();
}

std::string count(const std::string& text, u64 p, int k, unsigned threads) {
  const SurfaceModP s = reduce_mod_p(parse_model_text(text).model, p);
  CountOptions opts;
  opts.threads = threads;
  Json j = to_json(count_smooth_points(s, k, opts));
  j["reduction"] = s.evidence;
  return j.dump();
}

std::string certify(const std::string& text, u64 p1, u64 p2, unsigned threads, double factor_timeout) {
  CertifyOptions opts;
  opts.count.threads = threads;
  opts.factor.timeout = std::chrono::milliseconds(static_cast<long long>(factor_timeout * 1000));
  return to_json(certify_rank(parse_model_text(text).model, p1, p2, opts)).dump();
}

std::pair<std::vector<std::string>, std::vector<std::string>> verify(const std::string& cert, double factor_timeout) {
  Json j;
  try {
    j = Json::parse(cert);
  } catch (const Json::parse_error& e) {
    throw ParseError(1, 1, e.what());
  }
  FactorOptions fo;
  fo.timeout = std::chrono::milliseconds(static_cast<long long>(factor_timeout * 1000));
  const VerificationResult r = verify_certificate(j, fo);
  return {r.passed, r.failed};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error)(e.what());
      inst.attr("code") = static_cast<int>(e.code());
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  m.def("fibers", &fibers, py::arg("model_text"));
  m.def("construct", &construct, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("count", &count, py::arg("model_text"), py::arg("p"), py::arg("k") = 1, py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("certify", &certify, py::arg("model_text"), py::arg("p1") = 17, py::arg("p2") = 19, py::arg("threads") = 0,
        py::arg("factor_timeout") = 30.0, py::call_guard<py::gil_scoped_release>());
  m.def("verify", &verify, py::arg("certificate"), py::arg("factor_timeout") = 30.0);
}
