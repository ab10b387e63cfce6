#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gmf/hecke.hpp"
#include "gmf/reports.hpp"
#include "gmf/symfun.hpp"

namespace py = pybind11;
using namespace gmf;

namespace {

using ReportFn = Status (*)(const std::string&, const ReportOptions&, Json&);

// (status, JSON text); JSON decoding is left to the Python side
std::pair<std::string, std::string> call(ReportFn fn, const std::string& text, const ReportOptions& o) {
  Json out;
  Status s;
  try {
    py::gil_scoped_release release;
    s = fn(text, o, out);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(e.what());
  }
  const char* name = s == Status::ok ? "ok" : s == Status::partial ? "partial" : "invariant";
  return {name, out.dump()};
}

ReportOptions options(int n, int unit, std::optional<std::pair<int, int>> window, bool certify,
                      const std::string& route) {
  return ReportOptions{n, unit, window, certify, route};
}

}  // namespace

PYBIND11_MODULE(_gmf, m) {
  m.doc() = "graded matrix factorizations";

  m.def("compile", [](const std::string& text, int n, int unit) {
    return call(compile_report, text, options(n, unit, {}, false, "theorem"));
  }, py::arg("text"), py::arg("n") = 2, py::arg("unit") = 0);
  m.def("close", [](const std::string& braid, int n, int unit, std::optional<std::pair<int, int>> window,
                    const std::string& route) {
    return call(close_report, braid, options(n, unit, window, false, route));
  }, py::arg("braid"), py::arg("n") = 2, py::arg("unit") = 0, py::arg("window") = py::none(),
     py::arg("route") = "theorem");
  m.def("verify_hecke", [](const std::string& text) {
    return call(verify_hecke_report, text, {});
  }, py::arg("relations"));
  m.def("verify_moy", [](const std::string& text, int n, int unit, bool certify) {
    return call(verify_moy_report, text, options(n, unit, {}, certify, "theorem"));
  }, py::arg("relations"), py::arg("n") = 2, py::arg("unit") = 0, py::arg("certify") = false);
  m.def("stabilize", [](const std::string& text) { return call(stabilize_report, text, {}); }, py::arg("spec"));
  m.def("reduce", [](const std::string& text) { return call(reduce_report, text, {}); }, py::arg("factorization"));

  m.def("kl_element", [](const std::string& w) { return kl_element(parse_perm(w)).to_string(); }, py::arg("w"));
  m.def("rsk_shape", [](const std::string& w) { return rsk_shape(parse_perm(w)); }, py::arg("w"));
  m.def("vanishing_predicate", [](const std::string& w, int n) { return vanishing_predicate(parse_perm(w), n); },
        py::arg("w"), py::arg("n"));
  m.def("power_sum_elem", [](int n, int m) { return power_sum_elem(n, m).to_string(); }, py::arg("n"), py::arg("m"));
}
