#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srank/commands.hpp"
#include "srank/harness.hpp"
#include "srank/presentation.hpp"

namespace py = pybind11;

namespace {

using Release = py::call_guard<py::gil_scoped_release>;

std::string suite_json(const std::vector<std::string>& only, std::size_t samples, std::uint64_t seed) {
  srank::SuiteOptions so;
  so.only = only;
  so.law_samples = samples;
  so.seed = seed;
  return srank::paper_suite(so).results.dump();
}

py::list catalog() {
  py::list out;
  for (const auto& f : srank::fixture_catalog()) {
    py::dict d;
    d["id"] = f.id;
    d["title"] = f.title;
    d["format"] = f.format;
    d["filename"] = f.filename();
    d["text"] = f.text;
    d["pinning_radius"] = f.pinning_radius;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stable rank workbench core; every analysis returns a JSON string.";
  py::register_exception<srank::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<srank::AxiomViolation>(m, "AxiomViolation", PyExc_ValueError);
  py::register_exception<srank::SuiteContradiction>(m, "SuiteContradiction", PyExc_RuntimeError);

  m.attr("__version__") = srank::kToolVersion;
  m.attr("DEFAULT_COMPLETION_BUDGET") = srank::kDefaultCompletionBudget;

  m.def("nf", [](const std::string& t, const std::string& e) { return srank::cmd_nf(t, e).dump(); },
        py::arg("text"), py::arg("expr"), Release());
  m.def("eq",
        [](const std::string& t, const std::string& l, const std::string& r) {
          return srank::cmd_eq(t, l, r).dump();
        },
        py::arg("text"), py::arg("lhs"), py::arg("rhs"), Release());
  m.def("complete", [](const std::string& t, std::size_t b) { return srank::cmd_complete(t, b).dump(); },
        py::arg("text"), py::arg("budget") = srank::kDefaultCompletionBudget, Release());
  m.def("finite", [](const std::string& t, std::size_t cap) { return srank::cmd_finite(t, cap).dump(); },
        py::arg("text"), py::arg("cap") = 4096, Release());
  m.def("grade", [](const std::string& t) { return srank::cmd_grade(t).dump(); }, py::arg("text"),
        Release());
  m.def("sr",
        [](const std::string& t, const std::string& e, std::uint64_t radius, std::uint64_t witness_radius,
           std::size_t max_n, std::size_t target_size) {
          return srank::cmd_sr(t, e, {radius, witness_radius, max_n, target_size}).dump();
        },
        py::arg("text"), py::arg("expr"), py::arg("radius") = 0, py::arg("witness_radius") = 0,
        py::arg("max_n") = 24, py::arg("target_size") = 6, Release());
  m.def("props",
        [](const std::string& t, std::uint64_t radius, std::uint64_t witness_radius) {
          return srank::cmd_props(t, radius, witness_radius).dump();
        },
        py::arg("text"), py::arg("radius") = 0, py::arg("witness_radius") = 0, Release());
  m.def("quotient",
        [](const std::string& t, const std::string& kind, const std::string& ideal_of,
           const std::vector<std::size_t>& powers, const std::vector<std::string>& targets) {
          return srank::cmd_quotient(t, {kind, ideal_of, powers, targets}).dump();
        },
        py::arg("text"), py::arg("kind"), py::arg("ideal_of") = "", py::arg("powers") = std::vector<std::size_t>{},
        py::arg("targets") = std::vector<std::string>{}, Release());
  m.def("verify",
        [](const std::string& t, const std::string& cert) {
          return srank::cmd_verify(t, srank::Json::parse(cert)).dump();
        },
        py::arg("text"), py::arg("certificate"), Release());
  m.def("report",
        [](const std::string& command, const std::string& input, const std::string& params,
           const std::string& results, double elapsed_ms) {
          return srank::make_report(command, input, srank::Json::parse(params), srank::Json::parse(results),
                                    elapsed_ms)
              .dump();
        },
        py::arg("command"), py::arg("input"), py::arg("params"), py::arg("results"), py::arg("elapsed_ms") = 0.0);
  m.def("suite", &suite_json, py::arg("fixtures") = std::vector<std::string>{}, py::arg("samples") = 100,
        py::arg("seed") = srank::SuiteOptions{}.seed, Release());
  m.def("fixtures", &catalog);
}
