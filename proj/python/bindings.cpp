#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rednum/analyze.hpp"
#include "rednum/search.hpp"

namespace py = pybind11;
using namespace rednum;

namespace {

std::string analyze_json(const std::string& spec, std::optional<unsigned> cap, std::optional<unsigned> horizon,
                         std::uint64_t seed, unsigned samples, bool quotient_check) {
  AnalyzeOptions o;
  o.cap = cap;
  o.horizon = horizon;
  o.seed = seed;
  o.samples = samples;
  o.superficial_quotient_check = quotient_check;
  AnalysisReport rep;
  {
    py::gil_scoped_release release;
    rep = analyze(parse_spec_json(spec), o);
  }
  return report_to_json(rep);
}

py::tuple search(std::uint64_t seed, unsigned trials, unsigned vars, unsigned max_deg, const std::string& family) {
  SearchConfig c;
  c.seed = seed;
  c.trials = trials;
  c.vars = vars;
  c.max_deg = max_deg;
  if (family == "binomial") c.family = IdealFamily::Binomial;
  else if (family != "monomial") throw std::invalid_argument("family must be monomial or binomial");
  SearchSummary s;
  {
    py::gil_scoped_release release;
    s = search_counterexamples(c);
  }
  return py::make_tuple(s.violations, s.near_equalities, s.skipped, search_log(s));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reduction numbers, Ratliff-Rush closures and Hilbert coefficients of m-primary ideals";
  m.attr("__version__") = kToolVersion;
  m.def("example_ids", &example_ids, "Identifiers of the built-in example ideals.");
  m.def(
      "example_spec", [](const std::string& id) { return spec_to_json(registry_example(id)); }, py::arg("id"),
      "Spec document of a built-in example, as JSON text.");
  m.def("analyze_json", &analyze_json, py::arg("spec"), py::arg("cap") = py::none(), py::arg("horizon") = py::none(),
        py::arg("seed") = 42, py::arg("samples") = 4, py::arg("quotient_check") = false,
        "Analyzes a spec document (JSON text) and returns the report as JSON text.");
  m.def("search", &search, py::arg("seed") = 42, py::arg("trials") = 10, py::arg("vars") = 2,
        py::arg("max_deg") = 4, py::arg("family") = "monomial",
        "Random search; returns (violations, near_equalities, skipped, log).");
}
