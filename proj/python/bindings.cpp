// Python module: thin wrappers that exchange JSON strings and decode them with the json module.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "onebranch/api.hpp"
#include "onebranch/errors.hpp"
#include "onebranch/report.hpp"

namespace py = pybind11;
using namespace onebranch;
using nlohmann::json;

namespace {

FieldSpec field_arg(const std::string& text) { return FieldSpec::parse(text); }

std::optional<json> parse_opt(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return json::parse(*text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ideal classes of one-branch singularities";

  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("split_generators", &split_generators, py::arg("text"));

  m.def(
      "classify",
      [](const std::vector<std::string>& gens, const std::string& field, std::size_t precision, std::uint32_t ch) {
        py::gil_scoped_release release;
        return classify_order(gens, field_arg(field), precision, ch).dump();
      },
      py::arg("gens"), py::arg("field") = "Q", py::arg("precision") = 64, py::arg("char") = 0);

  m.def(
      "end_chain",
      [](const std::vector<std::string>& gens, const std::string& field, std::size_t precision) {
        py::gil_scoped_release release;
        return end_chain_json(gens, field_arg(field), precision).dump();
      },
      py::arg("gens"), py::arg("field") = "F3", py::arg("precision") = 64);

  m.def(
      "isomorphic",
      [](const std::string& a, const std::string& b, const std::vector<std::string>& gens,
         const std::optional<std::string>& order, const std::string& field, std::size_t precision) {
        const auto ja = json::parse(a), jb = json::parse(b);
        const auto jo = parse_opt(order);
        py::gil_scoped_release release;
        return isomorphism_json(jo, gens, ja, jb, field_arg(field), precision).dump();
      },
      py::arg("a"), py::arg("b"), py::arg("gens") = std::vector<std::string>{}, py::arg("order") = std::nullopt,
      py::arg("field") = "F3", py::arg("precision") = 64);

  m.def(
      "enumerate",
      [](const std::vector<std::string>& gens, const std::string& field, std::size_t precision, std::size_t jobs,
         const std::string& format) {
        Enumeration e;
        {
          py::gil_scoped_release release;
          e = enumerate_classes(gens, field_arg(field), precision, jobs, format);
        }
        return py::make_tuple(e.text, e.collisions);
      },
      py::arg("gens"), py::arg("field") = "F3", py::arg("precision") = 64, py::arg("jobs") = 1,
      py::arg("format") = "json");

  m.def(
      "verify",
      [](const std::string& suite, const std::string& field, std::size_t precision, std::size_t jobs) {
        SuiteConfig cfg;
        cfg.suite = suite;
        cfg.field = field_arg(field);
        cfg.precision = precision;
        cfg.jobs = jobs;
        cfg.validate();
        py::gil_scoped_release release;
        json out = json::array();
        for (const auto& r : run_suite(cfg)) out.push_back(r.to_json());
        return out.dump();
      },
      py::arg("suite") = "all", py::arg("field") = "F3", py::arg("precision") = 64, py::arg("jobs") = 1);

  m.attr("suites") = SuiteConfig::suite_names();
}
