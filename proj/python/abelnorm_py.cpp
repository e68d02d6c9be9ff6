#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "abelnorm/experiments.hpp"

namespace py = pybind11;
using namespace abelnorm;

namespace {

DigitStream source(const std::string& name) {
  if (name == "c10") return DigitStream::c10();
  if (name == "d10") return DigitStream::d10();
  throw py::value_error("source must be 'c10' or 'd10', got '" + name + "'");
}

CaseOptions case_options(bool case2_literal, bool causal) {
  CaseOptions opts;
  if (case2_literal) opts.case2 = Case2Mode::string_distinct;
  if (causal) opts.lookaround = Lookaround::causal;
  return opts;
}

py::dict weight_dict(const WeightValue& w) {
  py::dict d;
  d["value"] = w.value;
  d["abs_error"] = w.abs_error ? py::cast(*w.abs_error) : py::none();
  d["case_tag"] = std::string(to_string(w.case_tag));
  d["estimator_n"] = w.estimator_n ? py::cast(*w.estimator_n) : py::none();
  std::ostringstream exact;
  exact << w.exact;
  d["exact"] = exact.str();
  return d;
}

}  // namespace

PYBIND11_MODULE(abelnorm, m) {
  m.doc() = "Abelian counts and weights on Champernowne's constant and its run-sorted variant";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::logic_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("champernowne_digit", &champernowne_digit, py::arg("p"));
  m.def(
      "stream_prefix", [](const std::string& src, Count n) { return stream_prefix(source(src), n).to_string(); },
      py::arg("source"), py::arg("n"));
  m.def(
      "sigma_transform", [](const std::string& w) { return sigma_transform(Word::parse(w)).to_string(); },
      py::arg("word"));
  m.def(
      "binary_runs",
      [](const std::string& src, Count n) {
        std::vector<std::tuple<Position, Count, Count, Count>> out;
        for (const auto& r : binary_runs(source(src), n)) out.emplace_back(r.start, r.length, r.zeros, r.ones);
        return out;
      },
      py::arg("source"), py::arg("n"));
  m.def(
      "count_A",
      [](const std::string& src, const std::string& E, Count n) { return count_A(source(src), Word::parse(E), n); },
      py::arg("source"), py::arg("pattern"), py::arg("n"));
  m.def(
      "count_B",
      [](const std::string& src, const std::string& E, Count n) { return count_B(source(src), Word::parse(E), n); },
      py::arg("source"), py::arg("pattern"), py::arg("n"));
  m.def(
      "count_C",
      [](const std::string& w, Count n, bool case2_literal, bool causal) {
        return count_C(Word::parse(w), n, case_options(case2_literal, causal));
      },
      py::arg("word"), py::arg("n"), py::arg("case2_literal") = false, py::arg("causal") = false);
  m.def(
      "count_D",
      [](const std::string& w, Count n, bool case2_literal, bool causal) {
        return count_D(Word::parse(w), n, case_options(case2_literal, causal));
      },
      py::arg("word"), py::arg("n"), py::arg("case2_literal") = false, py::arg("causal") = false);
  m.def(
      "weight",
      [](const std::string& E, double tol, Count estimate_n, bool case2_literal) {
        WeightOptions opts;
        opts.tol = tol;
        opts.estimate_n = estimate_n;
        opts.cases = case_options(case2_literal, false);
        return weight_dict(weight(Word::parse(E), opts));
      },
      py::arg("pattern"), py::arg("tol") = 1e-12, py::arg("estimate_n") = 1'000'000,
      py::arg("case2_literal") = false);
  m.def(
      "convergence_table",
      [](const std::string& src, const std::string& E, std::vector<Count> grid) {
        const Word word = Word::parse(E);
        std::vector<py::dict> rows;
        for (const auto& r : convergence_table(source(src), word, grid, weight(word))) {
          py::dict d;
          d["n"] = r.n;
          d["count_b"] = r.count_b;
          d["ratio"] = r.ratio;
          d["deviation"] = r.deviation;
          d["weight"] = weight_dict(r.weight);
          rows.push_back(d);
        }
        return rows;
      },
      py::arg("source"), py::arg("pattern"), py::arg("grid"));
  m.def("verify_paper_examples", []() {
    const Report r = verify_paper_examples();
    py::dict checks;
    for (const auto& c : r.checks) checks[py::str(c.name)] = py::make_tuple(c.passed, c.expected, c.actual);
    py::dict out;
    out["passed"] = r.passed();
    out["checks"] = checks;
    out["notes"] = r.notes;
    return out;
  });
  m.def(
      "verify_identity",
      [](const std::string& w, std::vector<Count> ns, bool case2_literal) {
        std::vector<py::dict> rows;
        for (const auto& r : verify_identity(Word::parse(w), ns, case_options(case2_literal, false))) {
          py::dict d;
          d["n"] = r.n;
          d["lhs"] = r.lhs;
          d["sum_a"] = r.sum_a;
          d["case1"] = r.case1;
          d["case2"] = r.case2;
          d["mismatch"] = r.mismatch;
          rows.push_back(d);
        }
        return rows;
      },
      py::arg("word"), py::arg("n"), py::arg("case2_literal") = false);
}
