#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "shiftbetti/betti.hpp"
#include "shiftbetti/binomial.hpp"
#include "shiftbetti/cli.hpp"
#include "shiftbetti/error.hpp"
#include "shiftbetti/family.hpp"
#include "shiftbetti/report.hpp"
#include "shiftbetti/tables.hpp"

namespace py = pybind11;
using namespace shiftbetti;

namespace {

// Structured results cross the boundary as JSON text; the Python side parses it.
std::string betti_json(const std::vector<Int>& gens, std::optional<Int> bound) {
  py::gil_scoped_release release;
  return betti_to_json(graded_betti(Semigroup::normalize(gens), bound)).dump();
}

std::string generators_json(const std::vector<Int>& gens, std::optional<Int> bound) {
  py::gil_scoped_release release;
  const auto s = Semigroup::normalize(gens);
  const auto g = minimal_generators(s, bound);
  Json list = Json::array();
  for (std::size_t i = 0; i < g.binomials.size(); ++i)
    list.push_back(binomial_to_json(g.binomials[i], g.degrees[i]));
  return Json{{"mu", g.mu}, {"generators", list}}.dump();
}

std::string critical_json(const std::vector<Int>& gens) {
  const auto s = Semigroup::normalize(gens);
  Json list = Json::array();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    const auto w = critical_exponent(s, i);
    Json item = binomial_to_json(w.binomial(), w.complement.degree);
    item["index"] = i + 1;
    item["exponent"] = w.exponent;
    list.push_back(item);
  }
  return list.dump();
}

std::string scan_json(Int a, Int b, Int c, Int from, Int to, Int offset, unsigned jobs,
                      std::optional<Int> bound) {
  py::gil_scoped_release release;
  return scan_to_json(scan(FamilySpec(a, b, c, offset), from, to, jobs, bound)).dump();
}

std::string verify_b_json(Int a, Int b, Int c, Int from, Int to, Int offset, unsigned jobs) {
  py::gil_scoped_release release;
  return verification_to_json(verify_theorem_b(FamilySpec(a, b, c, offset), from, to, jobs))
      .dump();
}

std::string verify_a_json(Int a, Int b, Int c, Int n_max, bool include_t, Int offset) {
  py::gil_scoped_release release;
  return verification_to_json(verify_theorem_a(FamilySpec(a, b, c, offset), n_max, include_t))
      .dump();
}

std::string verify_hs3_json(Int q_max, Int ab_max) {
  py::gil_scoped_release release;
  return verification_to_json(verify_hs3(q_max, ab_max)).dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::vector<std::string> full{"shiftbetti"};
  full.insert(full.end(), args.begin(), args.end());
  int code = 0;
  {
    py::gil_scoped_release release;
    code = run(full, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Betti numbers of shifted numerical semigroup rings";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&m] {
    return py::exception<Error>(m, "ShiftBettiError", PyExc_ValueError);
  });
  // args are (kind, message), e.g. ("hypothesis-not-met", "...")
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error_type.get_stored().ptr(),
                      py::make_tuple(std::string(to_string(e.kind())), e.what()).ptr());
    }
  });

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init([](const std::vector<Int>& gens) { return Semigroup::normalize(gens); }),
           py::arg("generators"))
      .def_property_readonly("generators", &Semigroup::generators)
      .def_property_readonly("raw_generators", &Semigroup::raw_generators)
      .def_property_readonly("content", &Semigroup::content)
      .def("__contains__", &Semigroup::contains)
      .def("frobenius", &Semigroup::frobenius)
      .def("apery", &Semigroup::apery, py::arg("pivot"))
      .def("factorizations",
           [](const Semigroup& s, Int m) {
             std::vector<std::vector<Int>> out;
             for (auto& f : s.factorizations(m)) out.push_back(f.exponents);
             return out;
           },
           py::arg("m"))
      .def("__repr__", &Semigroup::to_string);

  m.def("_betti_json", &betti_json, py::arg("gens"), py::arg("bound") = py::none());
  m.def("_generators_json", &generators_json, py::arg("gens"), py::arg("bound") = py::none());
  m.def("_critical_json", &critical_json, py::arg("gens"));
  m.def("_scan_json", &scan_json, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("j_min"),
        py::arg("j_max"), py::arg("offset") = 1, py::arg("jobs") = 1,
        py::arg("bound") = py::none());
  m.def("_verify_b_json", &verify_b_json, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("j_min"), py::arg("j_max"), py::arg("offset") = 0, py::arg("jobs") = 1);
  m.def("_verify_a_json", &verify_a_json, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("n_max"), py::arg("include_t") = true, py::arg("offset") = 0);
  m.def("_verify_hs3_json", &verify_hs3_json, py::arg("q_max"), py::arg("ab_max"));
  m.def("ci_check_3gen", &ci_check_3gen, py::arg("q"), py::arg("a"), py::arg("b"));
  m.def("is_complete_intersection",
        [](const std::vector<Int>& gens) {
          return is_complete_intersection(Semigroup::normalize(gens));
        },
        py::arg("gens"));
  m.def("reproduce_table",
        [](int example, unsigned jobs) {
          const auto cmp = reproduce_table(example, jobs);
          py::dict d;
          d["example"] = cmp.example;
          d["pass"] = cmp.pass;
          d["matched"] = cmp.matched;
          d["total"] = cmp.total;
          d["ci_rows"] = cmp.ci_rows;
          d["diff"] = cmp.diff;
          return d;
        },
        py::arg("example"), py::arg("jobs") = 1);
  m.def("run", &run_cli, py::arg("args"));
}
