// Thin pybind11 layer. Exact numbers cross the boundary as decimal strings; the Python
// package turns them into int / Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fplpoly/basis.hpp"
#include "fplpoly/engine.hpp"
#include "fplpoly/fpl.hpp"
#include "fplpoly/harness.hpp"
#include "fplpoly/json_io.hpp"
#include "fplpoly/loopmodel.hpp"

namespace py = pybind11;
using namespace fplpoly;

namespace {

std::vector<std::string> coeff_strings(const PolyTau& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Matching checked(const std::string& text) {
  Matching m = Matching::parse(text);
  if (m.size() < 1 || m.size() > kPolyCap)
    throw UsageError("matching size must lie in 1.." + std::to_string(kPolyCap));
  return m;
}

std::vector<std::string> big_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

void require(int n, int hi) {
  if (n < 1 || n > hi) throw UsageError("n must lie in 1.." + std::to_string(hi));
}

}  // namespace

PYBIND11_MODULE(_fplpoly, m) {
  m.doc() = "Exact groundstate, FPL and ASM computations";

  m.def("matchings", [](int n) {
    require(n, kFormulaCap);
    std::vector<std::string> out;
    for (const auto& x : all_matchings(n)) out.push_back(x.word());
    return out;
  });
  m.def("psi_tau", [](const std::string& pi) { return coeff_strings(psi_tau(checked(pi))); });
  m.def("psi_poly", [](const std::string& pi) {
    const PolyTauT p = psi_poly(checked(pi));
    std::vector<std::vector<std::string>> out;
    for (const auto& c : p.coeffs()) out.push_back(coeff_strings(c));
    return out;
  });
  m.def("g_poly", [](const std::string& pi) { return coeff_strings(g_poly(checked(pi))); });
  m.def("groundstate", [](int n) {
    require(n, kPolyCap);
    return big_strings(groundstate(n).psi);
  });
  m.def("count_fpl", [](int n) {
    require(n, kFplCap);
    return count_fpl(n);
  });
  m.def("count_by_matching", [](int n) {
    require(n, kFplCap);
    return big_strings(count_by_matching(n));
  });
  m.def("refined_asm_counts", [](int n) {
    require(n, kFplCap);
    return big_strings(refined_asm_counts(n));
  });
  m.def("a_n", [](int n) { return a_n(n).get_str(); });
  m.def("a_v", [](int n) { return a_v(n).get_str(); });
  m.def("c_matrix_json", [](int n, bool inverse) {
    require(n, kPolyCap);
    return to_json(inverse ? c_inverse(n) : c_matrix(n)).dump();
  }, py::arg("n"), py::arg("inverse") = false);
  m.def("factor_check", [](const std::string& pi, int p) { return factor_check(checked(pi), p).ok; });
  m.def("run_suite_json", [](const std::string& name, int n_max, std::uint64_t seed) {
    SuiteReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(name, n_max, seed);
    }
    return to_json(r).dump();
  }, py::arg("name"), py::arg("n_max"), py::arg("seed") = 0);
  m.def("emit_table", &emit_table, py::arg("kind"), py::arg("n"), py::arg("format") = "json");
  m.def("suite_names", &suite_names);
}
