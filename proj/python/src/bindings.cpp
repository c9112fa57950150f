#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opmeans/entropy.hpp"
#include "opmeans/means.hpp"
#include "opmeans/report_json.hpp"

namespace py = pybind11;

namespace opmeans {
namespace {

SymMatrix sym(const GeneralMatrix& m) { return SymMatrix(m); }

ClaimId claim_from_name(const std::string& name) {
  if (auto id = parse_claim(name)) return *id;
  throw ParameterError("unknown claim '" + name + "'");
}

std::string check_json(const std::string& claim, const GeneralMatrix& a, const GeneralMatrix& b,
                       std::optional<GeneralMatrix> c, std::optional<GeneralMatrix> x,
                       std::optional<std::vector<double>> t_grid, std::uint64_t seed, double rel_tol) {
  ClaimInputs in(sym(a), sym(b));
  if (c) in.c = sym(*c);
  in.x = std::move(x);
  if (t_grid) in.t_grid = *t_grid;
  in.seed = seed;
  return to_json(check(claim_from_name(claim), in, CheckOptions{rel_tol})).dump();
}

std::string falsify_json(const std::string& claim, int trials, int dim, int dim_max, std::uint64_t seed,
                         double cond_max, bool reference_inputs_first) {
  RandomSpec spec;
  spec.dim = dim;
  spec.seed = seed;
  spec.cond_max = cond_max;
  FalsifyOptions options;
  options.dim_max = dim_max;
  options.reference_inputs_first = reference_inputs_first;
  return to_json(falsify(claim_from_name(claim), trials, spec, options)).dump();
}

std::string suite_json(int trials, int dim_min, int dim_max, double cond_max, std::uint64_t seed,
                       double rel_tol, int falsify_trials) {
  SuiteConfig config;
  config.trials = trials;
  config.dim_min = dim_min;
  config.dim_max = dim_max;
  config.cond_max = cond_max;
  config.seed = seed;
  config.rel_tol = rel_tol;
  config.falsify_trials = falsify_trials;
  return to_json(run_suite(config)).dump();
}

std::string examples_json() {
  json arr = json::array();
  for (const ExampleResult& e : reproduce_reference_examples()) arr.push_back(to_json(e));
  return arr.dump();
}

}  // namespace
}  // namespace opmeans

PYBIND11_MODULE(_opmeans, m) {
  using namespace opmeans;
  m.doc() = "Operator means, the natural operation and related entropies";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());
  py::register_exception<NotPositiveDefinite>(m, "NotPositiveDefinite", base.ptr());
  py::register_exception<HypothesisNotMet>(m, "HypothesisNotMet", base.ptr());

  auto binary = [&m](const char* name, SymMatrix (*f)(const SymMatrix&, const SymMatrix&), const char* doc) {
    m.def(
        name, [f](const GeneralMatrix& a, const GeneralMatrix& b) { return f(sym(a), sym(b)).matrix(); },
        py::arg("a"), py::arg("b"), doc);
  };
  auto weighted = [&m](const char* name, SymMatrix (*f)(const SymMatrix&, const SymMatrix&, double),
                       double default_t, const char* doc) {
    m.def(
        name,
        [f](const GeneralMatrix& a, const GeneralMatrix& b, double t) { return f(sym(a), sym(b), t).matrix(); },
        py::arg("a"), py::arg("b"), py::arg("t") = default_t, doc);
  };

  binary("arithmetic_mean", &arithmetic_mean, "(A + B) / 2");
  binary("harmonic_mean", &harmonic_mean, "2 (A^-1 + B^-1)^-1");
  binary("m_hat", &m_hat, "A^1/2 B^1/2 A^-1 B^1/2 A^1/2");
  binary("quasi_relative_entropy", &quasi_relative_entropy, "A^1/2 log(B^1/2 A^-1 B^1/2) A^1/2");
  weighted("geometric_mean", &geometric_mean_t, 0.5, "A^1/2 (A^-1/2 B A^-1/2)^t A^1/2");
  weighted("natural", &natural_t, 0.5, "A^1/2 (B^1/2 A^-1 B^1/2)^t A^1/2");
  weighted("heinz", &heinz, 0.5, "(A #_t B + A #_{1-t} B) / 2");
  weighted("tsallis", &tsallis, 0.5, "(A #_t B - A) / t");
  weighted("quasi_tsallis", &quasi_tsallis, 0.5, "(A natural_t B - A) / t");

  m.def(
      "sqrt_product", [](const GeneralMatrix& a, const GeneralMatrix& b) { return sqrt_product(sym(a), sym(b)); },
      py::arg("a"), py::arg("b"));
  m.def(
      "eig_sym",
      [](const GeneralMatrix& a) {
        const SpdDecomposition d = eig_sym(sym(a));
        return py::make_tuple(Vector(d.eigenvalues), GeneralMatrix(d.eigenvectors));
      },
      py::arg("a"), "Eigenvalues (descending) and orthonormal eigenvectors by cyclic Jacobi");
  m.def("ln_t", &ln_t, py::arg("x"), py::arg("t"));
  m.def("kantorovich", &kantorovich, py::arg("h"));
  m.def(
      "kappa", [](const GeneralMatrix& s, const GeneralMatrix& t) { return kappa(s, t); }, py::arg("s"),
      py::arg("t"));
  m.def(
      "random_spd",
      [](int dim, std::uint64_t seed, double cond_max, double scale) {
        return random_spd(RandomSpec{dim, seed, cond_max, scale}).matrix();
      },
      py::arg("dim"), py::arg("seed") = 0, py::arg("cond_max") = 1e3, py::arg("scale") = 1.0);

  m.def("claim_names", [] {
    std::vector<std::string> out;
    for (const ClaimInfo& c : catalog()) out.emplace_back(c.name);
    return out;
  });
  m.def("_check_json", &check_json, py::arg("claim"), py::arg("a"), py::arg("b"), py::arg("c") = py::none(),
        py::arg("x") = py::none(), py::arg("t_grid") = py::none(), py::arg("seed") = 0,
        py::arg("rel_tol") = kDefaultRelTol);
  m.def("_falsify_json", &falsify_json, py::arg("claim"), py::arg("trials") = 1000, py::arg("dim") = 2,
        py::arg("dim_max") = 8, py::arg("seed") = 0, py::arg("cond_max") = 1e3,
        py::arg("reference_inputs_first") = false);
  m.def("_suite_json", &suite_json, py::arg("trials") = 200, py::arg("dim_min") = 2, py::arg("dim_max") = 8,
        py::arg("cond_max") = 1e3, py::arg("seed") = 0, py::arg("rel_tol") = kDefaultRelTol,
        py::arg("falsify_trials") = 1000, py::call_guard<py::gil_scoped_release>());
  m.def("_examples_json", &examples_json);
}
