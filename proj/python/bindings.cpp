#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hodge/cli.hpp"

namespace py = pybind11;

namespace {

hodge::MetricParams metric(double a, double b, double c, const std::string & group)
{
  return hodge::MetricParams(a, b, c, hodge::parse_group(group));
}

std::string to_text(const hodge::Json & j)
{
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Hodge Laplacian spectra of left-invariant metrics on SU(2) and SO(3)";
  m.attr("__version__") = hodge::version();

  py::register_exception<hodge::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<hodge::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
    "lambda1",
    [](double a, double b, double c, const std::string & group) {
      return hodge::lambda1_formula(metric(a, b, c, group)).value;
    },
    py::arg("a"), py::arg("b"), py::arg("c"), py::arg("group") = "SU2");

  m.def(
    "block_eigenvalues",
    [](int k, double a, double b, double c, int degree) {
      const auto mp = metric(a, b, c, "SU2");
      const auto M = degree == 0 ? hodge::assemble_delta0(hodge::WeightIndex(k), mp)
                                 : hodge::assemble_delta1(hodge::WeightIndex(k), mp);
      return hodge::eigenvalues(M);
    },
    py::arg("k"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("degree") = 1);

  m.def(
    "geometry",
    [](double a, double b, double c, const std::string & group) {
      return to_text(hodge::to_json(hodge::geometry(metric(a, b, c, group))));
    },
    py::arg("a"), py::arg("b"), py::arg("c"), py::arg("group") = "SU2");

  m.def(
    "execute",
    [](const std::string & command, double a, double b, std::optional<double> c, const std::string & group, int degree,
       int k_max, std::uint64_t seed, int samples, double lo, double hi, int k_probe, std::optional<double> volume,
       std::optional<double> scal, std::optional<double> lambda1, std::optional<double> ric2, int workers) {
      hodge::RunConfig cfg;
      cfg.command = command;
      cfg.a = a;
      cfg.b = b;
      cfg.c = c;
      cfg.group = hodge::parse_group(group);
      cfg.degree = degree;
      cfg.k_max = k_max;
      cfg.seed = seed;
      cfg.samples = samples;
      cfg.lo = lo;
      cfg.hi = hi;
      cfg.k_probe = k_probe;
      cfg.volume = volume;
      cfg.scal = scal;
      cfg.lambda1 = lambda1;
      cfg.ric2 = ric2;
      cfg.workers = workers;
      hodge::RunOutcome outcome;
      {
        py::gil_scoped_release release;
        outcome = hodge::execute(cfg);
      }
      return py::make_tuple(to_text(outcome.report), outcome.exit_code);
    },
    py::arg("command"), py::arg("a") = 1.0, py::arg("b") = 1.0, py::arg("c") = py::none(), py::arg("group") = "SU2",
    py::arg("degree") = 1, py::arg("k_max") = 25, py::arg("seed") = 1, py::arg("samples") = 1000, py::arg("lo") = 0.1,
    py::arg("hi") = 10.0, py::arg("k_probe") = 200, py::arg("volume") = py::none(), py::arg("scal") = py::none(),
    py::arg("lambda1") = py::none(), py::arg("ric2") = py::none(), py::arg("workers") = 0);
}
