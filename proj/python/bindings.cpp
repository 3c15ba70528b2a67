#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nsreal/cli.hpp"
#include "nsreal/dsl.hpp"
#include "nsreal/json_io.hpp"
#include "nsreal/wattenberg.hpp"

namespace py = pybind11;
using namespace nsreal;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const json_io::Json& j) { return j.dump(); }

std::vector<Rational> parse_all(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact hyperreal, Dedekind-cut and Hermite-integer computations";

  // Messages start with the error code name, e.g. "ZeroLeadingCoefficient: ...".
  py::register_exception<Error>(m, "NsrealError", PyExc_ValueError);

  m.def("goldbach", [](std::uint64_t limit) { return dump(json_io::goldbach_summary(limit)); },
        py::arg("limit"));

  m.def("sieve",
        [](std::uint64_t depth, std::size_t steps) {
          return dump(json_io::sieve_report(goldbach::euler_sieve(depth, steps)));
        },
        py::arg("depth"), py::arg("steps"));

  m.def("extsum",
        [](const std::string& series, std::size_t depth, const std::string& tolerance) {
          extsum::FlatSumOptions opt;
          opt.depth = depth;
          opt.tolerance = parse_rational(tolerance);
          auto parsed = dsl::parse_series(series);
          return dump(json_io::ext_sum(parsed.label, depth, extsum::flat_sum(parsed, opt)));
        },
        py::arg("series"), py::arg("depth") = kDefaultDepth, py::arg("tolerance") = "1/1000000");

  m.def("hermite_m",
        [](unsigned n, unsigned p, unsigned k) {
          return dump(json_io::hermite_m(n, p, k, hermite::hermite_M(n, p, k)));
        },
        py::arg("n"), py::arg("p"), py::arg("k"));

  m.def("certificate",
        [](const std::vector<std::string>& coeffs) {
          return dump(json_io::certificate(hermite::nonvanish_certificate(parse_all(coeffs))));
        },
        py::arg("coeffs"));

  m.def("verify_certificate",
        [](const std::string& text) {
          auto c = hermite::verify_certificate(json_io::certificate_from_json(json_io::Json::parse(text)));
          json_io::Json j{{"m0_nondivisible", c.m0_nondivisible},
                          {"mk_divisible", c.mk_divisible},
                          {"eps_half", c.eps_half}};
          return dump(j);
        },
        py::arg("certificate_json"));

  m.def("dirichlet",
        [](const std::string& alpha, std::size_t count) {
          hermite::IntervalOracle oracle;
          if (alpha == "pi") oracle = hermite::pi_interval;
          else if (alpha == "e") oracle = hermite::e_interval;
          else {
            Rational q = parse_rational(alpha);
            oracle = [q](const Rational&) { return Interval::point(q); };
          }
          return dump(json_io::dirichlet(alpha, hermite::cf_convergents(oracle, count)));
        },
        py::arg("alpha"), py::arg("count"));

  m.def("liouville",
        [](unsigned mm, unsigned n) {
          auto [c, holds] = hermite::liouville_approx(mm, n);
          return dump(json_io::liouville(mm, n, c, holds));
        },
        py::arg("m"), py::arg("n"));

  m.def("wat",
        [](const std::string& expr) {
          return dump(json_io::canonical_form(expr, wattenberg::evaluate_expression(expr)));
        },
        py::arg("expr"));

  m.def("run",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line front end; returns (exit_code, stdout, stderr).");
}
