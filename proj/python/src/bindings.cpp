#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zerostat/geometry.hpp"
#include "zerostat/harness.hpp"
#include "zerostat/predictors.hpp"
#include "zerostat/report_io.hpp"
#include "zerostat/spectrum_parse.hpp"
#include "zerostat/zerocount.hpp"

namespace py = pybind11;
using namespace zerostat;

namespace {

py::dict count_dict(const CountResult& r) {
  py::dict d;
  d["count"] = r.count;
  d["certified"] = r.certified;
  d["min_abs"] = r.min_abs;
  d["depth"] = r.depth;
  d["locations"] = r.locations;
  return d;
}

ComplexPolytope polytope(const std::vector<std::vector<Complex>>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  return ComplexPolytope(vertices.front().size(), vertices);
}

}  // namespace

PYBIND11_MODULE(_zerostat, m) {
  m.doc() = "Zero counts of random polynomials, trigonometric polynomials and exponential sums";

  py::register_exception<ParseError>(m, "SpectrumParseError", PyExc_ValueError);
  py::register_exception<ExperimentError>(m, "ExperimentError", PyExc_RuntimeError);

  // Spectra are passed in the CLI grammar, e.g. "-3..3" or "(-1,-1)..(1,1)".
  m.def("trig_expected", [](const std::string& s) { return trig_expected(parse_spectrum_1d(s)); },
        py::arg("spectrum"));
  m.def("trig_prob", [](const std::string& s) { return trig_prob(parse_spectrum_1d(s)); },
        py::arg("spectrum"));
  m.def("nd_expected", [](const std::string& s) { return nd_expected(parse_spectrum_nd(s)); },
        py::arg("spectrum"));
  m.def("nd_prob", [](const std::string& s) { return nd_prob(parse_spectrum_nd(s)); },
        py::arg("spectrum"));
  m.def(
      "nd_expected_mixed",
      [](const std::string& a, const std::string& b) {
        return nd_expected_mixed(parse_spectrum_nd(a), parse_spectrum_nd(b));
      },
      py::arg("spectrum"), py::arg("spectrum2"));
  m.def("kac_asymptotic", &kac_asymptotic, py::arg("m"));
  m.def("kostlan_expected", &kostlan_expected, py::arg("m"));
  m.def(
      "expsum_slope",
      [](const std::string& s, const std::string& convention) {
        return expsum_slope(parse_complex_spectrum(s), slope_convention_from_string(convention));
      },
      py::arg("spectrum"), py::arg("convention") = "perimeter");
  m.def("kappa_length", [](const std::string& s) { return kappa_length(parse_spectrum_1d(s)); },
        py::arg("spectrum"));

  m.def(
      "real_roots_count",
      [](const std::vector<double>& coeffs) { return count_dict(real_roots_count(RealPolynomial{coeffs})); },
      py::arg("coeffs"), "Distinct real roots; coefficients in ascending powers.");
  m.def(
      "circle_zeros_count",
      [](const std::string& s, const std::vector<double>& coords) {
        return count_dict(circle_zeros_count(TrigPolynomial::from_coordinates(parse_spectrum_1d(s), coords)));
      },
      py::arg("spectrum"), py::arg("coords"));
  m.def(
      "disk_zeros_count",
      [](const std::string& s, const std::vector<Complex>& coeffs, double r, Complex center) {
        return count_dict(disk_zeros_count(ExpSum(parse_complex_spectrum(s), coeffs), r, center));
      },
      py::arg("spectrum"), py::arg("coeffs"), py::arg("radius"), py::arg("center") = Complex{0.0, 0.0});

  m.def(
      "slope_fit",
      [](const std::vector<double>& radii, const std::vector<double>& counts) {
        const auto f = slope_fit(radii, counts);
        return py::make_tuple(f.slope, f.intercept, f.residual);
      },
      py::arg("radii"), py::arg("counts"));

  m.def(
      "pseudovolume",
      [](const std::vector<std::vector<Complex>>& vertices, std::size_t angle_samples, std::uint64_t seed) {
        const auto est = pseudovolume_estimate(polytope(vertices), angle_samples, seed);
        return py::make_tuple(est.value, est.std_error);
      },
      py::arg("vertices"), py::arg("angle_samples") = kDefaultAngleSamples, py::arg("seed") = 0,
      "Returns (pvol, standard error). Each vertex is a list of n complex numbers.");

  m.def(
      "_run_experiment_json",
      [](const std::string& kind, std::size_t trials, std::uint64_t seed, const std::string& spectrum,
         const std::string& spectrum2, int deg, std::size_t dim, const std::vector<double>& radii,
         double z_max, double slack, unsigned workers, bool per_trial) {
        ExperimentConfig cfg;
        cfg.kind = experiment_kind_from_string(kind);
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.spectrum = spectrum;
        cfg.spectrum2 = spectrum2;
        cfg.m = deg;
        cfg.curve_dim = dim;
        if (!radii.empty()) cfg.radii = radii;
        cfg.z_max = z_max;
        cfg.slack = slack;
        cfg.workers = workers;
        cfg.keep_per_trial = per_trial;
        ExperimentReport rep;
        {
          py::gil_scoped_release release;
          rep = run_experiment(cfg);
        }
        return to_json(rep).dump();
      },
      py::arg("kind"), py::arg("trials"), py::arg("seed"), py::arg("spectrum"), py::arg("spectrum2"),
      py::arg("m"), py::arg("dim"), py::arg("radii"), py::arg("z_max"), py::arg("slack"),
      py::arg("workers"), py::arg("per_trial"));
}
