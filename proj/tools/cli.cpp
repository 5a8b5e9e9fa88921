#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zerostat/geometry.hpp"
#include "zerostat/harness.hpp"
#include "zerostat/predictors.hpp"
#include "zerostat/report_io.hpp"
#include "zerostat/spectrum_parse.hpp"
#include "zerostat/zerocount.hpp"

namespace zerostat::cli {

namespace {

using nlohmann::json;

// 6 significant digits for the terminal, always with a decimal point.
std::string fmt(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

// Rows printed as an aligned two-column table; the same values go to --out.
class Table {
 public:
  void add(const std::string& key, double v) {
    rows_.emplace_back(key, fmt(v));
    data_[key] = std::isfinite(v) ? json(v) : json(nullptr);
  }
  void add_int(const std::string& key, std::int64_t v) {
    rows_.emplace_back(key, std::to_string(v));
    data_[key] = v;
  }
  void add_text(const std::string& key, const std::string& v) {
    rows_.emplace_back(key, v);
    data_[key] = v;
  }
  void add_bool(const std::string& key, bool v) {
    rows_.emplace_back(key, v ? "yes" : "no");
    data_[key] = v;
  }
  json& data() { return data_; }

  void print(std::ostream& os) const {
    std::size_t w = 0;
    for (const auto& r : rows_) w = std::max(w, r.first.size());
    for (const auto& [k, v] : rows_) os << std::left << std::setw(static_cast<int>(w + 2)) << k << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  json data_ = json::object();
};

void write_json(const json& j, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << j.dump(2) << '\n';
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// "a..b:step" or a plain comma list.
std::vector<double> parse_radii(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return parse_real_list(text);
  const auto colon = text.find(':', dots);
  const double lo = parse_real_list(text.substr(0, dots)).at(0);
  const double hi = parse_real_list(text.substr(dots + 2, colon == std::string::npos ? std::string::npos
                                                                                     : colon - dots - 2))
                        .at(0);
  const double step = colon == std::string::npos ? 1.0 : parse_real_list(text.substr(colon + 1)).at(0);
  require(step > 0 && hi >= lo, "radius range needs lo <= hi and a positive step");
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double r = lo + k * step;
    if (r > hi + 1e-9 * step) break;
    out.push_back(r);
  }
  return out;
}

// Inline JSON when the text starts with '[', otherwise a path to a JSON file.
std::string read_vertices(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') return text;
  std::ifstream f(text);
  if (!f) throw std::invalid_argument("cannot read vertex file '" + text + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TrigPolynomialND trig_nd_from_coordinates(const SpectrumND& s, const std::vector<double>& coords) {
  require(is_centrally_symmetric(s), "trigonometric polynomial needs a centrally symmetric spectrum");
  require(coords.size() == s.size(), "need one coordinate per spectrum point (" +
                                         std::to_string(s.size()) + ")");
  const bool has_zero = s.contains(SpectrumND::Point(s.dim(), 0));
  std::size_t k = 0;
  const double c0 = has_zero ? coords[k++] : 0.0;
  std::vector<double> a, b;
  while (k < coords.size()) {
    a.push_back(coords[k++]);
    b.push_back(coords[k++]);
  }
  return TrigPolynomialND(s, c0, std::move(a), std::move(b));
}

void add_count(Table& t, const CountResult& r) {
  t.add_int("count", r.count);
  t.add_bool("certified", r.certified);
  t.add("min_abs", r.min_abs);
  t.add_int("depth", r.depth);
}

struct Options {
  std::string kind;
  std::string spectrum, spectrum2;
  std::string coeffs, coeffs2;
  std::string convention = "perimeter";
  std::string center = "0";
  std::string radii = "5,10,15,20,25,30,35,40";
  std::string vertices;
  std::string out, per_trial, emit_curve;
  int m = 0;
  std::size_t dim = 3;
  double radius = 0.0;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double z_max = 3.0;
  double slack = 0.05;
  double tolerance = 1.0;
  std::size_t angle_samples = kDefaultAngleSamples;
  unsigned workers = 1;
  int nodes = kDefaultQuadratureNodes;
};

int do_predict(const Options& o, std::ostream& out) {
  Table t;
  t.add_text("kind", o.kind);
  if (o.kind == "trig1d") {
    const auto s = parse_spectrum_1d(o.spectrum);
    t.add("expected", trig_expected(s));
    t.add("probability", trig_prob(s));
    t.add_int("degree", degree(s));
  } else if (o.kind == "trig2d") {
    const auto s = parse_spectrum_nd(o.spectrum);
    t.add("expected", nd_expected(s));
    if (hull_volume(s) > 0.0) {
      t.add("probability", nd_prob(s));
      if (s.dim() == 2) t.add("kushnirenko_bound", 2.0 * hull_volume(s));
    }
  } else if (o.kind == "trig2d_mixed") {
    const auto s1 = parse_spectrum_nd(o.spectrum), s2 = parse_spectrum_nd(o.spectrum2);
    t.add("expected", nd_expected_mixed(s1, s2));
    t.add("kushnirenko_bound", kushnirenko_bound(s1, s2));
  } else if (o.kind == "kac") {
    t.add("leading_term", kac_asymptotic(o.m));
  } else if (o.kind == "kostlan") {
    t.add("expected", kostlan_expected(o.m));
  } else if (o.kind == "crofton") {
    const auto curve = o.spectrum.empty() ? great_circle(o.dim) : kappa_curve(parse_spectrum_1d(o.spectrum));
    t.add("length", curve.length());
    t.add("expected", curve.length() / std::numbers::pi);
  } else if (o.kind == "expsum") {
    const auto s = parse_complex_spectrum(o.spectrum);
    const auto conv = slope_convention_from_string(o.convention);
    t.add_text("convention", std::string(to_string(conv)));
    t.add("slope", expsum_slope(s, conv));
    t.add("slope_perimeter", expsum_slope(s, SlopeConvention::Perimeter));
    t.add("slope_semiperimeter", expsum_slope(s, SlopeConvention::Semiperimeter));
  } else {
    throw std::invalid_argument("unknown predict kind '" + o.kind + "'");
  }
  t.print(out);
  if (!o.out.empty()) write_json(t.data(), o.out);
  return 0;
}

int do_count(const Options& o, std::ostream& out) {
  Table t;
  t.add_text("kind", o.kind);
  if (o.kind == "real") {
    add_count(t, real_roots_count(RealPolynomial{parse_real_list(o.coeffs)}));
  } else if (o.kind == "trig1d") {
    const auto s = parse_spectrum_1d(o.spectrum);
    const auto c = parse_real_list(o.coeffs);
    add_count(t, circle_zeros_count(TrigPolynomial::from_coordinates(s, c)));
  } else if (o.kind == "trig2d") {
    const auto s1 = parse_spectrum_nd(o.spectrum);
    const auto s2 = o.spectrum2.empty() ? s1 : parse_spectrum_nd(o.spectrum2);
    const auto f = trig_nd_from_coordinates(s1, parse_real_list(o.coeffs));
    const auto g = trig_nd_from_coordinates(s2, parse_real_list(o.coeffs2));
    add_count(t, torus_common_zeros_count(f, g));
  } else if (o.kind == "expsum") {
    require(o.radius > 0.0, "--radius must be positive");
    const auto center = parse_complex_list(o.center);
    require(center.size() == 1, "--center takes a single complex number");
    const ExpSum f(parse_complex_spectrum(o.spectrum), parse_complex_list(o.coeffs));
    const auto r = disk_zeros_count(f, o.radius, center[0]);
    add_count(t, r);
    if (!r.locations.empty()) t.add("radius_used", r.locations.front());
  } else {
    throw std::invalid_argument("unknown count kind '" + o.kind + "'");
  }
  t.print(out);
  if (!o.out.empty()) write_json(t.data(), o.out);
  return 0;
}

json polygon_json(const Polygon2D& p) {
  json v = json::array();
  for (const auto& x : p.vertices) v.push_back({x.x(), x.y()});
  return v;
}

int do_geom(const Options& o, std::ostream& out) {
  Table t;
  t.add_text("kind", o.kind);
  if (o.kind == "hull") {
    const bool nd = o.spectrum.find('(') != std::string::npos;
    const auto poly = nd ? hull_polygon(parse_spectrum_nd(o.spectrum))
                         : convex_hull_2d(parse_complex_spectrum(o.spectrum));
    t.add_int("vertices", static_cast<std::int64_t>(poly.vertices.size()));
    t.add("perimeter", polygon_perimeter(poly));
    t.add("area", polygon_area(poly));
    t.data()["polygon"] = polygon_json(poly);
  } else if (o.kind == "ellipsoid") {
    const auto s = parse_spectrum_nd(o.spectrum);
    const auto e = newton_ellipsoid(s);
    const auto& mat = e.form();
    for (Eigen::Index i = 0; i < mat.rows(); ++i)
      for (Eigen::Index j = i; j < mat.cols(); ++j)
        t.add("m" + std::to_string(i + 1) + std::to_string(j + 1), mat(i, j));
    t.add("volume", ellipsoid_volume(e));
    t.add_bool("singular", e.is_singular());
  } else if (o.kind == "mixed") {
    const auto s1 = parse_spectrum_nd(o.spectrum), s2 = parse_spectrum_nd(o.spectrum2);
    t.add("mixed_area_ellipsoids", mixed_area(newton_ellipsoid(s1), newton_ellipsoid(s2), o.nodes));
    t.add("mixed_area_hulls", polygon_mixed_area(hull_polygon(s1), hull_polygon(s2)));
  } else if (o.kind == "kappa") {
    const auto s = parse_spectrum_1d(o.spectrum);
    t.add("length", kappa_length(s, o.nodes));
    t.add("closed_form", std::numbers::pi * trig_expected(s));
  } else {
    throw std::invalid_argument("unknown geom kind '" + o.kind + "'");
  }
  t.print(out);
  if (!o.out.empty()) write_json(t.data(), o.out);
  return 0;
}

int do_experiment(const Options& o, std::ostream& out) {
  ExperimentConfig cfg;
  cfg.kind = experiment_kind_from_string(o.kind);
  cfg.m = o.m;
  cfg.spectrum = o.spectrum;
  cfg.spectrum2 = o.spectrum2;
  cfg.curve_dim = o.dim;
  if (!o.vertices.empty()) cfg.vertices = read_vertices(o.vertices);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.radii = parse_radii(o.radii);
  cfg.z_max = o.z_max;
  cfg.slack = o.slack;
  cfg.asymptotic_tolerance = o.tolerance;
  cfg.angle_samples = o.angle_samples;
  cfg.workers = o.workers;
  cfg.keep_per_trial = !o.per_trial.empty() || !o.emit_curve.empty();

  const auto rep = run_experiment(cfg);
  Table t;
  t.add_text("kind", o.kind);
  t.add_int("trials", static_cast<std::int64_t>(cfg.trials));
  t.add_int("used_trials", static_cast<std::int64_t>(rep.used_trials));
  t.add_int("discarded_trials", static_cast<std::int64_t>(rep.discarded_trials));
  t.add("empirical_mean", rep.empirical_mean);
  t.add("empirical_stderr", rep.empirical_stderr);
  if (rep.predicted_semiperimeter) {
    t.add("predicted_perimeter", rep.predicted);
    t.add("predicted_semiperimeter", *rep.predicted_semiperimeter);
    t.add("residual_perimeter", rep.residual);
    t.add("residual_semiperimeter", *rep.residual_semiperimeter);
  } else {
    t.add("predicted", rep.predicted);
    t.add("residual", rep.residual);
  }
  t.add("z_score", rep.z_score);
  t.add_text("verdict_rule", std::string(to_string(rep.rule)));
  t.add_text("verdict", rep.pass ? "pass" : "fail");
  t.print(out);

  if (!o.out.empty()) write_report_json(rep, o.out);
  if (!o.per_trial.empty()) {
    std::ofstream f(o.per_trial);
    if (!f) throw std::runtime_error("cannot open '" + o.per_trial + "' for writing");
    write_per_trial_csv(rep, f);
  }
  if (!o.emit_curve.empty()) {
    std::ofstream f(o.emit_curve);
    if (!f) throw std::runtime_error("cannot open '" + o.emit_curve + "' for writing");
    write_curve_csv(rep, f);
  }
  return rep.pass ? 0 : 1;
}

int do_pvol(const Options& o, std::ostream& out) {
  const auto poly = parse_polytope_json(read_vertices(o.vertices));
  const auto est = pseudovolume_estimate(poly, o.angle_samples, o.seed);
  Table t;
  t.add_int("n", static_cast<std::int64_t>(poly.n()));
  t.add_int("faces", static_cast<std::int64_t>(est.faces.size()));
  t.add("pvol", est.value);
  t.add("pvol_stderr", est.std_error);
  t.add("leading_coefficient", est.value / std::pow(2.0 * std::numbers::pi, static_cast<double>(poly.n())));
  if (const auto ref = pseudovolume_reference(poly)) t.add("reference", *ref);
  t.print(out);
  auto faces = json::array();
  for (const auto& f : est.faces) {
    faces.push_back({{"vertex_indices", f.vertex_indices},
                     {"volume", f.volume},
                     {"angle", f.angle},
                     {"angle_std_error", f.angle_std_error},
                     {"exact_angle", f.exact_angle},
                     {"cosine", f.cosine}});
    out << "  face";
    for (auto i : f.vertex_indices) out << ' ' << i;
    out << ": volume " << fmt(f.volume) << ", angle " << fmt(f.angle) << ", cosine " << fmt(f.cosine)
        << '\n';
  }
  t.data()["face_list"] = faces;
  if (!o.out.empty()) write_json(t.data(), o.out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero counts of random polynomials, trigonometric polynomials and exponential sums"};
  app.name("zerostat");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  Options o;

  auto* predict = app.add_subcommand("predict", "Closed-form predictions");
  predict->add_option("kind", o.kind, "trig1d | trig2d | trig2d_mixed | kac | kostlan | crofton | expsum")
      ->required();
  predict->add_option("--spectrum", o.spectrum, "Spectrum");
  predict->add_option("--spectrum2", o.spectrum2, "Second spectrum (trig2d_mixed)");
  predict->add_option("--m", o.m, "Degree (kac, kostlan)");
  predict->add_option("--dim", o.dim, "Ambient dimension of the great circle (crofton without --spectrum)");
  predict->add_option("--convention", o.convention, "perimeter | semiperimeter (expsum)");
  predict->add_option("--out", o.out, "Write JSON to this path");

  auto* count = app.add_subcommand("count", "Count zeros of one given function");
  count->add_option("kind", o.kind, "real | trig1d | trig2d | expsum")->required();
  count->add_option("--spectrum", o.spectrum, "Spectrum");
  count->add_option("--spectrum2", o.spectrum2, "Spectrum of the second equation (trig2d; default: --spectrum)");
  count->add_option("--coeffs", o.coeffs,
                    "Coefficients: ascending powers (real); orthonormal coordinates c0, then "
                    "(alpha, beta) per positive frequency (trig); one complex per frequency (expsum)");
  count->add_option("--coeffs2", o.coeffs2, "Coordinates of the second equation (trig2d)");
  count->add_option("--radius", o.radius, "Disk radius (expsum)");
  count->add_option("--center", o.center, "Disk center (expsum)");
  count->add_option("--out", o.out, "Write JSON to this path");

  auto* geom = app.add_subcommand("geom", "Newton polygons, ellipsoids and curve lengths");
  geom->add_option("kind", o.kind, "hull | ellipsoid | mixed | kappa")->required();
  geom->add_option("--spectrum", o.spectrum, "Spectrum");
  geom->add_option("--spectrum2", o.spectrum2, "Second spectrum (mixed)");
  geom->add_option("--nodes", o.nodes, "Quadrature nodes");
  geom->add_option("--out", o.out, "Write JSON to this path");

  auto* exp = app.add_subcommand("experiment", "Seeded Monte Carlo experiment against its prediction");
  exp->add_option("kind", o.kind, "kac | kostlan | trig1d | trig2d | trig2d_mixed | crofton | expsum | pvol")
      ->required();
  exp->add_option("--spectrum", o.spectrum, "Spectrum");
  exp->add_option("--spectrum2", o.spectrum2, "Second spectrum (trig2d_mixed)");
  exp->add_option("--m", o.m, "Degree (kac, kostlan)");
  exp->add_option("--dim", o.dim, "Great circle dimension (crofton without --spectrum)");
  exp->add_option("--vertices", o.vertices, "Polytope vertices, inline JSON or file (pvol)");
  exp->add_option("--trials", o.trials, "Number of trials");
  auto* seed_opt = exp->add_option("--seed", o.seed, "RNG seed");
  exp->add_option("--radii", o.radii, "Radii: comma list or lo..hi:step (expsum)");
  exp->add_option("--z-max", o.z_max, "Verdict threshold in standard errors");
  exp->add_option("--slack", o.slack, "Relative slack for slope fits");
  exp->add_option("--tolerance", o.tolerance, "Absolute band around the leading term (kac)");
  exp->add_option("--angle-samples", o.angle_samples, "Monte Carlo samples per exterior angle (pvol)");
  exp->add_option("--workers", o.workers, "Worker threads; results do not depend on it");
  exp->add_option("--out", o.out, "Write the JSON report to this path");
  exp->add_option("--per-trial", o.per_trial, "Write one CSV row per trial to this path");
  exp->add_option("--emit-curve", o.emit_curve, "Write (trial, r, n, fit) CSV to this path (expsum)");

  auto* pv = app.add_subcommand("pvol", "Pseudovolume of a polytope in C^n, n <= 2");
  pv->add_option("--vertices", o.vertices, "Vertices: JSON array of [[re, im], ...], inline or file")
      ->required();
  pv->add_option("--angle-samples", o.angle_samples, "Monte Carlo samples per exterior angle");
  auto* pv_seed = pv->add_option("--seed", o.seed, "RNG seed");
  pv->add_option("--out", o.out, "Write JSON to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*predict) return do_predict(o, out);
    if (*count) return do_count(o, out);
    if (*geom) return do_geom(o, out);
    if (*exp) {
      if (seed_opt->count() == 0) err << "note: no --seed given, using seed 0\n";
      return do_experiment(o, out);
    }
    if (*pv) {
      if (pv_seed->count() == 0) err << "note: no --seed given, using seed 0\n";
      return do_pvol(o, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace zerostat::cli
