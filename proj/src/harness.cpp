#include "zerostat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "zerostat/ensembles.hpp"
#include "zerostat/geometry.hpp"
#include "zerostat/predictors.hpp"
#include "zerostat/report_io.hpp"
#include "zerostat/spectrum_parse.hpp"
#include "zerostat/zerocount.hpp"

namespace zerostat {

namespace {

constexpr std::pair<ExperimentKind, std::string_view> kKindNames[] = {
    {ExperimentKind::Kac, "kac"},
    {ExperimentKind::Kostlan, "kostlan"},
    {ExperimentKind::Trig1D, "trig1d"},
    {ExperimentKind::Trig2D, "trig2d"},
    {ExperimentKind::Trig2DMixed, "trig2d_mixed"},
    {ExperimentKind::Crofton, "crofton"},
    {ExperimentKind::ExpSum, "expsum"},
    {ExperimentKind::Pvol, "pvol"},
};

}  // namespace

std::string_view to_string(ExperimentKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

ExperimentKind experiment_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  throw std::invalid_argument("unknown experiment kind '" + std::string(s) + "'");
}

std::string_view to_string(VerdictRule r) {
  switch (r) {
    case VerdictRule::ZScore: return "z_score";
    case VerdictRule::Fit: return "fit";
    case VerdictRule::Asymptotic: return "asymptotic";
    case VerdictRule::None: return "none";
  }
  return "none";
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (!(z_max > 0.0)) throw std::invalid_argument("z_max must be positive");
  if (!(slack > 0.0)) throw std::invalid_argument("slack must be positive");
  switch (kind) {
    case ExperimentKind::Kac:
      if (m < 2) throw std::invalid_argument("kac experiment needs m >= 2");
      break;
    case ExperimentKind::Kostlan:
      if (m < 1) throw std::invalid_argument("kostlan experiment needs m >= 1");
      break;
    case ExperimentKind::Trig1D:
    case ExperimentKind::Trig2D:
    case ExperimentKind::ExpSum:
      if (spectrum.empty()) throw std::invalid_argument("experiment needs --spectrum");
      break;
    case ExperimentKind::Trig2DMixed:
      if (spectrum.empty() || spectrum2.empty())
        throw std::invalid_argument("mixed experiment needs two spectra");
      break;
    case ExperimentKind::Crofton:
      if (spectrum.empty() && curve_dim < 2)
        throw std::invalid_argument("great circle needs dimension >= 2");
      break;
    case ExperimentKind::Pvol:
      if (vertices.empty()) throw std::invalid_argument("pvol experiment needs vertices");
      if (angle_samples < 1) throw std::invalid_argument("angle_samples must be positive");
      break;
  }
  if (kind == ExperimentKind::ExpSum) {
    if (radii.size() < 4) throw std::invalid_argument("slope fit needs at least 4 radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (!(radii[i] > 0.0)) throw std::invalid_argument("radii must be positive");
      if (i > 0 && !(radii[i] > radii[i - 1]))
        throw std::invalid_argument("radii must be strictly increasing");
    }
  }
}

SlopeFit slope_fit(std::span<const double> radii, std::span<const double> counts) {
  if (radii.size() != counts.size()) throw std::invalid_argument("radii and counts differ in length");
  if (radii.size() < 4) throw std::invalid_argument("slope fit needs at least 4 radii");
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] < counts[i - 1])
      throw std::invalid_argument("zero counts decrease with the radius");
  const double n = static_cast<double>(radii.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    sx += radii[i];
    sy += counts[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    sxx += (radii[i] - mx) * (radii[i] - mx);
    sxy += (radii[i] - mx) * (counts[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("radii must not all coincide");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < radii.size(); ++i)
    fit.residual = std::max(fit.residual, std::abs(fit.intercept + fit.slope * radii[i] - counts[i]));
  return fit;
}

namespace {

using TrialFn = std::function<TrialRecord(std::uint64_t)>;

// Runs trials on `workers` threads; records are ordered by trial index.
std::vector<TrialRecord> run_trials(std::size_t trials, unsigned workers, const TrialFn& fn) {
  std::vector<TrialRecord> out(trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      try {
        out[i] = fn(i);
      } catch (const std::exception& e) {
        out[i] = TrialRecord{};
        out[i].note = e.what();
      }
      out[i].index = i;
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(trials)));
  if (n == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

TrialRecord count_record(const CountResult& r) {
  TrialRecord rec;
  rec.certified = r.certified;
  rec.value = static_cast<double>(r.count);
  if (!r.certified) rec.note = "count not certified";
  return rec;
}

// Single-trial report for the pseudovolume: the Monte Carlo is in the angles.
ExperimentReport run_pvol(const ExperimentConfig& cfg) {
  const auto poly = parse_polytope_json(cfg.vertices);
  const auto est = pseudovolume_estimate(poly, cfg.angle_samples, cfg.seed);
  ExperimentReport rep;
  rep.config = cfg;
  rep.empirical_mean = est.value;
  rep.empirical_stderr = est.std_error;
  rep.used_trials = 1;
  const auto reference = pseudovolume_reference(poly);
  if (!reference) {
    rep.rule = VerdictRule::None;
    rep.predicted = std::numeric_limits<double>::quiet_NaN();
    rep.pass = true;
    return rep;
  }
  rep.predicted = *reference;
  rep.rule = VerdictRule::ZScore;
  const double diff = est.value - *reference;
  rep.z_score = est.std_error > 0 ? diff / est.std_error
                                  : (std::abs(diff) <= 1e-9 * std::max(1.0, *reference)
                                         ? 0.0
                                         : std::copysign(std::numeric_limits<double>::infinity(), diff));
  rep.residual = *reference != 0 ? std::abs(diff) / std::abs(*reference) : std::abs(diff);
  rep.pass = std::abs(rep.z_score) <= cfg.z_max;
  return rep;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.kind == ExperimentKind::Pvol) return run_pvol(cfg);

  ExperimentReport rep;
  rep.config = cfg;
  TrialFn trial;
  const auto seed = cfg.seed;

  // Each branch owns its parsed inputs through shared captures.
  switch (cfg.kind) {
    case ExperimentKind::Kac: {
      rep.predicted = kac_asymptotic(cfg.m);
      rep.rule = VerdictRule::Asymptotic;
      trial = [m = cfg.m, seed](std::uint64_t i) {
        RngStream rng(seed, i);
        return count_record(real_roots_count(sample_kac(m, rng)));
      };
      break;
    }
    case ExperimentKind::Kostlan: {
      rep.predicted = kostlan_expected(cfg.m);
      trial = [m = cfg.m, seed](std::uint64_t i) {
        RngStream rng(seed, i);
        return count_record(real_roots_count(sample_kostlan(m, rng)));
      };
      break;
    }
    case ExperimentKind::Trig1D: {
      auto s = parse_spectrum_1d(cfg.spectrum);
      rep.predicted = trig_expected(s);
      trial = [s, seed](std::uint64_t i) {
        RngStream rng(seed, i);
        return count_record(circle_zeros_count(sample_trig(s, rng)));
      };
      break;
    }
    case ExperimentKind::Trig2D:
    case ExperimentKind::Trig2DMixed: {
      auto s1 = parse_spectrum_nd(cfg.spectrum);
      auto s2 = cfg.kind == ExperimentKind::Trig2D ? s1 : parse_spectrum_nd(cfg.spectrum2);
      if (s1.dim() != 2 || s2.dim() != 2)
        throw std::invalid_argument("torus experiments need dimension 2 spectra");
      rep.predicted = cfg.kind == ExperimentKind::Trig2D ? nd_expected(s1) : nd_expected_mixed(s1, s2);
      std::vector<SpectrumND> system{s1, s2};
      trial = [system, seed](std::uint64_t i) {
        RngStream rng(seed, i);
        const auto fs = sample_trig_system(system, rng);
        return count_record(torus_common_zeros_count(fs[0], fs[1]));
      };
      break;
    }
    case ExperimentKind::Crofton: {
      auto curve = cfg.spectrum.empty() ? great_circle(cfg.curve_dim)
                                        : kappa_curve(parse_spectrum_1d(cfg.spectrum));
      rep.predicted = curve.length() / std::numbers::pi;
      trial = [curve, seed](std::uint64_t i) {
        RngStream rng(seed, i);
        Eigen::VectorXd xi(static_cast<Eigen::Index>(curve.dim()));
        for (Eigen::Index k = 0; k < xi.size(); ++k) xi[k] = rng.normal();
        return count_record(hyperplane_curve_intersections(curve, xi));
      };
      break;
    }
    case ExperimentKind::ExpSum: {
      auto s = parse_complex_spectrum(cfg.spectrum);
      rep.predicted = expsum_slope(s, SlopeConvention::Perimeter);
      rep.predicted_semiperimeter = expsum_slope(s, SlopeConvention::Semiperimeter);
      rep.rule = VerdictRule::Fit;
      trial = [s, radii = cfg.radii, seed](std::uint64_t i) {
        RngStream rng(seed, i);
        const auto f = sample_expsum(s, rng);
        TrialRecord rec;
        rec.certified = true;
        std::vector<double> counts;
        for (double r : radii) {
          const auto c = disk_zeros_count(f, r);
          if (!c.certified) {
            rec.certified = false;
            rec.note = "disk count not certified at r = " + std::to_string(r);
          }
          rec.counts.push_back(c.count);
          counts.push_back(static_cast<double>(c.count));
        }
        if (!rec.certified) return rec;
        const auto fit = slope_fit(radii, counts);
        rec.value = fit.slope;
        rec.intercept = fit.intercept;
        return rec;
      };
      break;
    }
    case ExperimentKind::Pvol:
      break;
  }

  auto records = run_trials(cfg.trials, cfg.workers, trial);

  // Reduction in trial order.
  double sum = 0.0;
  for (const auto& r : records) {
    if (r.certified) {
      sum += r.value;
      ++rep.used_trials;
    } else {
      ++rep.discarded_trials;
      rep.discard_log.push_back("trial " + std::to_string(r.index) + ": " + r.note);
    }
  }
  if (rep.discarded_trials * 1000 > cfg.trials) {
    std::ostringstream os;
    os << to_string(cfg.kind) << ": " << rep.discarded_trials << " of " << cfg.trials
       << " trials failed certification (cap 0.1%)";
    for (std::size_t i = 0; i < std::min<std::size_t>(5, rep.discard_log.size()); ++i)
      os << "\n  " << rep.discard_log[i];
    throw ExperimentError(os.str());
  }
  const double n = static_cast<double>(rep.used_trials);
  rep.empirical_mean = sum / n;
  double ss = 0.0;
  for (const auto& r : records)
    if (r.certified) ss += (r.value - rep.empirical_mean) * (r.value - rep.empirical_mean);
  rep.empirical_stderr = rep.used_trials > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;

  const double diff = rep.empirical_mean - rep.predicted;
  if (rep.empirical_stderr > 0.0) {
    rep.z_score = diff / rep.empirical_stderr;
  } else {
    rep.z_score = std::abs(diff) <= 1e-9 * std::max(1.0, std::abs(rep.predicted))
                      ? 0.0
                      : std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
  rep.residual = rep.predicted != 0.0 ? std::abs(diff) / std::abs(rep.predicted) : std::abs(diff);
  if (rep.predicted_semiperimeter)
    rep.residual_semiperimeter =
        std::abs(rep.empirical_mean - *rep.predicted_semiperimeter) / *rep.predicted_semiperimeter;

  switch (rep.rule) {
    case VerdictRule::ZScore: rep.pass = std::abs(rep.z_score) <= cfg.z_max; break;
    case VerdictRule::Fit: rep.pass = rep.residual <= cfg.slack; break;
    case VerdictRule::Asymptotic: rep.pass = std::abs(diff) <= cfg.asymptotic_tolerance; break;
    case VerdictRule::None: rep.pass = true; break;
  }
  if (cfg.keep_per_trial) rep.per_trial = std::move(records);
  return rep;
}

}  // namespace zerostat
