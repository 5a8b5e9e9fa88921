#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zerostat {

enum class ExperimentKind { Kac, Kostlan, Trig1D, Trig2D, Trig2DMixed, Crofton, ExpSum, Pvol };

std::string_view to_string(ExperimentKind k);
ExperimentKind experiment_kind_from_string(std::string_view s);

/// How a report's verdict is decided.
///   ZScore:     |mean - predicted| <= z_max * stderr
///   Fit:        |mean - predicted| / predicted <= slack
///   Asymptotic: |mean - predicted| <= asymptotic_tolerance (leading term only)
enum class VerdictRule { ZScore, Fit, Asymptotic, None };
std::string_view to_string(VerdictRule r);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Trig1D;
  int m = 0;                  // kac, kostlan
  std::string spectrum;       // trig1d, trig2d, trig2d_mixed, crofton (kappa curve), expsum
  std::string spectrum2;      // trig2d_mixed second equation
  std::size_t curve_dim = 3;  // crofton without a spectrum: great circle in R^curve_dim
  std::string vertices;       // pvol: JSON array of vertices, each an array of [re, im]
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::vector<double> radii = {5, 10, 15, 20, 25, 30, 35, 40};
  double z_max = 3.0;
  double slack = 0.05;
  double asymptotic_tolerance = 1.0;
  std::size_t angle_samples = 200000;
  unsigned workers = 1;
  bool keep_per_trial = false;

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

struct TrialRecord {
  std::uint64_t index = 0;
  bool certified = false;
  /// Zero count, or the fitted slope for expsum trials.
  double value = 0.0;
  /// expsum: counts at each radius, and the fitted intercept.
  std::vector<std::int64_t> counts;
  double intercept = 0.0;
  std::string note;  // reason for a discard
};

struct ExperimentReport {
  ExperimentConfig config;
  double empirical_mean = 0.0;
  double empirical_stderr = 0.0;
  double predicted = 0.0;
  /// expsum only: prediction under the semiperimeter convention.
  std::optional<double> predicted_semiperimeter;
  double z_score = 0.0;
  std::size_t used_trials = 0;
  std::size_t discarded_trials = 0;
  VerdictRule rule = VerdictRule::ZScore;
  /// Relative residual |mean - predicted| / predicted (both conventions for expsum).
  double residual = 0.0;
  std::optional<double> residual_semiperimeter;
  bool pass = false;
  std::vector<TrialRecord> per_trial;  // populated when config.keep_per_trial
  std::vector<std::string> discard_log;
};

/// Raised when an experiment cannot produce a trustworthy report, e.g. when
/// more than 0.1% of trials fail certification.
class ExperimentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// max |fit - data|
  double residual = 0.0;
};

/// Least-squares line through (radii[i], counts[i]). Needs at least 4 points
/// and nondecreasing counts.
SlopeFit slope_fit(std::span<const double> radii, std::span<const double> counts);

}  // namespace zerostat
