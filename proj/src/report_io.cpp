#include "zerostat/report_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace zerostat {

namespace {

// NaN and infinities have no JSON literal; they are written as null.
nlohmann::json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

}  // namespace

nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(cfg.kind));
  switch (cfg.kind) {
    case ExperimentKind::Kac:
    case ExperimentKind::Kostlan:
      j["m"] = cfg.m;
      break;
    case ExperimentKind::Trig2DMixed:
      j["spectrum"] = cfg.spectrum;
      j["spectrum2"] = cfg.spectrum2;
      break;
    case ExperimentKind::Crofton:
      if (cfg.spectrum.empty())
        j["curve_dim"] = cfg.curve_dim;
      else
        j["spectrum"] = cfg.spectrum;
      break;
    case ExperimentKind::Pvol:
      j["vertices"] = nlohmann::json::parse(cfg.vertices);
      j["angle_samples"] = cfg.angle_samples;
      break;
    default:
      j["spectrum"] = cfg.spectrum;
  }
  if (cfg.kind == ExperimentKind::ExpSum) {
    j["radii"] = cfg.radii;
    j["slack"] = cfg.slack;
  } else if (cfg.kind == ExperimentKind::Kac) {
    j["asymptotic_tolerance"] = cfg.asymptotic_tolerance;
  } else {
    j["z_max"] = cfg.z_max;
  }
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  return j;
}

nlohmann::json to_json(const ExperimentReport& rep) {
  nlohmann::json j;
  j["config"] = to_json(rep.config);
  j["empirical_mean"] = number(rep.empirical_mean);
  j["empirical_stderr"] = number(rep.empirical_stderr);
  if (rep.predicted_semiperimeter) {
    j["predicted"] = {{"perimeter", number(rep.predicted)},
                      {"semiperimeter", number(*rep.predicted_semiperimeter)}};
    j["residual"] = {{"perimeter", number(rep.residual)},
                     {"semiperimeter", number(rep.residual_semiperimeter.value_or(NAN))}};
  } else {
    j["predicted"] = number(rep.predicted);
    j["residual"] = number(rep.residual);
  }
  j["z_score"] = number(rep.z_score);
  j["used_trials"] = rep.used_trials;
  j["discarded_trials"] = rep.discarded_trials;
  j["verdict_rule"] = std::string(to_string(rep.rule));
  j["verdict"] = rep.pass ? "pass" : "fail";
  if (!rep.discard_log.empty()) j["discard_log"] = rep.discard_log;
  if (!rep.per_trial.empty()) {
    auto& arr = j["per_trial"] = nlohmann::json::array();
    for (const auto& t : rep.per_trial) {
      nlohmann::json r{{"trial", t.index}, {"certified", t.certified}, {"value", t.value}};
      if (!t.counts.empty()) {
        r["counts"] = t.counts;
        r["intercept"] = t.intercept;
      }
      arr.push_back(std::move(r));
    }
  }
  return j;
}

void write_report_json(const ExperimentReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_json(rep).dump(2) << '\n';
}

void write_per_trial_csv(const ExperimentReport& rep, std::ostream& os) {
  const bool expsum = rep.config.kind == ExperimentKind::ExpSum;
  os << "trial,certified,value";
  if (expsum) {
    os << ",intercept";
    for (double r : rep.config.radii) os << ",n_" << r;
  }
  os << '\n';
  os.precision(17);
  for (const auto& t : rep.per_trial) {
    os << t.index << ',' << (t.certified ? 1 : 0) << ',' << t.value;
    if (expsum) {
      os << ',' << t.intercept;
      for (auto c : t.counts) os << ',' << c;
    }
    os << '\n';
  }
}

void write_curve_csv(const ExperimentReport& rep, std::ostream& os) {
  if (rep.config.kind != ExperimentKind::ExpSum)
    throw std::invalid_argument("count curves exist for expsum experiments only");
  os << "trial,r,n,fit\n";
  os.precision(17);
  for (const auto& t : rep.per_trial) {
    if (!t.certified) continue;
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
      const double r = rep.config.radii[i];
      os << t.index << ',' << r << ',' << t.counts[i] << ',' << t.intercept + t.value * r << '\n';
    }
  }
}

ComplexPolytope parse_polytope_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed vertex JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw std::invalid_argument("vertex JSON must be a nonempty array");
  std::vector<std::vector<Complex>> verts;
  for (const auto& v : j) {
    if (!v.is_array() || v.empty())
      throw std::invalid_argument("each vertex must be an array of [re, im] pairs");
    std::vector<Complex> z;
    for (const auto& c : v) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
        throw std::invalid_argument("each coordinate must be a [re, im] pair of numbers");
      z.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    verts.push_back(std::move(z));
  }
  const auto n = verts.front().size();
  return ComplexPolytope(n, std::move(verts));
}

}  // namespace zerostat
