#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zerostat/geometry.hpp"
#include "zerostat/harness.hpp"

namespace zerostat {

/// snake_case JSON view of a report. `workers` is not echoed so reports are
/// identical across pool sizes.
nlohmann::json to_json(const ExperimentConfig& cfg);
nlohmann::json to_json(const ExperimentReport& rep);

void write_report_json(const ExperimentReport& rep, const std::string& path);

/// One row per trial: trial,certified,value[,intercept,n_r...].
void write_per_trial_csv(const ExperimentReport& rep, std::ostream& os);
/// expsum only: trial,r,n,fit rows for plotting the count curves.
void write_curve_csv(const ExperimentReport& rep, std::ostream& os);

/// Polytope from a JSON array of vertices, each an array of [re, im] pairs.
/// The complex dimension is the length of the first vertex.
ComplexPolytope parse_polytope_json(std::string_view text);

}  // namespace zerostat
