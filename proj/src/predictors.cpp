#include "zerostat/predictors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zerostat {

namespace {

double mean_square(const Spectrum1D& s) {
  double sum = 0.0;
  for (auto k : s.points()) sum += static_cast<double>(k) * static_cast<double>(k);
  return sum / static_cast<double>(s.size());
}

void require_symmetric(const Spectrum1D& s) {
  if (!is_centrally_symmetric(s))
    throw std::invalid_argument("prediction needs a centrally symmetric spectrum");
}

void require_symmetric(const SpectrumND& s) {
  if (!is_centrally_symmetric(s))
    throw std::invalid_argument("prediction needs a centrally symmetric spectrum");
}

}  // namespace

std::string_view to_string(SlopeConvention c) {
  return c == SlopeConvention::Perimeter ? "perimeter" : "semiperimeter";
}

SlopeConvention slope_convention_from_string(std::string_view s) {
  if (s == "perimeter") return SlopeConvention::Perimeter;
  if (s == "semiperimeter") return SlopeConvention::Semiperimeter;
  throw std::invalid_argument("unknown slope convention '" + std::string(s) + "'");
}

double kac_asymptotic(double m) {
  if (!(m >= 2.0)) throw std::invalid_argument("Kac asymptote needs m >= 2");
  return 2.0 / std::numbers::pi * std::log(m);
}

double kostlan_expected(int m) {
  if (m < 1) throw std::invalid_argument("degree must be at least 1");
  return std::sqrt(static_cast<double>(m));
}

double trig_expected(const Spectrum1D& s) {
  require_symmetric(s);
  return 2.0 * std::sqrt(mean_square(s));
}

double trig_prob(const Spectrum1D& s) {
  require_symmetric(s);
  const auto d = degree(s);
  if (d == 0) throw std::invalid_argument("root probability undefined for degree 0");
  // Normalize each point first: (k p)/(k d) rounds to the same double as p/d,
  // so the result is bit-identical under integer rescaling.
  const double dd = static_cast<double>(d);
  double sum = 0.0;
  for (auto k : s.points()) {
    const double x = static_cast<double>(k) / dd;
    sum += x * x;
  }
  return std::sqrt(sum / static_cast<double>(s.size()));
}

double nd_expected(const SpectrumND& s) {
  require_symmetric(s);
  return std::tgamma(static_cast<double>(s.dim()) + 1.0) * ellipsoid_volume(newton_ellipsoid(s));
}

double nd_prob(const SpectrumND& s) {
  require_symmetric(s);
  const double hull = hull_volume(s);
  if (hull <= 0.0) throw std::invalid_argument("convex hull of the spectrum is degenerate");
  return ellipsoid_volume(newton_ellipsoid(s)) / hull;
}

double nd_expected_mixed(const SpectrumND& s1, const SpectrumND& s2) {
  if (s1.dim() != 2 || s2.dim() != 2)
    throw std::invalid_argument("mixed prediction implemented for dimension 2");
  require_symmetric(s1);
  require_symmetric(s2);
  return 2.0 * mixed_area(newton_ellipsoid(s1), newton_ellipsoid(s2));
}

double expsum_slope(const ComplexSpectrum& s, SlopeConvention convention) {
  if (s.size() < 2) throw std::invalid_argument("zero density needs at least 2 frequencies");
  std::vector<Complex> conj;
  for (const auto& l : s.points()) conj.push_back(std::conj(l));
  const double perimeter = polygon_perimeter(convex_hull_2d(ComplexSpectrum(std::move(conj))));
  const double measure = convention == SlopeConvention::Perimeter ? perimeter : perimeter / 2.0;
  return measure / (2.0 * std::numbers::pi);
}

double pvol_leading_coefficient(const ComplexPolytope& p, std::size_t angle_samples,
                                std::uint64_t seed) {
  const double pv = pseudovolume(p, angle_samples, seed);
  return pv / std::pow(2.0 * std::numbers::pi, static_cast<double>(p.n()));
}

}  // namespace zerostat
