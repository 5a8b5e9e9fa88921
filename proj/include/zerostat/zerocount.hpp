#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zerostat/ensembles.hpp"
#include "zerostat/geometry.hpp"
#include "zerostat/spectra.hpp"

namespace zerostat {

/// Outcome of an empirical zero count. `certified` means two independent
/// methods or resolutions agreed; uncertified counts must not enter means.
struct CountResult {
  std::int64_t count = 0;
  bool certified = false;
  /// Smallest |f| met on the sampling grid or contour.
  double min_abs = 0.0;
  /// Refinement depth: resolution doublings, retries, or bisection steps.
  int depth = 0;
  /// Refined zero locations where the counter produces them.
  std::vector<double> locations;
};

/// Distinct real roots. Balanced companion-matrix eigenvalues are the
/// primary count up to degree kCompanionMaxDegree, Aberth-Ehrlich iteration
/// above it. A Sturm sequence certifies up to degree kSturmMaxDegree, sign
/// alternation across the isolated roots above it.
CountResult real_roots_count(const RealPolynomial& p);

inline constexpr std::size_t kSturmMaxDegree = 40;
inline constexpr std::size_t kCompanionMaxDegree = 200;

/// Primary real-root count only (eigenvalues with |Im| <= 1e-8 (1 + |z|)).
std::int64_t companion_real_roots(const RealPolynomial& p);
/// Same classification applied to Aberth-Ehrlich roots.
std::int64_t aberth_real_roots(const RealPolynomial& p);
/// Distinct real roots from a Sturm sequence in extended precision.
std::int64_t sturm_real_roots(const RealPolynomial& p);

/// Zeros of a real trigonometric polynomial on [0, 2pi).
CountResult circle_zeros_count(const TrigPolynomial& f);

/// Sign changes of t -> <curve(t), xi> on [0, 2pi).
CountResult hyperplane_curve_intersections(const SphericalCurve& curve, const Eigen::VectorXd& xi);

/// Sign changes of a 2pi-periodic function sampled on `base_nodes` points,
/// certified by a recount at twice the resolution and even parity. Shared
/// by the circle and curve counters.
CountResult periodic_sign_changes(const std::function<double(double)>& f, std::size_t base_nodes);

/// Zeros of f in the open disk |z - center| < r by the argument principle.
CountResult disk_zeros_count(const ExpSum& f, double r, Complex center = {0.0, 0.0});

/// Common zeros of two bivariate trigonometric polynomials on T^2.
CountResult torus_common_zeros_count(const TrigPolynomialND& f, const TrigPolynomialND& g);

/// Mixed Kushnirenko bound 2! V(conv L_f, conv L_g) on the number of common
/// zeros in (C*)^2, hence on T^2.
double kushnirenko_bound(const SpectrumND& a, const SpectrumND& b);

}  // namespace zerostat
