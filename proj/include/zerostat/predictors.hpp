#pragma once

#include <string_view>

#include "zerostat/geometry.hpp"
#include "zerostat/spectra.hpp"

namespace zerostat {

/// Which boundary measure of the Newton polygon sets the zero density of an
/// exponential sum: N(f, r) ~ r * measure / (2 pi).
enum class SlopeConvention { Perimeter, Semiperimeter };

std::string_view to_string(SlopeConvention c);
SlopeConvention slope_convention_from_string(std::string_view s);

/// Leading term (2/pi) ln m of the mean number of real roots of a Kac
/// polynomial. Real-valued m is accepted.
double kac_asymptotic(double m);

/// Mean number of real roots of the Kostlan polynomial of degree m: sqrt(m).
double kostlan_expected(int m);

/// 2 sqrt((1/#L) sum l^2): mean number of zeros on the circle.
double trig_expected(const Spectrum1D& s);
/// Probability that a root is real: trig_expected / (2 deg).
double trig_prob(const Spectrum1D& s);

/// n! vol(Ell(L)): mean number of real zeros of a system of n equations.
double nd_expected(const SpectrumND& s);
/// vol(Ell(L)) / vol(conv(L)), dimensions 1 and 2.
double nd_prob(const SpectrumND& s);
/// 2! V(Ell(L1), Ell(L2)) for a 2-variable system with distinct spectra.
double nd_expected_mixed(const SpectrumND& s1, const SpectrumND& s2);

/// Zero density per unit radius: measure(conv(conj L)) / (2 pi).
double expsum_slope(const ComplexSpectrum& s,
                    SlopeConvention convention = SlopeConvention::Perimeter);

/// pvol(P) / (2 pi)^n: leading coefficient of N(F, r) in r^n.
double pvol_leading_coefficient(const ComplexPolytope& p,
                                std::size_t angle_samples = kDefaultAngleSamples,
                                std::uint64_t seed = 0);

}  // namespace zerostat
