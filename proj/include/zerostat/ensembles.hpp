#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "zerostat/spectra.hpp"

namespace zerostat {

/// Reproducible random stream keyed by (seed, index). The state of a
/// xoshiro256** generator is derived from the key with SplitMix64, so any
/// trial can be replayed without touching other trials' streams. Normal
/// deviates use the Marsaglia polar method implemented here, not
/// std::normal_distribution, so draws are identical across standard
/// libraries.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t index() const { return index_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double normal();
  /// (g1 + i g2) / sqrt(2): unit total variance.
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t index_;
  std::array<std::uint64_t, 4> s_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// c[k] multiplies x^k; c.size() - 1 is the nominal degree.
struct RealPolynomial {
  std::vector<double> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double operator()(double x) const;
};

/// iid N(0, 1) coefficients.
RealPolynomial sample_kac(int m, RngStream& rng);
/// c_k ~ N(0, C(m, k)), binomials through lgamma.
RealPolynomial sample_kostlan(int m, RngStream& rng);

/// iid N(0, 1) coordinates on the orthonormal basis, drawn in coordinate
/// order (see TrigPolynomial::coordinates).
TrigPolynomial sample_trig(const Spectrum1D& s, RngStream& rng);
TrigPolynomialND sample_trig_nd(const SpectrumND& s, RngStream& rng);
/// One independent polynomial per spectrum; count must equal the dimension.
std::vector<TrigPolynomialND> sample_trig_system(const std::vector<SpectrumND>& spectra,
                                                 RngStream& rng);

/// Standard complex normal coefficients, redrawn while |c| < 1e-6.
ExpSum sample_expsum(const ComplexSpectrum& s, RngStream& rng);

}  // namespace zerostat
