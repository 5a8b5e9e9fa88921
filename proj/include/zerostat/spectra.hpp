#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace zerostat {

using Complex = std::complex<double>;

/// Finite set of integer frequencies, sorted ascending, no duplicates.
class Spectrum1D {
 public:
  explicit Spectrum1D(std::vector<std::int64_t> points);

  /// Inclusive integer range {lo, ..., hi}.
  static Spectrum1D range(std::int64_t lo, std::int64_t hi);

  const std::vector<std::int64_t>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(std::int64_t k) const;

  /// Strictly positive frequencies, ascending.
  std::vector<std::int64_t> positive() const;

  Spectrum1D scaled(std::int64_t k) const;

  bool operator==(const Spectrum1D&) const = default;

 private:
  std::vector<std::int64_t> points_;
};

/// Finite set of integer vectors of a common length, sorted lexicographically.
class SpectrumND {
 public:
  using Point = std::vector<std::int64_t>;

  SpectrumND(std::size_t dim, std::vector<Point> points);

  /// Full integer box between two corners, inclusive.
  static SpectrumND box(const Point& lo, const Point& hi);
  static SpectrumND from_1d(const Spectrum1D& s);

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const Point& p) const;

  /// Points that are lexicographically greater than zero. Together with
  /// their negatives and (optionally) zero they exhaust a symmetric set.
  std::vector<Point> positive_half() const;

  /// max over points and coordinates of |lambda_i|.
  std::int64_t max_abs_coordinate() const;

  SpectrumND scaled(std::int64_t k) const;

  bool operator==(const SpectrumND&) const = default;

 private:
  std::size_t dim_;
  std::vector<Point> points_;
};

/// Finite set of complex frequencies; duplicates closer than 1e-12 rejected.
class ComplexSpectrum {
 public:
  static constexpr double kEqualityTolerance = 1e-12;

  explicit ComplexSpectrum(std::vector<Complex> points);

  const std::vector<Complex>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Largest pairwise distance between points (0 for a single point).
  double diameter() const;

 private:
  std::vector<Complex> points_;
};

bool is_centrally_symmetric(const Spectrum1D& s);
bool is_centrally_symmetric(const SpectrumND& s);

/// max |lambda| over the spectrum.
std::int64_t degree(const Spectrum1D& s);

/// Real trigonometric polynomial with centrally symmetric spectrum, stored
/// by its coordinates in the L2-orthonormal basis
///   phi_0 = 1, phi_k = sqrt(2) cos(k t), psi_k = sqrt(2) sin(k t)
/// under (f, g) = (1/2pi) * integral of f g over the circle.
class TrigPolynomial {
 public:
  /// `alphas[j]`, `betas[j]` belong to the j-th positive frequency.
  /// `c0` must be 0 unless 0 is in the spectrum.
  TrigPolynomial(Spectrum1D spectrum, double c0, std::vector<double> alphas,
                 std::vector<double> betas);

  /// Coordinates in the order [c0 if 0 in spectrum], then (alpha_k, beta_k)
  /// for each positive frequency ascending. Length equals #spectrum.
  static TrigPolynomial from_coordinates(const Spectrum1D& spectrum,
                                         std::span<const double> coords);

  /// From coefficients on the raw basis 1, cos(k t), sin(k t).
  static TrigPolynomial from_raw(const Spectrum1D& spectrum, double a0,
                                 std::span<const double> cos_coeffs,
                                 std::span<const double> sin_coeffs);

  const Spectrum1D& spectrum() const { return spectrum_; }
  const std::vector<std::int64_t>& frequencies() const { return freqs_; }
  double c0() const { return c0_; }
  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& betas() const { return betas_; }

  std::vector<double> coordinates() const;
  std::int64_t degree() const;

  double operator()(double theta) const;

 private:
  Spectrum1D spectrum_;
  std::vector<std::int64_t> freqs_;
  double c0_;
  std::vector<double> alphas_;
  std::vector<double> betas_;
};

/// n-variate real trigonometric polynomial on the torus T^n, coordinates on
/// the L2(T^n)-orthonormal basis 1, sqrt(2) cos<l, t>, sqrt(2) sin<l, t> with
/// l running over the positive half of the spectrum.
class TrigPolynomialND {
 public:
  TrigPolynomialND(SpectrumND spectrum, double c0, std::vector<double> alphas,
                   std::vector<double> betas);

  const SpectrumND& spectrum() const { return spectrum_; }
  const std::vector<SpectrumND::Point>& frequencies() const { return freqs_; }
  double c0() const { return c0_; }
  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& betas() const { return betas_; }
  std::size_t dim() const { return spectrum_.dim(); }

  double operator()(std::span<const double> theta) const;
  /// Value and gradient at theta; `grad` must have size dim().
  double eval_with_gradient(std::span<const double> theta,
                            std::span<double> grad) const;

 private:
  SpectrumND spectrum_;
  std::vector<SpectrumND::Point> freqs_;
  double c0_;
  std::vector<double> alphas_;
  std::vector<double> betas_;
};

/// Sum of a_m z^m over an integer spectrum.
class LaurentPolynomial {
 public:
  LaurentPolynomial(Spectrum1D spectrum, std::vector<Complex> coeffs);

  const Spectrum1D& spectrum() const { return spectrum_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k, zero when k is outside the spectrum.
  Complex coeff(std::int64_t k) const;

  Complex operator()(Complex z) const;

 private:
  Spectrum1D spectrum_;
  std::vector<Complex> coeffs_;
};

/// f(z) = sum c_l exp(conj(l) z). All coefficients are nonzero.
class ExpSum {
 public:
  ExpSum(ComplexSpectrum spectrum, std::vector<Complex> coeffs);

  const ComplexSpectrum& spectrum() const { return spectrum_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex operator()(Complex z) const;

  /// f(z) * exp(-s) together with sum |c_l exp(conj(l) z)| * exp(-s), where
  /// s = max Re(conj(l) z). Never overflows; the argument of f is preserved.
  struct Scaled {
    Complex value;
    double term_modulus_sum;
  };
  Scaled eval_scaled(Complex z) const;

 private:
  ComplexSpectrum spectrum_;
  std::vector<Complex> coeffs_;
};

/// Restriction isomorphism: L(e^{it}) == f(t).
LaurentPolynomial trig_to_laurent(const TrigPolynomial& f);

/// a_k == conj(a_{-k}) for all k, within `tol`.
bool is_real_on_circle(const LaurentPolynomial& p, double tol = 1e-12);

}  // namespace zerostat
