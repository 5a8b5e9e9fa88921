#include "zerostat/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zerostat {

namespace {

bool lex_positive(const SpectrumND::Point& p) {
  for (auto v : p) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

SpectrumND::Point negate(SpectrumND::Point p) {
  for (auto& v : p) v = -v;
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Spectrum1D

Spectrum1D::Spectrum1D(std::vector<std::int64_t> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("spectrum must be nonempty");
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end())
    throw std::invalid_argument("duplicate frequency " + std::to_string(*dup) + " in spectrum");
}

Spectrum1D Spectrum1D::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range spectrum");
  std::vector<std::int64_t> pts;
  pts.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (auto k = lo; k <= hi; ++k) pts.push_back(k);
  return Spectrum1D(std::move(pts));
}

bool Spectrum1D::contains(std::int64_t k) const {
  return std::binary_search(points_.begin(), points_.end(), k);
}

std::vector<std::int64_t> Spectrum1D::positive() const {
  std::vector<std::int64_t> out;
  for (auto k : points_)
    if (k > 0) out.push_back(k);
  return out;
}

Spectrum1D Spectrum1D::scaled(std::int64_t k) const {
  if (k == 0) throw std::invalid_argument("scaling factor must be nonzero");
  std::vector<std::int64_t> pts(points_);
  for (auto& p : pts) p *= k;
  return Spectrum1D(std::move(pts));
}

bool is_centrally_symmetric(const Spectrum1D& s) {
  return std::all_of(s.points().begin(), s.points().end(),
                     [&](std::int64_t k) { return s.contains(-k); });
}

std::int64_t degree(const Spectrum1D& s) {
  return std::max(std::abs(s.points().front()), std::abs(s.points().back()));
}

// ---------------------------------------------------------------------------
// SpectrumND

SpectrumND::SpectrumND(std::size_t dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ == 0) throw std::invalid_argument("spectrum dimension must be positive");
  if (points_.empty()) throw std::invalid_argument("spectrum must be nonempty");
  for (const auto& p : points_)
    if (p.size() != dim_)
      throw std::invalid_argument("spectrum point of length " + std::to_string(p.size()) +
                                  " in a dimension " + std::to_string(dim_) + " spectrum");
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
    throw std::invalid_argument("duplicate point in spectrum");
}

SpectrumND SpectrumND::box(const Point& lo, const Point& hi) {
  if (lo.size() != hi.size() || lo.empty())
    throw std::invalid_argument("box corners must have equal positive length");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("box corner lo exceeds hi");
  std::vector<Point> pts;
  Point cur = lo;
  while (true) {
    pts.push_back(cur);
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
    }
    if (i == cur.size()) break;
  }
  return SpectrumND(lo.size(), std::move(pts));
}

SpectrumND SpectrumND::from_1d(const Spectrum1D& s) {
  std::vector<Point> pts;
  for (auto k : s.points()) pts.push_back({k});
  return SpectrumND(1, std::move(pts));
}

bool SpectrumND::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::vector<SpectrumND::Point> SpectrumND::positive_half() const {
  std::vector<Point> out;
  for (const auto& p : points_)
    if (lex_positive(p)) out.push_back(p);
  return out;
}

std::int64_t SpectrumND::max_abs_coordinate() const {
  std::int64_t m = 0;
  for (const auto& p : points_)
    for (auto v : p) m = std::max(m, std::abs(v));
  return m;
}

SpectrumND SpectrumND::scaled(std::int64_t k) const {
  if (k == 0) throw std::invalid_argument("scaling factor must be nonzero");
  auto pts = points_;
  for (auto& p : pts)
    for (auto& v : p) v *= k;
  return SpectrumND(dim_, std::move(pts));
}

bool is_centrally_symmetric(const SpectrumND& s) {
  return std::all_of(s.points().begin(), s.points().end(),
                     [&](const SpectrumND::Point& p) { return s.contains(negate(p)); });
}

// ---------------------------------------------------------------------------
// ComplexSpectrum

ComplexSpectrum::ComplexSpectrum(std::vector<Complex> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("spectrum must be nonempty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].real()) || !std::isfinite(points_[i].imag()))
      throw std::invalid_argument("non-finite frequency in spectrum");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(points_[i] - points_[j]) <= kEqualityTolerance)
        throw std::invalid_argument("duplicate frequency in complex spectrum");
  }
}

double ComplexSpectrum::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) d = std::max(d, std::abs(points_[i] - points_[j]));
  return d;
}

// ---------------------------------------------------------------------------
// TrigPolynomial

TrigPolynomial::TrigPolynomial(Spectrum1D spectrum, double c0, std::vector<double> alphas,
                               std::vector<double> betas)
    : spectrum_(std::move(spectrum)),
      freqs_(spectrum_.positive()),
      c0_(c0),
      alphas_(std::move(alphas)),
      betas_(std::move(betas)) {
  if (!is_centrally_symmetric(spectrum_))
    throw std::invalid_argument("trigonometric polynomial needs a centrally symmetric spectrum");
  if (alphas_.size() != freqs_.size() || betas_.size() != freqs_.size())
    throw std::invalid_argument("coefficient arrays must match the positive frequencies");
  if (c0_ != 0.0 && !spectrum_.contains(0))
    throw std::invalid_argument("constant coefficient given but 0 is not in the spectrum");
}

TrigPolynomial TrigPolynomial::from_coordinates(const Spectrum1D& spectrum,
                                                std::span<const double> coords) {
  if (!is_centrally_symmetric(spectrum))
    throw std::invalid_argument("trigonometric polynomial needs a centrally symmetric spectrum");
  if (coords.size() != spectrum.size())
    throw std::invalid_argument("coordinate vector length must equal #spectrum");
  std::size_t pos = 0;
  double c0 = 0.0;
  if (spectrum.contains(0)) c0 = coords[pos++];
  std::vector<double> a, b;
  while (pos < coords.size()) {
    a.push_back(coords[pos++]);
    b.push_back(coords[pos++]);
  }
  return TrigPolynomial(spectrum, c0, std::move(a), std::move(b));
}

TrigPolynomial TrigPolynomial::from_raw(const Spectrum1D& spectrum, double a0,
                                        std::span<const double> cos_coeffs,
                                        std::span<const double> sin_coeffs) {
  std::vector<double> a(cos_coeffs.begin(), cos_coeffs.end());
  std::vector<double> b(sin_coeffs.begin(), sin_coeffs.end());
  for (auto& v : a) v /= std::numbers::sqrt2;
  for (auto& v : b) v /= std::numbers::sqrt2;
  return TrigPolynomial(spectrum, a0, std::move(a), std::move(b));
}

std::vector<double> TrigPolynomial::coordinates() const {
  std::vector<double> out;
  out.reserve(spectrum_.size());
  if (spectrum_.contains(0)) out.push_back(c0_);
  for (std::size_t j = 0; j < freqs_.size(); ++j) {
    out.push_back(alphas_[j]);
    out.push_back(betas_[j]);
  }
  return out;
}

std::int64_t TrigPolynomial::degree() const { return zerostat::degree(spectrum_); }

double TrigPolynomial::operator()(double theta) const {
  double s = 0.0;
  for (std::size_t j = 0; j < freqs_.size(); ++j) {
    const double arg = static_cast<double>(freqs_[j]) * theta;
    s += alphas_[j] * std::cos(arg) + betas_[j] * std::sin(arg);
  }
  return c0_ + std::numbers::sqrt2 * s;
}

// ---------------------------------------------------------------------------
// TrigPolynomialND

TrigPolynomialND::TrigPolynomialND(SpectrumND spectrum, double c0, std::vector<double> alphas,
                                   std::vector<double> betas)
    : spectrum_(std::move(spectrum)),
      freqs_(spectrum_.positive_half()),
      c0_(c0),
      alphas_(std::move(alphas)),
      betas_(std::move(betas)) {
  if (!is_centrally_symmetric(spectrum_))
    throw std::invalid_argument("trigonometric polynomial needs a centrally symmetric spectrum");
  if (alphas_.size() != freqs_.size() || betas_.size() != freqs_.size())
    throw std::invalid_argument("coefficient arrays must match the positive half-spectrum");
  if (c0_ != 0.0 && !spectrum_.contains(SpectrumND::Point(spectrum_.dim(), 0)))
    throw std::invalid_argument("constant coefficient given but 0 is not in the spectrum");
}

double TrigPolynomialND::operator()(std::span<const double> theta) const {
  if (theta.size() != dim()) throw std::invalid_argument("point dimension mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < freqs_.size(); ++j) {
    double arg = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) arg += static_cast<double>(freqs_[j][i]) * theta[i];
    s += alphas_[j] * std::cos(arg) + betas_[j] * std::sin(arg);
  }
  return c0_ + std::numbers::sqrt2 * s;
}

double TrigPolynomialND::eval_with_gradient(std::span<const double> theta,
                                            std::span<double> grad) const {
  if (theta.size() != dim() || grad.size() != dim())
    throw std::invalid_argument("point dimension mismatch");
  std::fill(grad.begin(), grad.end(), 0.0);
  double s = 0.0;
  for (std::size_t j = 0; j < freqs_.size(); ++j) {
    double arg = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) arg += static_cast<double>(freqs_[j][i]) * theta[i];
    const double c = std::cos(arg), sn = std::sin(arg);
    s += alphas_[j] * c + betas_[j] * sn;
    const double d = -alphas_[j] * sn + betas_[j] * c;
    for (std::size_t i = 0; i < dim(); ++i)
      grad[i] += std::numbers::sqrt2 * d * static_cast<double>(freqs_[j][i]);
  }
  return c0_ + std::numbers::sqrt2 * s;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(Spectrum1D spectrum, std::vector<Complex> coeffs)
    : spectrum_(std::move(spectrum)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != spectrum_.size())
    throw std::invalid_argument("one coefficient per spectrum point required");
}

Complex LaurentPolynomial::coeff(std::int64_t k) const {
  const auto& pts = spectrum_.points();
  auto it = std::lower_bound(pts.begin(), pts.end(), k);
  if (it == pts.end() || *it != k) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(it - pts.begin())];
}

Complex LaurentPolynomial::operator()(Complex z) const {
  if (z == Complex{0.0, 0.0}) throw std::invalid_argument("Laurent polynomial evaluated at 0");
  Complex s{0.0, 0.0};
  const auto& pts = spectrum_.points();
  for (std::size_t j = 0; j < pts.size(); ++j)
    s += coeffs_[j] * std::pow(z, static_cast<double>(pts[j]));
  return s;
}

LaurentPolynomial trig_to_laurent(const TrigPolynomial& f) {
  const auto& spec = f.spectrum();
  const auto& freqs = f.frequencies();
  std::vector<Complex> coeffs(spec.size());
  const auto& pts = spec.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto k = pts[i];
    if (k == 0) {
      coeffs[i] = f.c0();
      continue;
    }
    const auto j = static_cast<std::size_t>(
        std::lower_bound(freqs.begin(), freqs.end(), std::abs(k)) - freqs.begin());
    // sqrt2 (a cos + b sin) = (sqrt2/2) [(a - ib) z^k + (a + ib) z^-k]
    const Complex ak = Complex(f.alphas()[j], -f.betas()[j]) * (std::numbers::sqrt2 / 2.0);
    coeffs[i] = k > 0 ? ak : std::conj(ak);
  }
  return LaurentPolynomial(spec, std::move(coeffs));
}

bool is_real_on_circle(const LaurentPolynomial& p, double tol) {
  for (auto k : p.spectrum().points())
    if (std::abs(p.coeff(k) - std::conj(p.coeff(-k))) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ExpSum

ExpSum::ExpSum(ComplexSpectrum spectrum, std::vector<Complex> coeffs)
    : spectrum_(std::move(spectrum)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != spectrum_.size())
    throw std::invalid_argument("one coefficient per spectrum point required");
  for (const auto& c : coeffs_)
    if (c == Complex{0.0, 0.0})
      throw std::invalid_argument("exponential sum coefficients must be nonzero");
}

Complex ExpSum::operator()(Complex z) const {
  Complex s{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    s += coeffs_[j] * std::exp(std::conj(spectrum_.points()[j]) * z);
  return s;
}

ExpSum::Scaled ExpSum::eval_scaled(Complex z) const {
  const auto& pts = spectrum_.points();
  double shift = -std::numeric_limits<double>::infinity();
  for (const auto& l : pts) shift = std::max(shift, (std::conj(l) * z).real());
  Scaled out{{0.0, 0.0}, 0.0};
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Complex e = std::conj(pts[j]) * z;
    const Complex term = coeffs_[j] * std::polar(std::exp(e.real() - shift), e.imag());
    out.value += term;
    out.term_modulus_sum += std::abs(term);
  }
  return out;
}

}  // namespace zerostat
