#include "zerostat/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zerostat {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t index) : seed_(seed), index_(index) {
  std::uint64_t x = seed;
  const std::uint64_t a = splitmix64(x);
  x = a ^ (index * 0xD1342543DE82EF95ULL + 0x632BE59BD9B4E019ULL);
  for (auto& w : s_) w = splitmix64(x);
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

Complex RngStream::complex_normal() {
  const double a = normal();
  const double b = normal();
  return Complex(a, b) / std::numbers::sqrt2;
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPolynomial sample_kac(int m, RngStream& rng) {
  if (m < 1) throw std::invalid_argument("degree must be at least 1");
  RealPolynomial p;
  p.coeffs.resize(static_cast<std::size_t>(m) + 1);
  for (auto& c : p.coeffs) c = rng.normal();
  return p;
}

RealPolynomial sample_kostlan(int m, RngStream& rng) {
  if (m < 1) throw std::invalid_argument("degree must be at least 1");
  RealPolynomial p;
  p.coeffs.resize(static_cast<std::size_t>(m) + 1);
  const double lm = std::lgamma(m + 1.0);
  for (int k = 0; k <= m; ++k) {
    const double log_binom = lm - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0);
    p.coeffs[static_cast<std::size_t>(k)] = std::exp(0.5 * log_binom) * rng.normal();
  }
  return p;
}

TrigPolynomial sample_trig(const Spectrum1D& s, RngStream& rng) {
  if (!is_centrally_symmetric(s))
    throw std::invalid_argument("random trigonometric polynomial needs a symmetric spectrum");
  std::vector<double> coords(s.size());
  for (auto& c : coords) c = rng.normal();
  return TrigPolynomial::from_coordinates(s, coords);
}

TrigPolynomialND sample_trig_nd(const SpectrumND& s, RngStream& rng) {
  if (!is_centrally_symmetric(s))
    throw std::invalid_argument("random trigonometric polynomial needs a symmetric spectrum");
  const bool has_zero = s.contains(SpectrumND::Point(s.dim(), 0));
  const double c0 = has_zero ? rng.normal() : 0.0;
  const auto half = s.positive_half().size();
  std::vector<double> a(half), b(half);
  for (std::size_t j = 0; j < half; ++j) {
    a[j] = rng.normal();
    b[j] = rng.normal();
  }
  return TrigPolynomialND(s, c0, std::move(a), std::move(b));
}

std::vector<TrigPolynomialND> sample_trig_system(const std::vector<SpectrumND>& spectra,
                                                 RngStream& rng) {
  if (spectra.empty()) throw std::invalid_argument("empty system");
  const auto n = spectra.front().dim();
  if (spectra.size() != n)
    throw std::invalid_argument("a system in " + std::to_string(n) + " variables needs " +
                                std::to_string(n) + " equations");
  std::vector<TrigPolynomialND> out;
  for (const auto& s : spectra) {
    if (s.dim() != n) throw std::invalid_argument("spectra of differing dimension in a system");
    out.push_back(sample_trig_nd(s, rng));
  }
  return out;
}

ExpSum sample_expsum(const ComplexSpectrum& s, RngStream& rng) {
  if (s.size() < 2) throw std::invalid_argument("random exponential sum needs at least 2 frequencies");
  std::vector<Complex> c(s.size());
  for (auto& v : c) {
    do {
      v = rng.complex_normal();
    } while (std::abs(v) < 1e-6);
  }
  return ExpSum(s, std::move(c));
}

}  // namespace zerostat
