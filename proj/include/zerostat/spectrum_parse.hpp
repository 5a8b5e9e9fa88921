#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zerostat/spectra.hpp"

namespace zerostat {

/// Malformed spectrum or number-list text. `position()` is the 0-based byte
/// offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   1-D      "-3..3" (inclusive range) or "-5,-2,2,5"
//   n-D      "(-1,0);(1,0);(0,0)" or box sugar "(-1,-1)..(1,1)"
//   complex  "0, 1, 1i, 2+3i, -i, 6.283185307i"
// The Unicode minus sign U+2212 is accepted wherever '-' is.

Spectrum1D parse_spectrum_1d(std::string_view text);
SpectrumND parse_spectrum_nd(std::string_view text);
ComplexSpectrum parse_complex_spectrum(std::string_view text);

std::vector<double> parse_real_list(std::string_view text);
std::vector<Complex> parse_complex_list(std::string_view text);

std::string format_spectrum(const Spectrum1D& s);
std::string format_spectrum(const SpectrumND& s);
std::string format_spectrum(const ComplexSpectrum& s);

}  // namespace zerostat
