#include "zerostat/spectrum_parse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace zerostat {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

// U+2212 becomes "  -" so byte offsets still point into the caller's text.
std::string normalize_minus(std::string_view text) {
  std::string out(text);
  for (std::size_t i = 0; i + 2 < out.size(); ++i) {
    if (static_cast<unsigned char>(out[i]) == 0xE2 &&
        static_cast<unsigned char>(out[i + 1]) == 0x88 &&
        static_cast<unsigned char>(out[i + 2]) == 0x92) {
      out[i] = ' ';
      out[i + 1] = ' ';
      out[i + 2] = '-';
    }
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : buf_(normalize_minus(text)) {}

  void skip_ws() {
    while (pos_ < buf_.size() && std::isspace(static_cast<unsigned char>(buf_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= buf_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < buf_.size() ? buf_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (buf_.compare(pos_, tok.size(), tok) != 0) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  std::size_t pos() const { return pos_; }

  std::int64_t integer() {
    skip_ws();
    const char* first = buf_.data() + pos_;
    const char* last = buf_.data() + buf_.size();
    if (first < last && *first == '+') ++first;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - buf_.data());
    return v;
  }

  // Unsigned real; sign is handled by the caller.
  bool try_unsigned_real(double& v) {
    skip_ws();
    const char* first = buf_.data() + pos_;
    const char* last = buf_.data() + buf_.size();
    if (first == last || *first == '-' || *first == '+') return false;
    auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
    if (ec != std::errc{}) return false;
    pos_ = static_cast<std::size_t>(ptr - buf_.data());
    return true;
  }

  double real() {
    double sign = 1.0;
    if (accept('-')) sign = -1.0;
    else accept('+');
    double v = 0.0;
    if (!try_unsigned_real(v)) fail("expected a number");
    return sign * v;
  }

  // One real or imaginary term with an optional leading sign.
  // Returns false for imag == false.
  bool term(double& v, bool allow_bare_sign_missing) {
    double sign = 1.0;
    if (accept('-')) sign = -1.0;
    else if (!accept('+') && !allow_bare_sign_missing) fail("expected '+' or '-'");
    if (accept('i') || accept('j')) {
      v = sign;
      return true;
    }
    if (!try_unsigned_real(v)) fail("expected a number");
    v *= sign;
    if (pos_ < buf_.size() && (buf_[pos_] == 'i' || buf_[pos_] == 'j')) {
      ++pos_;
      return true;
    }
    return false;
  }

  Complex complex_number() {
    double a = 0.0;
    const bool first_imag = term(a, true);
    const char c = peek();
    if (c == '+' || c == '-') {
      double b = 0.0;
      const bool second_imag = term(b, false);
      if (first_imag == second_imag) fail("expected a complex number of the form a+bi");
      return first_imag ? Complex(b, a) : Complex(a, b);
    }
    return first_imag ? Complex(0.0, a) : Complex(a, 0.0);
  }

  SpectrumND::Point tuple() {
    expect('(');
    SpectrumND::Point p;
    p.push_back(integer());
    while (accept(',')) p.push_back(integer());
    expect(')');
    return p;
  }

 private:
  std::string buf_;
  std::size_t pos_ = 0;
};

template <class T>
T with_position(Cursor& cur, auto&& build) {
  const auto at = cur.pos();
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), at);
  }
}

}  // namespace

Spectrum1D parse_spectrum_1d(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty spectrum");
  std::vector<std::int64_t> pts;
  const auto first = cur.integer();
  if (cur.accept("..")) {
    const auto last = cur.integer();
    if (!cur.done()) cur.fail("unexpected trailing text");
    if (last < first) throw ParseError("range end below range start", cur.pos());
    return Spectrum1D::range(first, last);
  }
  pts.push_back(first);
  while (cur.accept(',')) pts.push_back(cur.integer());
  if (!cur.done()) cur.fail("expected ',' or end of spectrum");
  return with_position<Spectrum1D>(cur, [&] { return Spectrum1D(std::move(pts)); });
}

SpectrumND parse_spectrum_nd(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty spectrum");
  std::vector<SpectrumND::Point> pts;
  const auto start = cur.pos();
  pts.push_back(cur.tuple());
  if (cur.accept("..")) {
    auto hi = cur.tuple();
    if (!cur.done()) cur.fail("unexpected trailing text");
    try {
      return SpectrumND::box(pts.front(), hi);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }
  while (cur.accept(';')) pts.push_back(cur.tuple());
  if (!cur.done()) cur.fail("expected ';' or end of spectrum");
  const auto dim = pts.front().size();
  try {
    return SpectrumND(dim, std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), start);
  }
}

ComplexSpectrum parse_complex_spectrum(std::string_view text) {
  auto pts = parse_complex_list(text);
  try {
    return ComplexSpectrum(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::vector<double> parse_real_list(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty list");
  std::vector<double> out{cur.real()};
  while (cur.accept(',')) out.push_back(cur.real());
  if (!cur.done()) cur.fail("expected ',' or end of list");
  return out;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty list");
  std::vector<Complex> out{cur.complex_number()};
  while (cur.accept(',')) out.push_back(cur.complex_number());
  if (!cur.done()) cur.fail("expected ',' or end of list");
  return out;
}

std::string format_spectrum(const Spectrum1D& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.points()[i];
  return os.str();
}

std::string format_spectrum(const SpectrumND& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << (i ? ";" : "") << '(';
    for (std::size_t j = 0; j < s.dim(); ++j) os << (j ? "," : "") << s.points()[i][j];
    os << ')';
  }
  return os.str();
}

std::string format_spectrum(const ComplexSpectrum& s) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto z = s.points()[i];
    os << (i ? "," : "") << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
  }
  return os.str();
}

}  // namespace zerostat
