#include "zerostat/zerocount.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zerostat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------------------
// Real polynomials

// Coefficients with trailing (leading-power) exact zeros removed.
std::vector<double> trimmed(const RealPolynomial& p) {
  std::vector<double> c = p.coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.empty()) throw std::invalid_argument("real root count of the zero polynomial");
  return c;
}

// Parlett-Reinsch balancing by powers of two.
void balance(Eigen::MatrixXd& a) {
  const auto n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

Eigen::VectorXcd companion_roots(const std::vector<double>& c) {
  const auto m = static_cast<Eigen::Index>(c.size()) - 1;
  if (m == 0) return Eigen::VectorXcd(0);
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < m; ++i)
    comp(i, m - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  balance(comp);
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("companion eigenvalues failed");
  return es.eigenvalues();
}

// Newton correction p(z) / p'(z) and whether |p(z)| is within rounding of
// zero. Points outside the unit disk use the reversed polynomial.
std::pair<std::complex<double>, bool> newton_ratio(const std::vector<double>& c,
                                                   std::complex<double> z) {
  using C = std::complex<double>;
  const auto m = c.size() - 1;
  const double tol = 4.0 * static_cast<double>(m + 1) * DBL_EPSILON;
  if (std::abs(z) <= 1.0) {
    C p = c[m], dp = 0.0;
    double bound = std::abs(c[m]);
    const double az = std::abs(z);
    for (std::size_t k = m; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
      bound = bound * az + std::abs(c[k]);
    }
    return {p / dp, std::abs(p) <= tol * bound};
  }
  const C y = 1.0 / z;
  const double ay = std::abs(y);
  C r = c[0], dr = 0.0;
  double bound = std::abs(c[0]);
  for (std::size_t k = 1; k <= m; ++k) {
    dr = dr * y + r;
    r = r * y + c[k];
    bound = bound * ay + std::abs(c[k]);
  }
  const C logderiv = y * (static_cast<double>(m) - y * dr / r);
  return {1.0 / logderiv, std::abs(r) <= tol * bound};
}

// Aberth-Ehrlich simultaneous iteration, O(m^2) per sweep.
Eigen::VectorXcd aberth_roots(const std::vector<double>& coeffs) {
  using C = std::complex<double>;
  std::size_t zeros = 0;
  while (coeffs[zeros] == 0.0) ++zeros;
  const std::vector<double> c(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end());
  const auto m = c.size() - 1;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(coeffs.size() - 1));
  if (m == 0) return out;

  const double radius = std::pow(std::abs(c.front() / c.back()), 1.0 / static_cast<double>(m));
  std::vector<C> z(m);
  for (std::size_t k = 0; k < m; ++k)
    z[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(m) + 0.4);
  std::vector<char> done(m, 0);
  std::size_t remaining = m;
  for (int sweep = 0; sweep < 500 && remaining > 0; ++sweep) {
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      const auto [ratio, small] = newton_ratio(c, z[k]);
      if (small) {
        done[k] = 1;
        --remaining;
        continue;
      }
      C sum = 0.0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      z[k] -= ratio / (1.0 - ratio * sum);
    }
  }
  for (std::size_t k = 0; k < m; ++k) out[static_cast<Eigen::Index>(zeros + k)] = z[k];
  return out;
}

Eigen::VectorXcd polynomial_roots(const std::vector<double>& c) {
  return c.size() - 1 <= kCompanionMaxDegree ? companion_roots(c) : aberth_roots(c);
}

bool is_real_root(const std::complex<double>& z) {
  return std::abs(z.imag()) <= 1e-8 * (1.0 + std::abs(z));
}

using LPoly = std::vector<long double>;  // ascending powers

long double max_abs(const LPoly& p) {
  long double m = 0.0L;
  for (auto v : p) m = std::max(m, std::fabs(v));
  return m;
}

void normalize(LPoly& p) {
  const auto m = max_abs(p);
  if (m > 0.0L)
    for (auto& v : p) v /= m;
}

// Remainder of a / b, with entries below the cancellation floor dropped.
LPoly remainder(LPoly a, const LPoly& b) {
  const long double scale = max_abs(a);
  const long double bl = b.back();
  const auto db = b.size() - 1;
  long double qmax = 0.0L;
  while (a.size() >= b.size()) {
    const long double q = a.back() / bl;
    qmax = std::max(qmax, std::fabs(q));
    const auto shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
  }
  const long double floor = 64.0L * LDBL_EPSILON * static_cast<long double>(b.size()) *
                            std::max(scale, qmax * max_abs(b));
  while (!a.empty() && std::fabs(a.back()) <= floor) a.pop_back();
  for (auto& v : a)
    if (std::fabs(v) <= floor) v = 0.0L;
  return a;
}

int sign_at_plus_inf(const LPoly& p) { return p.back() > 0 ? 1 : -1; }
int sign_at_minus_inf(const LPoly& p) {
  const int s = sign_at_plus_inf(p);
  return (p.size() - 1) % 2 == 0 ? s : -s;
}

long double horner(const std::vector<double>& c, long double x) {
  long double acc = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
  return acc;
}

// Every isolated real root must sit between sign changes of p, and no
// near-real complex pair may hide a pair of sign changes.
bool sign_alternation_certificate(const std::vector<double>& c, const Eigen::VectorXcd& roots) {
  std::vector<double> real;
  for (const auto& z : roots)
    if (is_real_root(z)) real.push_back(z.real());
  std::sort(real.begin(), real.end());
  const int m = static_cast<int>(c.size()) - 1;
  const int lead = c.back() > 0 ? 1 : -1;
  int prev = (m % 2 == 0) ? lead : -lead;
  int changes = 0;
  for (std::size_t i = 0; i + 1 < real.size(); ++i) {
    const long double mid = (static_cast<long double>(real[i]) + real[i + 1]) / 2.0L;
    const long double v = horner(c, mid);
    if (v == 0.0L) return false;
    const int s = v > 0 ? 1 : -1;
    if (s != prev) ++changes;
    prev = s;
  }
  if (lead != prev) ++changes;
  if (changes != static_cast<int>(real.size())) return false;

  for (const auto& z : roots) {
    if (is_real_root(z) || std::abs(z.imag()) > 1e-3 * (1.0 + std::abs(z))) continue;
    const long double x = z.real();
    const long double d = 2.0L * std::fabs(z.imag());
    const long double a = horner(c, x - d), b = horner(c, x), e = horner(c, x + d);
    if ((a > 0) != (b > 0) && (e > 0) != (b > 0)) return false;
  }
  return true;
}

}  // namespace

std::int64_t companion_real_roots(const RealPolynomial& p) {
  const auto c = trimmed(p);
  const auto roots = companion_roots(c);
  return std::count_if(roots.begin(), roots.end(), is_real_root);
}

std::int64_t aberth_real_roots(const RealPolynomial& p) {
  const auto c = trimmed(p);
  const auto roots = aberth_roots(c);
  return std::count_if(roots.begin(), roots.end(), is_real_root);
}

std::int64_t sturm_real_roots(const RealPolynomial& p) {
  const auto c = trimmed(p);
  if (c.size() == 1) return 0;
  LPoly p0(c.begin(), c.end());
  normalize(p0);
  LPoly p1(p0.size() - 1);
  for (std::size_t i = 1; i < p0.size(); ++i)
    p1[i - 1] = static_cast<long double>(i) * p0[i];
  normalize(p1);

  std::vector<LPoly> seq{p0, p1};
  while (seq.back().size() > 1) {
    auto r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;  // exact gcd reached
    for (auto& v : r) v = -v;
    normalize(r);
    seq.push_back(std::move(r));
  }
  int v_minus = 0, v_plus = 0;
  int last_minus = 0, last_plus = 0;
  for (const auto& q : seq) {
    const int sm = sign_at_minus_inf(q), sp = sign_at_plus_inf(q);
    if (last_minus != 0 && sm != last_minus) ++v_minus;
    if (last_plus != 0 && sp != last_plus) ++v_plus;
    last_minus = sm;
    last_plus = sp;
  }
  return v_minus - v_plus;
}

CountResult real_roots_count(const RealPolynomial& p) {
  auto c = trimmed(p);
  CountResult out;
  out.min_abs = std::abs(c.front());
  const auto degree = c.size() - 1;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    if (attempt > 0) {
      // Deterministic relative perturbation of size 1e-10.
      RngStream rng(0x5eedULL, static_cast<std::uint64_t>(attempt));
      for (auto& v : c) v *= 1.0 + 1e-10 * (2.0 * rng.uniform() - 1.0);
    }
    const auto roots = polynomial_roots(c);
    const auto primary = std::count_if(roots.begin(), roots.end(), is_real_root);
    bool ok = false;
    if (degree <= kSturmMaxDegree) {
      ok = sturm_real_roots(RealPolynomial{c}) == primary;
    } else {
      ok = sign_alternation_certificate(c, roots);
    }
    if (attempt == 0 || ok) {
      out.count = primary;
      out.depth = attempt;
    }
    if (ok) {
      out.certified = true;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Periodic sign changes

namespace {

struct GridCount {
  std::int64_t count = 0;
  double min_abs = 0.0;
  std::vector<std::size_t> brackets;  // index k: sign change between k and k+1
};

GridCount grid_sign_changes(const std::function<double(double)>& f, std::size_t nodes) {
  std::vector<double> v(nodes);
  double max_abs = 0.0;
  GridCount out;
  out.min_abs = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < nodes; ++k) {
    v[k] = f(kTwoPi * static_cast<double>(k) / static_cast<double>(nodes));
    max_abs = std::max(max_abs, std::abs(v[k]));
    out.min_abs = std::min(out.min_abs, std::abs(v[k]));
  }
  if (max_abs == 0.0) throw std::invalid_argument("function vanishes on the whole sampling grid");
  for (std::size_t k = 0; k < nodes; ++k) {
    const bool a = v[k] >= 0.0;
    const bool b = v[(k + 1) % nodes] >= 0.0;
    if (a != b) out.brackets.push_back(k);
  }
  out.count = static_cast<std::int64_t>(out.brackets.size());
  return out;
}

double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 60 && b - a > 1e-14; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm >= 0.0) == (fa >= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

CountResult periodic_sign_changes(const std::function<double(double)>& f, std::size_t base_nodes) {
  if (base_nodes < 4) throw std::invalid_argument("too few sampling nodes");
  CountResult out;
  auto g1 = grid_sign_changes(f, base_nodes);
  auto g2 = grid_sign_changes(f, 2 * base_nodes);
  std::size_t nodes = base_nodes;
  GridCount chosen = g1;
  out.depth = 1;
  if (g1.count == g2.count && g1.count % 2 == 0) {
    out.certified = true;
  } else {
    auto g4 = grid_sign_changes(f, 4 * base_nodes);
    auto g8 = grid_sign_changes(f, 8 * base_nodes);
    out.depth = 3;
    if (g4.count == g8.count && g4.count % 2 == 0) {
      out.certified = true;
      chosen = g4;
      nodes = 4 * base_nodes;
    }
  }
  out.count = chosen.count;
  out.min_abs = std::min(g1.min_abs, g2.min_abs);
  if (out.certified) {
    const double h = kTwoPi / static_cast<double>(nodes);
    for (auto k : chosen.brackets) {
      double t = bisect(f, h * static_cast<double>(k), h * static_cast<double>(k + 1));
      out.locations.push_back(std::fmod(t, kTwoPi));
    }
  }
  return out;
}

CountResult circle_zeros_count(const TrigPolynomial& f) {
  const auto nodes = static_cast<std::size_t>(64 * std::max<std::int64_t>(1, f.degree()));
  return periodic_sign_changes([&](double t) { return f(t); }, nodes);
}

CountResult hyperplane_curve_intersections(const SphericalCurve& curve, const Eigen::VectorXd& xi) {
  if (static_cast<std::size_t>(xi.size()) != curve.dim())
    throw std::invalid_argument("normal vector dimension differs from the curve's");
  if (xi.norm() == 0.0) throw std::invalid_argument("hyperplane normal must be nonzero");
  const auto nodes = static_cast<std::size_t>(64 * std::max<std::int64_t>(1, curve.degree()));
  return periodic_sign_changes([&](double t) { return curve.point(t).dot(xi); }, nodes);
}

// ---------------------------------------------------------------------------
// Argument principle

namespace {

constexpr std::size_t kMaxContourNodes = std::size_t{1} << 20;

struct Winding {
  bool near_zero = false;  // cancellation detected on the contour
  std::int64_t turns = 0;
  double min_ratio = 0.0;  // min |f| / sum |terms|
  std::size_t nodes = 0;
};

class WindingCounter {
 public:
  WindingCounter(const ExpSum& f, Complex center, double r) : f_(f), center_(center), r_(r) {}

  Winding run(std::size_t initial_nodes) {
    Winding w;
    w.min_ratio = std::numeric_limits<double>::infinity();
    nodes_ = 0;
    min_ratio_ = std::numeric_limits<double>::infinity();
    double total = 0.0;
    const double h = kTwoPi / static_cast<double>(initial_nodes);
    Complex first = eval(0.0), prev = first;
    for (std::size_t k = 1; k <= initial_nodes; ++k) {
      const double t = h * static_cast<double>(k);
      const Complex cur = k == initial_nodes ? first : eval(t);
      total += segment(t - h, prev, t, cur);
      prev = cur;
      if (cancelled_) break;
    }
    w.min_ratio = min_ratio_;
    w.nodes = nodes_;
    if (cancelled_) {
      w.near_zero = true;
      return w;
    }
    const double turns = total / kTwoPi;
    w.turns = std::llround(turns);
    if (std::abs(turns - static_cast<double>(w.turns)) > 1e-3)
      throw std::runtime_error("winding number did not close to an integer");
    return w;
  }

 private:
  Complex eval(double t) {
    if (++nodes_ > kMaxContourNodes)
      throw std::runtime_error("argument principle did not converge within 2^20 nodes");
    const auto s = f_.eval_scaled(center_ + std::polar(r_, t));
    const double ratio = std::abs(s.value) / s.term_modulus_sum;
    min_ratio_ = std::min(min_ratio_, ratio);
    if (ratio < 1e-10) cancelled_ = true;
    return s.value;
  }

  double segment(double ta, Complex fa, double tb, Complex fb) {
    if (cancelled_) return 0.0;
    const double d = std::arg(fb / fa);
    if (std::abs(d) < std::numbers::pi / 2) return d;
    const double tm = 0.5 * (ta + tb);
    const Complex fm = eval(tm);
    return segment(ta, fa, tm, fm) + segment(tm, fm, tb, fb);
  }

  const ExpSum& f_;
  Complex center_;
  double r_;
  std::size_t nodes_ = 0;
  double min_ratio_ = 0.0;
  bool cancelled_ = false;
};

std::size_t initial_contour_nodes(const ExpSum& f, double r) {
  double reach = 0.0;
  for (const auto& l : f.spectrum().points()) reach = std::max(reach, std::abs(l));
  return 64 + static_cast<std::size_t>(std::ceil(8.0 * r * reach));
}

}  // namespace

CountResult disk_zeros_count(const ExpSum& f, double r, Complex center) {
  if (!(r > 0.0)) throw std::invalid_argument("disk radius must be positive");
  const double diam = f.spectrum().diameter();
  const double nudge = 1e-3 * (1.0 + (diam > 0.0 ? 1.0 / diam : 0.0));
  CountResult out;
  double radius = r;
  for (int retry = 0; retry < 8; ++retry, radius += nudge) {
    const auto n0 = initial_contour_nodes(f, radius);
    WindingCounter first(f, center, radius);
    const auto w1 = first.run(n0);
    if (w1.near_zero) continue;
    WindingCounter second(f, center, radius);
    const auto w2 = second.run(2 * n0);
    if (w2.near_zero) continue;
    out.count = w1.turns;
    out.certified = w1.turns == w2.turns;
    out.min_abs = std::min(w1.min_ratio, w2.min_ratio);
    out.depth = retry;
    out.locations = {radius};
    return out;
  }
  throw std::runtime_error("a zero sits on the contour after repeated radius nudges");
}

// ---------------------------------------------------------------------------
// Torus systems

namespace {

// f evaluated on an N x N grid through per-axis cos/sin tables.
std::vector<double> grid_values(const TrigPolynomialND& f, std::size_t n,
                                const std::vector<std::vector<double>>& cs,
                                const std::vector<std::vector<double>>& sn) {
  std::vector<double> out(n * n, f.c0());
  const auto& fr = f.frequencies();
  for (std::size_t j = 0; j < fr.size(); ++j) {
    const auto a = fr[j][0], b = fr[j][1];
    const auto ia = static_cast<std::size_t>(std::abs(a));
    const auto ib = static_cast<std::size_t>(std::abs(b));
    const double sa = a < 0 ? -1.0 : 1.0, sb = b < 0 ? -1.0 : 1.0;
    const double al = std::numbers::sqrt2 * f.alphas()[j];
    const double be = std::numbers::sqrt2 * f.betas()[j];
    for (std::size_t p = 0; p < n; ++p) {
      const double ca = cs[ia][p], sa_ = sa * sn[ia][p];
      for (std::size_t q = 0; q < n; ++q) {
        const double cb = cs[ib][q], sb_ = sb * sn[ib][q];
        const double c = ca * cb - sa_ * sb_;
        const double s = sa_ * cb + ca * sb_;
        out[p * n + q] += al * c + be * s;
      }
    }
  }
  return out;
}

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}

double torus_distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  double s = 0.0;
  for (int i = 0; i < 2; ++i) {
    double d = std::abs(a[i] - b[i]);
    d = std::min(d, kTwoPi - d);
    s += d * d;
  }
  return std::sqrt(s);
}

struct TorusGridCount {
  std::int64_t count = 0;
  std::size_t candidates = 0;
  std::size_t newton_failures = 0;
  double min_abs = 0.0;
  std::vector<std::array<double, 2>> zeros;
};

bool newton_refine(const TrigPolynomialND& f, const TrigPolynomialND& g, std::array<double, 2>& x,
                   double max_travel) {
  const auto start = x;
  double gf[2], gg[2];
  for (int it = 0; it < 50; ++it) {
    const double fv = f.eval_with_gradient(x, gf);
    const double gv = g.eval_with_gradient(x, gg);
    const double det = gf[0] * gg[1] - gf[1] * gg[0];
    if (det == 0.0 || !std::isfinite(det)) return false;
    const double dx = (fv * gg[1] - gv * gf[1]) / det;
    const double dy = (gv * gf[0] - fv * gg[0]) / det;
    x[0] -= dx;
    x[1] -= dy;
    if (!std::isfinite(x[0]) || !std::isfinite(x[1])) return false;
    if (std::hypot(x[0] - start[0], x[1] - start[1]) > max_travel) return false;
    if (std::hypot(dx, dy) < 1e-10) {
      x = {wrap(x[0]), wrap(x[1])};
      return true;
    }
  }
  return false;
}

TorusGridCount torus_grid_count(const TrigPolynomialND& f, const TrigPolynomialND& g,
                                std::size_t n) {
  const auto maxdeg = static_cast<std::size_t>(
      std::max(f.spectrum().max_abs_coordinate(), g.spectrum().max_abs_coordinate()));
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<std::vector<double>> cs(maxdeg + 1, std::vector<double>(n)),
      sn(maxdeg + 1, std::vector<double>(n));
  for (std::size_t k = 0; k <= maxdeg; ++k)
    for (std::size_t p = 0; p < n; ++p) {
      cs[k][p] = std::cos(static_cast<double>(k) * h * static_cast<double>(p));
      sn[k][p] = std::sin(static_cast<double>(k) * h * static_cast<double>(p));
    }
  const auto fv = grid_values(f, n, cs, sn);

  TorusGridCount out;
  out.min_abs = std::numeric_limits<double>::infinity();
  for (double v : fv) out.min_abs = std::min(out.min_abs, std::abs(v));

  auto F = [&](std::size_t p, std::size_t q) { return fv[(p % n) * n + (q % n)]; };
  struct Crossing {
    std::array<double, 2> x;
    double g;
  };
  // Edge crossing between grid nodes (p0, q0) and (p1, q1); the unwrapped
  // coordinates keep a cell's segments contiguous.
  auto crossing = [&](std::size_t p0, std::size_t q0, std::size_t p1, std::size_t q1) {
    const double a = F(p0, q0), b = F(p1, q1);
    const double s = a / (a - b);
    Crossing c;
    c.x = {h * (static_cast<double>(p0) + s * (static_cast<double>(p1) - static_cast<double>(p0))),
           h * (static_cast<double>(q0) + s * (static_cast<double>(q1) - static_cast<double>(q0)))};
    c.g = g(c.x);
    return c;
  };

  std::vector<std::pair<Crossing, Crossing>> segments;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      // Corners counterclockwise: (p,q) (p+1,q) (p+1,q+1) (p,q+1).
      const std::size_t cp[4] = {p, p + 1, p + 1, p};
      const std::size_t cq[4] = {q, q, q + 1, q + 1};
      std::vector<Crossing> xs;
      for (int e = 0; e < 4; ++e) {
        const int e1 = (e + 1) % 4;
        if ((F(cp[e], cq[e]) >= 0.0) != (F(cp[e1], cq[e1]) >= 0.0))
          xs.push_back(crossing(cp[e], cq[e], cp[e1], cq[e1]));
      }
      if (xs.size() == 2) {
        segments.emplace_back(xs[0], xs[1]);
      } else if (xs.size() == 4) {
        // Saddle: the center value decides which corners connect.
        const std::array<double, 2> mid = {h * (static_cast<double>(p) + 0.5),
                                           h * (static_cast<double>(q) + 0.5)};
        const bool center_pos = f(mid) >= 0.0;
        const bool corner0_pos = F(p, q) >= 0.0;
        if (center_pos == corner0_pos) {
          segments.emplace_back(xs[0], xs[1]);
          segments.emplace_back(xs[2], xs[3]);
        } else {
          segments.emplace_back(xs[3], xs[0]);
          segments.emplace_back(xs[1], xs[2]);
        }
      }
    }
  }

  for (const auto& [a, b] : segments) {
    if ((a.g >= 0.0) == (b.g >= 0.0)) continue;
    ++out.candidates;
    const double s = a.g / (a.g - b.g);
    std::array<double, 2> x = {a.x[0] + s * (b.x[0] - a.x[0]), a.x[1] + s * (b.x[1] - a.x[1])};
    if (!newton_refine(f, g, x, 4.0 * h)) {
      ++out.newton_failures;
      continue;
    }
    const bool dup = std::any_of(out.zeros.begin(), out.zeros.end(),
                                 [&](const auto& z) { return torus_distance(z, x) < 1e-6; });
    if (!dup) out.zeros.push_back(x);
  }
  out.count = static_cast<std::int64_t>(out.zeros.size());
  return out;
}

bool is_zero(const TrigPolynomialND& f) {
  auto zero = [](double v) { return v == 0.0; };
  return f.c0() == 0.0 && std::all_of(f.alphas().begin(), f.alphas().end(), zero) &&
         std::all_of(f.betas().begin(), f.betas().end(), zero);
}

}  // namespace

double kushnirenko_bound(const SpectrumND& a, const SpectrumND& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("bound implemented for n = 2");
  return 2.0 * polygon_mixed_area(hull_polygon(a), hull_polygon(b));
}

CountResult torus_common_zeros_count(const TrigPolynomialND& f, const TrigPolynomialND& g) {
  if (f.dim() != 2 || g.dim() != 2)
    throw std::invalid_argument("torus zero count implemented for 2 variables");
  const auto deg = std::max<std::int64_t>(
      1, std::max(f.spectrum().max_abs_coordinate(), g.spectrum().max_abs_coordinate()));
  const auto n = static_cast<std::size_t>(64 * deg);
  if (is_zero(f) || is_zero(g))
    throw std::invalid_argument("torus zero count of an identically zero polynomial");
  const double bound = kushnirenko_bound(f.spectrum(), g.spectrum());

  // Grid doublings until two consecutive levels agree and the finer one had
  // no Newton failures. Near-tangent pairs of zeros are what the coarse
  // levels miss.
  CountResult out;
  auto prev = torus_grid_count(f, g, n);
  out.min_abs = prev.min_abs;
  for (int level = 1; level <= 3; ++level) {
    auto cur = torus_grid_count(f, g, n << level);
    out.min_abs = std::min(out.min_abs, cur.min_abs);
    out.depth = level;
    const bool settled = cur.count == prev.count && cur.newton_failures == 0;
    prev = std::move(cur);
    if (settled) {
      out.certified = static_cast<double>(prev.count) <= bound + 1e-9;
      break;
    }
  }
  out.count = prev.count;
  for (const auto& z : prev.zeros) {
    out.locations.push_back(z[0]);
    out.locations.push_back(z[1]);
  }
  return out;
}

}  // namespace zerostat
