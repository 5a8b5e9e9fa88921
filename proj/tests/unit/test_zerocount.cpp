#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zerostat/ensembles.hpp"
#include "zerostat/spectrum_parse.hpp"
#include "zerostat/zerocount.hpp"

using namespace zerostat;
using std::numbers::pi;

TEST_CASE("real roots of fixed polynomials") {
  CHECK(real_roots_count(RealPolynomial{{1, 0, 1}}).count == 0);
  const auto r = real_roots_count(RealPolynomial{{-6, 11, -6, 1}});
  CHECK(r.count == 3);
  CHECK(r.certified);
  CHECK(sturm_real_roots(RealPolynomial{{-6, 11, -6, 1}}) == 3);
  // (x - 1)^2 (x + 2): two distinct real roots
  CHECK(sturm_real_roots(RealPolynomial{{2, -3, 0, 1}}) == 2);
  CHECK_THROWS(real_roots_count(RealPolynomial{{0, 0}}));
}

TEST_CASE("companion against Sturm at degree 20") {
  int agree = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    RngStream rng(12, i);
    const auto p = sample_kac(20, rng);
    agree += companion_real_roots(p) == sturm_real_roots(p);
  }
  CHECK(agree >= 999);
}

TEST_CASE("Aberth against companion") {
  for (int m : {30, 100}) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      RngStream rng(13, i);
      const auto p = sample_kac(m, rng);
      CHECK(aberth_real_roots(p) == companion_real_roots(p));
    }
  }
}

TEST_CASE("high degree counts are certified") {
  for (std::uint64_t i = 0; i < 5; ++i) {
    RngStream rng(14, i);
    const auto r = real_roots_count(sample_kac(1000, rng));
    CHECK(r.certified);
    CHECK(r.count >= 0);
  }
}

TEST_CASE("circle zeros of fixed trig polynomials") {
  const auto s1 = Spectrum1D({-1, 1});
  const double one[] = {1.0}, zero[] = {0.0};
  CHECK(circle_zeros_count(TrigPolynomial::from_raw(s1, 0, one, zero)).count == 2);

  const auto s5 = Spectrum1D({-5, 5});
  const double c5[] = {1.0, 0.1};  // alpha, beta on the orthonormal basis
  CHECK(circle_zeros_count(TrigPolynomial::from_coordinates(s5, c5)).count == 10);

  const auto s01 = Spectrum1D::range(-1, 1);
  const auto pos = TrigPolynomial::from_raw(s01, 3.0, one, zero);
  const auto r = circle_zeros_count(pos);
  CHECK(r.count == 0);
  CHECK(r.certified);
}

TEST_CASE("zero locations are refined") {
  const auto s = Spectrum1D({-2, 2});
  const double c[] = {1.0, 0.0};
  const auto r = circle_zeros_count(TrigPolynomial::from_coordinates(s, c));
  REQUIRE(r.locations.size() == 4);
  for (double t : r.locations) CHECK(std::abs(std::cos(2 * t)) < 1e-10);
}

TEST_CASE("hyperplane sections of the kappa curve equal circle zeros") {
  const auto s = Spectrum1D::range(-3, 3);
  const auto curve = kappa_curve(s);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    RngStream rng(15, i);
    const auto f = sample_trig(s, rng);
    const auto c = f.coordinates();
    const Eigen::VectorXd xi = Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
    CHECK(hyperplane_curve_intersections(curve, xi).count == circle_zeros_count(f).count);
  }
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(3);
  e0[0] = 1.0;
  CHECK(hyperplane_curve_intersections(kappa_curve(Spectrum1D::range(-1, 1)), e0).count == 0);
  Eigen::VectorXd g(3);
  g << 0.3, -1.2, 0.8;
  CHECK(hyperplane_curve_intersections(great_circle(3), g).count == 2);
  CHECK_THROWS(hyperplane_curve_intersections(great_circle(3), Eigen::VectorXd::Zero(3)));
}

TEST_CASE("disk zeros of exponential sums") {
  const ExpSum integers(ComplexSpectrum({0, Complex(0, -2 * pi)}), {-1.0, 1.0});
  const auto r = disk_zeros_count(integers, 10.5);
  CHECK(r.count == 21);
  CHECK(r.certified);
  for (double rad : {5.5, 15.5, 40.5})
    CHECK(disk_zeros_count(integers, rad).count == 2 * static_cast<std::int64_t>(rad) + 1);

  const ExpSum sine(ComplexSpectrum({Complex(0, -1), Complex(0, 1)}), {1.0, -1.0});
  CHECK(disk_zeros_count(sine, 10.0).count == 7);

  const ExpSum single(ComplexSpectrum({1}), {1.0});
  CHECK(disk_zeros_count(single, 5.0).count == 0);

  // Off-center disk around z = 3: contains 1..5
  CHECK(disk_zeros_count(integers, 2.5, Complex(3, 0)).count == 5);
}

TEST_CASE("torus common zeros") {
  const auto s = parse_spectrum_nd("(-1,-1)..(1,1)");
  // f = cos t1, g = cos t2 on the orthonormal basis: alpha = 1/sqrt2 at (1,0) and (0,1)
  auto make = [&](SpectrumND::Point hot, double c0, double alpha) {
    std::vector<double> a(s.positive_half().size(), 0.0), b(a.size(), 0.0);
    const auto half = s.positive_half();
    for (std::size_t j = 0; j < half.size(); ++j)
      if (half[j] == hot) a[j] = alpha;
    return TrigPolynomialND(s, c0, a, b);
  };
  const auto f = make({1, 0}, 0.0, 1 / std::sqrt(2.0));
  const auto g = make({0, 1}, 0.0, 1 / std::sqrt(2.0));
  const auto r = torus_common_zeros_count(f, g);
  CHECK(r.count == 4);
  CHECK(r.certified);
  for (std::size_t k = 0; k < r.locations.size(); ++k)
    CHECK(std::abs(std::cos(r.locations[k])) < 1e-9);

  const auto far = make({1, 0}, -2.0, 1 / std::sqrt(2.0));
  CHECK(torus_common_zeros_count(far, g).count == 0);

  for (std::uint64_t i = 0; i < 100; ++i) {
    RngStream rng(16, i);
    const auto fs = sample_trig_system({s, s}, rng);
    const auto c = torus_common_zeros_count(fs[0], fs[1]);
    CHECK(c.count <= 8);
    CHECK(c.count % 2 == 0);
  }
  CHECK(kushnirenko_bound(s, s) == doctest::Approx(8.0));
}
