#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zerostat/ensembles.hpp"
#include "zerostat/geometry.hpp"
#include "zerostat/predictors.hpp"
#include "zerostat/spectrum_parse.hpp"

using namespace zerostat;
using std::numbers::pi;

namespace {

Polygon2D square() {
  const std::vector<Eigen::Vector2d> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  return convex_hull_2d(pts);
}

// Support function of a polygon.
double support(const Polygon2D& p, const Eigen::Vector2d& u) {
  double h = -1e300;
  for (const auto& v : p.vertices) h = std::max(h, v.dot(u));
  return h;
}

// Mixed area through the edges of A: V(A, B) = (1/2) sum_e h_B(n_e) |e|.
double mixed_area_by_edges(const Polygon2D& a, const Polygon2D& b) {
  const auto& v = a.vertices;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Eigen::Vector2d e = v[(i + 1) % v.size()] - v[i];
    const Eigen::Vector2d n(e.y(), -e.x());  // outward for counterclockwise order, |n| = |e|
    s += support(b, n);
  }
  return s / 2.0;
}

// Polygon approximating the ellipse {x : x^T M^{-1} x <= 1} from many support points.
Polygon2D ellipse_polygon(const Eigen::Matrix2d& m, int directions) {
  std::vector<Eigen::Vector2d> pts;
  for (int k = 0; k < directions; ++k) {
    const double t = 2 * pi * k / directions;
    const Eigen::Vector2d u(std::cos(t), std::sin(t));
    pts.push_back(m * u / std::sqrt(u.dot(m * u)));  // support point in direction u
  }
  return convex_hull_2d(pts);
}

}  // namespace

TEST_CASE("hulls") {
  const auto tri = convex_hull_2d(parse_complex_spectrum("0,1,i"));
  CHECK(tri.vertices.size() == 3);
  CHECK(polygon_perimeter(tri) == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-14));

  const auto seg = convex_hull_2d(ComplexSpectrum({0, Complex(0, 2 * pi)}));
  CHECK(seg.vertices.size() == 2);
  CHECK(polygon_perimeter(seg) == doctest::Approx(4 * pi));
  CHECK(polygon_area(seg) == 0.0);

  const std::vector<Eigen::Vector2d> pts = {{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}};
  CHECK(convex_hull_2d(pts).vertices.size() == 3);

  const auto sq = square();
  CHECK(polygon_perimeter(sq) == doctest::Approx(4));
  CHECK(polygon_area(sq) == doctest::Approx(1));

  // collinear points collapse
  const std::vector<Eigen::Vector2d> line = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(convex_hull_2d(line).vertices.size() == 2);
}

TEST_CASE("polygon mixed area matches the edge formula") {
  const auto tri = convex_hull_2d(parse_complex_spectrum("0,1,i"));
  const auto sq = square();
  CHECK(polygon_mixed_area(tri, tri) == doctest::Approx(polygon_area(tri)));
  CHECK(polygon_mixed_area(tri, sq) == doctest::Approx(mixed_area_by_edges(tri, sq)));
  CHECK(polygon_mixed_area(sq, tri) == doctest::Approx(mixed_area_by_edges(sq, tri)));
  for (std::uint64_t t = 0; t < 20; ++t) {
    RngStream rng(4, t);
    std::vector<Eigen::Vector2d> a, b;
    for (int i = 0; i < 7; ++i) a.emplace_back(rng.normal(), rng.normal());
    for (int i = 0; i < 5; ++i) b.emplace_back(rng.normal(), rng.normal());
    const auto pa = convex_hull_2d(a), pb = convex_hull_2d(b);
    CHECK(polygon_mixed_area(pa, pb) == doctest::Approx(mixed_area_by_edges(pa, pb)).epsilon(1e-10));
  }
}

TEST_CASE("Newton ellipsoid") {
  const auto m1 = newton_ellipsoid(SpectrumND::from_1d(Spectrum1D::range(-3, 3)));
  CHECK(m1.form()(0, 0) == doctest::Approx(3.0 * 4.0 / 3.0));
  const auto box = newton_ellipsoid(parse_spectrum_nd("(-1,-1)..(1,1)"));
  CHECK(box.form()(0, 0) == doctest::Approx(2.0 / 3.0));
  CHECK(box.form()(1, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(box.form()(0, 1) == doctest::Approx(0.0));
  const auto flat = newton_ellipsoid(parse_spectrum_nd("(1,0);(-1,0)"));
  CHECK(flat.form()(0, 0) == doctest::Approx(1.0));
  CHECK(flat.is_singular());
}

TEST_CASE("ellipsoid volume") {
  CHECK(ellipsoid_volume(Ellipsoid(Eigen::MatrixXd::Constant(1, 1, 2.25))) == doctest::Approx(3.0));
  CHECK(ellipsoid_volume(newton_ellipsoid(parse_spectrum_nd("(-1,-1)..(1,1)"))) ==
        doctest::Approx(2 * pi / 3));
  CHECK(ellipsoid_volume(newton_ellipsoid(parse_spectrum_nd("(1,0);(-1,0)"))) == 0.0);
  Eigen::MatrixXd bad(2, 2);
  bad << 1, 0, 0, -1;
  CHECK_THROWS(Ellipsoid(bad));
}

TEST_CASE("mixed area of ellipsoids") {
  const Ellipsoid disk1(Eigen::MatrixXd::Identity(2, 2));
  const Ellipsoid disk2(4.0 * Eigen::MatrixXd::Identity(2, 2));
  CHECK(std::abs(mixed_area(disk1, disk1) - pi) < 1e-9);
  CHECK(mixed_area(disk1, disk2) == doctest::Approx(2 * pi).epsilon(1e-10));

  Eigen::Matrix2d a, b;
  a << 1, 0, 0, 4;
  b << 4, 0, 0, 1;
  const double v = mixed_area(Ellipsoid(a), Ellipsoid(b));
  const double oracle = polygon_mixed_area(ellipse_polygon(a, 10000), ellipse_polygon(b, 10000));
  CHECK(std::abs(v - oracle) / oracle < 1e-6);
}

TEST_CASE("kappa curve length") {
  CHECK(kappa_length(Spectrum1D::range(-1, 1)) == doctest::Approx(2 * pi * std::sqrt(2.0 / 3.0)));
  for (std::int64_t k : {1, 3, 7}) CHECK(kappa_length(Spectrum1D({-k, k})) == doctest::Approx(2 * pi * k));
  CHECK(kappa_length(Spectrum1D({0})) == 0.0);
  const auto s = Spectrum1D::range(-3, 3);
  for (double t : {0.0, 0.7, 3.0}) CHECK(kappa_point(s, t).norm() == doctest::Approx(1.0));
}

TEST_CASE("Crofton estimates") {
  const auto gc = crofton_estimate(great_circle(3), 2000, 1);
  CHECK(gc.mean == doctest::Approx(2.0));
  CHECK(gc.std_error == doctest::Approx(0.0));
  const auto kc = crofton_estimate(kappa_curve(Spectrum1D::range(-3, 3)), 4000, 2);
  CHECK(std::abs(kc.mean - 4.0) <= 3 * kc.std_error);
  CHECK_THROWS(crofton_estimate(great_circle(3), 0, 1));
}

TEST_CASE("pseudovolume consistency cases") {
  const ComplexPolytope tri(1, {{0}, {1}, {Complex(0, 1)}});
  const auto est = pseudovolume_estimate(tri, 100000, 3);
  CHECK(est.faces.size() == 3);
  for (const auto& f : est.faces) {
    CHECK(f.exact_angle == doctest::Approx(0.5));
    CHECK(f.cosine == doctest::Approx(1.0));
  }
  CHECK(std::abs(est.value - (2 + std::sqrt(2.0)) / 2) <= 3 * est.std_error + 1e-12);
  CHECK(*pseudovolume_reference(tri) == doctest::Approx((2 + std::sqrt(2.0)) / 2));

  const ComplexPolytope seg(1, {{0}, {Complex(0, 2 * pi)}});
  const auto es = pseudovolume_estimate(seg, 100000, 3);
  CHECK(std::abs(es.value - 2 * pi) <= 3 * es.std_error + 1e-12);

  const ComplexPolytope sq(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto eq = pseudovolume_estimate(sq, 100000, 3);
  CHECK(std::abs(eq.value - 1.0) <= 3 * eq.std_error + 1e-12);
  CHECK(*pseudovolume_reference(sq) == doctest::Approx(1.0));

  CHECK_THROWS(pseudovolume_estimate(ComplexPolytope(3, {{0, 0, 0}}), 10, 0));
}
