#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zerostat/spectra.hpp"

namespace zerostat {

// ---------------------------------------------------------------------------
// Polygons

/// Convex polygon, counterclockwise, no three consecutive collinear vertices.
/// A segment has 2 vertices and a point 1.
struct Polygon2D {
  std::vector<Eigen::Vector2d> vertices;
};

Polygon2D convex_hull_2d(std::span<const Eigen::Vector2d> points);
/// Hull of the spectrum read as points of R^2.
Polygon2D convex_hull_2d(const ComplexSpectrum& s);

/// A segment's boundary is traversed twice, so its perimeter is 2 * length.
double polygon_perimeter(const Polygon2D& p);
double polygon_area(const Polygon2D& p);

Polygon2D minkowski_sum(const Polygon2D& a, const Polygon2D& b);
/// (area(A + B) - area(A) - area(B)) / 2.
double polygon_mixed_area(const Polygon2D& a, const Polygon2D& b);

/// Volume of conv(spectrum) for dim 1 (length) or dim 2 (area).
double hull_volume(const SpectrumND& s);
Polygon2D hull_polygon(const SpectrumND& s);

// ---------------------------------------------------------------------------
// Ellipsoids

/// Centered ellipsoid given by its support function h(x) = sqrt(x^T M x),
/// M symmetric positive semidefinite.
class Ellipsoid {
 public:
  explicit Ellipsoid(Eigen::MatrixXd form);

  std::size_t dim() const { return static_cast<std::size_t>(form_.rows()); }
  const Eigen::MatrixXd& form() const { return form_; }
  bool is_singular(double tol = 1e-12) const;

  double support(const Eigen::VectorXd& x) const;
  Ellipsoid scaled(double t) const;

 private:
  Eigen::MatrixXd form_;
};

/// M = (1/#L) sum l l^T.
Ellipsoid newton_ellipsoid(const SpectrumND& s);

/// omega_n sqrt(det M); 0 for singular M.
double ellipsoid_volume(const Ellipsoid& e);

inline constexpr int kDefaultQuadratureNodes = 4096;

/// Area of a planar convex body from its support function,
///   (1/2) integral_0^{2pi} (h^2 - h'^2) dt,
/// by the trapezoid rule. `h` returns (h, h') at angle t.
double support_area(const std::function<std::pair<double, double>(double)>& h,
                    int nodes = kDefaultQuadratureNodes);

/// Mixed area V(A, B) of two nonsingular planar ellipsoids.
double mixed_area(const Ellipsoid& a, const Ellipsoid& b, int nodes = kDefaultQuadratureNodes);

// ---------------------------------------------------------------------------
// Spherical curves and the kappa embedding

/// Closed curve t in [0, 2pi) -> unit sphere of R^dim. `degree` is the
/// largest frequency in t, used to size sampling grids.
class SphericalCurve {
 public:
  using Map = std::function<Eigen::VectorXd(double)>;

  SphericalCurve(std::size_t dim, std::int64_t degree, Map point, Map derivative);

  std::size_t dim() const { return dim_; }
  std::int64_t degree() const { return degree_; }
  Eigen::VectorXd point(double t) const { return point_(t); }
  Eigen::VectorXd derivative(double t) const { return derivative_(t); }

  /// Trapezoid-rule length.
  double length(int nodes = kDefaultQuadratureNodes) const;

 private:
  std::size_t dim_;
  std::int64_t degree_;
  Map point_;
  Map derivative_;
};

/// (cos t, sin t, 0, ..., 0) in R^dim.
SphericalCurve great_circle(std::size_t dim);

/// kappa(t) = F_t / sqrt(#L), in coordinates of the orthonormal basis
/// ordered as TrigPolynomial::coordinates.
Eigen::VectorXd kappa_point(const Spectrum1D& s, double theta);
Eigen::VectorXd kappa_derivative(const Spectrum1D& s, double theta);
/// |d kappa / dt| at theta.
double kappa_speed(const Spectrum1D& s, double theta);
/// Length of kappa(S) by quadrature of the speed.
double kappa_length(const Spectrum1D& s, int nodes = kDefaultQuadratureNodes);
SphericalCurve kappa_curve(const Spectrum1D& s);

struct CroftonEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t discarded = 0;
  std::vector<std::int64_t> counts;  // per trial, -1 for discarded
};

/// Average number of sign changes of t -> <K(t), xi> over standard Gaussian xi.
/// Trial i draws xi from RngStream(seed, i).
CroftonEstimate crofton_estimate(const SphericalCurve& curve, std::size_t trials,
                                 std::uint64_t seed);

// ---------------------------------------------------------------------------
// Complex polytopes and the pseudovolume

/// Convex polytope in C^n, n <= 2. Vertices are stored as real 2n-vectors
/// (re z1, im z1, re z2, im z2, ...), so multiplication by i acts as
/// (x, y) -> (-y, x) on each pair.
class ComplexPolytope {
 public:
  ComplexPolytope(std::size_t n, std::vector<std::vector<Complex>> vertices,
                  std::optional<std::vector<std::vector<std::size_t>>> faces = std::nullopt);

  std::size_t n() const { return n_; }
  const std::vector<Eigen::VectorXd>& vertices() const { return vertices_; }
  const std::optional<std::vector<std::vector<std::size_t>>>& faces() const { return faces_; }

 private:
  std::size_t n_;
  std::vector<Eigen::VectorXd> vertices_;
  std::optional<std::vector<std::vector<std::size_t>>> faces_;
};

struct FaceContribution {
  std::vector<std::size_t> vertex_indices;
  double volume = 0.0;        // n-dimensional volume of the face
  double angle = 0.0;         // Monte Carlo exterior angle, full angle = 1
  double angle_std_error = 0.0;
  double exact_angle = 0.0;   // same angle from the normal-cone arcs
  double cosine = 0.0;        // cos(T^perp, i T)
};

struct PseudovolumeEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::vector<FaceContribution> faces;  // faces with a positive angle estimate
};

inline constexpr std::size_t kDefaultAngleSamples = 200000;

/// Enumerates the n-dimensional faces and sums c(F) A(F) vol_n(F). A(F) is
/// the fraction of uniform unit directions u in T_F^perp whose functional
/// <u, .> is maximized over the polytope on all of F; it is estimated from
/// `angle_samples` draws per face. c(F) = |det(Q^T P)| for orthonormal bases
/// Q of T_F^perp and P of i T_F.
PseudovolumeEstimate pseudovolume_estimate(const ComplexPolytope& p,
                                           std::size_t angle_samples = kDefaultAngleSamples,
                                           std::uint64_t seed = 0);
double pseudovolume(const ComplexPolytope& p, std::size_t angle_samples = kDefaultAngleSamples,
                    std::uint64_t seed = 0);

/// Closed-form value the pseudovolume must reproduce, when one is known:
/// the semiperimeter of the polygon for n = 1, and vol_2 for a polytope lying
/// in the real part of C^2.
std::optional<double> pseudovolume_reference(const ComplexPolytope& p);

}  // namespace zerostat
