#include "zerostat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "zerostat/ensembles.hpp"
#include "zerostat/zerocount.hpp"

namespace zerostat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace

// ---------------------------------------------------------------------------
// Polygons

Polygon2D convex_hull_2d(std::span<const Eigen::Vector2d> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  std::vector<Eigen::Vector2d> pts(points.begin(), points.end());
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double eps = 1e-12 * std::max(1.0, scale);
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const auto& a, const auto& b) { return (a - b).norm() <= eps; }),
            pts.end());
  if (pts.size() < 3) return Polygon2D{pts};

  // Andrew's monotone chain; collinear points are dropped.
  const double area_eps = eps * std::max(1.0, scale);
  std::vector<Eigen::Vector2d> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= area_eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= area_eps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return Polygon2D{hull};
}

Polygon2D convex_hull_2d(const ComplexSpectrum& s) {
  std::vector<Eigen::Vector2d> pts;
  for (const auto& z : s.points()) pts.emplace_back(z.real(), z.imag());
  return convex_hull_2d(pts);
}

double polygon_perimeter(const Polygon2D& p) {
  const auto& v = p.vertices;
  if (v.size() < 2) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += (v[(i + 1) % v.size()] - v[i]).norm();
  return s;
}

double polygon_area(const Polygon2D& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a.x() * b.y() - a.y() * b.x();
  }
  return std::abs(s) / 2.0;
}

Polygon2D minkowski_sum(const Polygon2D& a, const Polygon2D& b) {
  std::vector<Eigen::Vector2d> sums;
  sums.reserve(a.vertices.size() * b.vertices.size());
  for (const auto& p : a.vertices)
    for (const auto& q : b.vertices) sums.push_back(p + q);
  return convex_hull_2d(sums);
}

double polygon_mixed_area(const Polygon2D& a, const Polygon2D& b) {
  return (polygon_area(minkowski_sum(a, b)) - polygon_area(a) - polygon_area(b)) / 2.0;
}

Polygon2D hull_polygon(const SpectrumND& s) {
  if (s.dim() != 2) throw std::invalid_argument("hull polygon needs a dimension 2 spectrum");
  std::vector<Eigen::Vector2d> pts;
  for (const auto& p : s.points())
    pts.emplace_back(static_cast<double>(p[0]), static_cast<double>(p[1]));
  return convex_hull_2d(pts);
}

double hull_volume(const SpectrumND& s) {
  if (s.dim() == 1) return static_cast<double>(s.points().back()[0] - s.points().front()[0]);
  if (s.dim() == 2) return polygon_area(hull_polygon(s));
  throw std::invalid_argument("hull volume is implemented for dimension 1 and 2 only");
}

// ---------------------------------------------------------------------------
// Ellipsoids

Ellipsoid::Ellipsoid(Eigen::MatrixXd form) : form_(std::move(form)) {
  if (form_.rows() == 0 || form_.rows() != form_.cols())
    throw std::invalid_argument("ellipsoid form must be a nonempty square matrix");
  const double scale = std::max(1.0, form_.cwiseAbs().maxCoeff());
  if ((form_ - form_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("ellipsoid form must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-12 * scale)
    throw std::invalid_argument("ellipsoid form must be positive semidefinite");
}

bool Ellipsoid::is_singular(double tol) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form_, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return ev.minCoeff() <= tol * std::max(1.0, ev.maxCoeff());
}

double Ellipsoid::support(const Eigen::VectorXd& x) const {
  return std::sqrt(std::max(0.0, x.dot(form_ * x)));
}

Ellipsoid Ellipsoid::scaled(double t) const { return Ellipsoid(form_ * (t * t)); }

Ellipsoid newton_ellipsoid(const SpectrumND& s) {
  const auto n = static_cast<Eigen::Index>(s.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& p : s.points()) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = static_cast<double>(p[static_cast<std::size_t>(i)]);
    m += v * v.transpose();
  }
  m /= static_cast<double>(s.size());
  return Ellipsoid(m);
}

double ellipsoid_volume(const Ellipsoid& e) {
  if (e.is_singular()) return 0.0;
  const double n = static_cast<double>(e.dim());
  const double unit_ball = std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
  return unit_ball * std::sqrt(e.form().determinant());
}

double support_area(const std::function<std::pair<double, double>(double)>& h, int nodes) {
  if (nodes < 8) throw std::invalid_argument("too few quadrature nodes");
  double s = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const auto [v, dv] = h(kTwoPi * k / nodes);
    s += v * v - dv * dv;
  }
  return 0.5 * s * kTwoPi / nodes;
}

namespace {

// Support function of a planar ellipsoid and its angular derivative.
std::pair<double, double> ellipse_support(const Eigen::Matrix2d& m, double t) {
  const Eigen::Vector2d u(std::cos(t), std::sin(t));
  const Eigen::Vector2d du(-std::sin(t), std::cos(t));
  const double h = std::sqrt(u.dot(m * u));
  return {h, du.dot(m * u) / h};
}

}  // namespace

double mixed_area(const Ellipsoid& a, const Ellipsoid& b, int nodes) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("mixed area needs dimension 2");
  if (a.is_singular() || b.is_singular())
    throw std::invalid_argument("mixed area needs nonsingular ellipsoids");
  const Eigen::Matrix2d ma = a.form();
  const Eigen::Matrix2d mb = b.form();
  const double area_a = support_area([&](double t) { return ellipse_support(ma, t); }, nodes);
  const double area_b = support_area([&](double t) { return ellipse_support(mb, t); }, nodes);
  const double area_sum = support_area(
      [&](double t) {
        const auto [ha, dha] = ellipse_support(ma, t);
        const auto [hb, dhb] = ellipse_support(mb, t);
        return std::pair{ha + hb, dha + dhb};
      },
      nodes);
  return (area_sum - area_a - area_b) / 2.0;
}

// ---------------------------------------------------------------------------
// Spherical curves

SphericalCurve::SphericalCurve(std::size_t dim, std::int64_t degree, Map point, Map derivative)
    : dim_(dim), degree_(degree), point_(std::move(point)), derivative_(std::move(derivative)) {
  if (dim_ == 0) throw std::invalid_argument("curve dimension must be positive");
  if (degree_ < 0) throw std::invalid_argument("curve degree must be nonnegative");
  for (int k = 0; k < 64; ++k) {
    const auto p = point_(kTwoPi * k / 64.0);
    if (static_cast<std::size_t>(p.size()) != dim_)
      throw std::invalid_argument("curve point has the wrong dimension");
    if (std::abs(p.norm() - 1.0) > 1e-10)
      throw std::invalid_argument("curve leaves the unit sphere");
  }
}

double SphericalCurve::length(int nodes) const {
  double s = 0.0;
  for (int k = 0; k < nodes; ++k) s += derivative_(kTwoPi * k / nodes).norm();
  return s * kTwoPi / nodes;
}

SphericalCurve great_circle(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("a great circle needs dimension >= 2");
  const auto n = static_cast<Eigen::Index>(dim);
  return SphericalCurve(
      dim, 1,
      [n](double t) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
        v[0] = std::cos(t);
        v[1] = std::sin(t);
        return v;
      },
      [n](double t) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
        v[0] = -std::sin(t);
        v[1] = std::cos(t);
        return v;
      });
}

namespace {

void require_symmetric(const Spectrum1D& s) {
  if (!is_centrally_symmetric(s))
    throw std::invalid_argument("kappa embedding needs a centrally symmetric spectrum");
}

}  // namespace

Eigen::VectorXd kappa_point(const Spectrum1D& s, double theta) {
  require_symmetric(s);
  Eigen::VectorXd v(static_cast<Eigen::Index>(s.size()));
  Eigen::Index i = 0;
  if (s.contains(0)) v[i++] = 1.0;
  for (auto k : s.positive()) {
    const double a = static_cast<double>(k) * theta;
    v[i++] = std::numbers::sqrt2 * std::cos(a);
    v[i++] = std::numbers::sqrt2 * std::sin(a);
  }
  return v / std::sqrt(static_cast<double>(s.size()));
}

Eigen::VectorXd kappa_derivative(const Spectrum1D& s, double theta) {
  require_symmetric(s);
  Eigen::VectorXd v(static_cast<Eigen::Index>(s.size()));
  Eigen::Index i = 0;
  if (s.contains(0)) v[i++] = 0.0;
  for (auto k : s.positive()) {
    const double kd = static_cast<double>(k);
    v[i++] = -std::numbers::sqrt2 * kd * std::sin(kd * theta);
    v[i++] = std::numbers::sqrt2 * kd * std::cos(kd * theta);
  }
  return v / std::sqrt(static_cast<double>(s.size()));
}

double kappa_speed(const Spectrum1D& s, double theta) { return kappa_derivative(s, theta).norm(); }

double kappa_length(const Spectrum1D& s, int nodes) {
  require_symmetric(s);
  double sum = 0.0;
  for (int k = 0; k < nodes; ++k) sum += kappa_speed(s, kTwoPi * k / nodes);
  return sum * kTwoPi / nodes;
}

SphericalCurve kappa_curve(const Spectrum1D& s) {
  require_symmetric(s);
  return SphericalCurve(
      s.size(), degree(s), [s](double t) { return kappa_point(s, t); },
      [s](double t) { return kappa_derivative(s, t); });
}

CroftonEstimate crofton_estimate(const SphericalCurve& curve, std::size_t trials,
                                 std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("crofton estimate needs at least one trial");
  CroftonEstimate out;
  out.counts.reserve(trials);
  double sum = 0.0, sum_sq = 0.0;
  std::size_t used = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    RngStream rng(seed, t);
    Eigen::VectorXd xi(static_cast<Eigen::Index>(curve.dim()));
    for (Eigen::Index i = 0; i < xi.size(); ++i) xi[i] = rng.normal();
    const auto r = hyperplane_curve_intersections(curve, xi);
    if (!r.certified) {
      ++out.discarded;
      out.counts.push_back(-1);
      continue;
    }
    out.counts.push_back(r.count);
    const auto c = static_cast<double>(r.count);
    sum += c;
    sum_sq += c * c;
    ++used;
  }
  if (used == 0) throw std::runtime_error("every crofton trial was discarded");
  out.mean = sum / static_cast<double>(used);
  if (used > 1) {
    const double var = std::max(0.0, (sum_sq - used * out.mean * out.mean) / (used - 1.0));
    out.std_error = std::sqrt(var / static_cast<double>(used));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pseudovolume

namespace {

// Orthonormal basis of the column span, rank decided relative to the
// largest singular value.
Eigen::MatrixXd column_basis(const Eigen::MatrixXd& a, double rel_tol = 1e-9) {
  if (a.cols() == 0) return Eigen::MatrixXd(a.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * std::max(1.0, sv.size() ? sv[0] : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXd complement_basis(const Eigen::MatrixXd& basis) {
  const auto d = basis.rows();
  const auto k = basis.cols();
  if (k == 0) return Eigen::MatrixXd::Identity(d, d);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
  return q.rightCols(d - k);
}

Eigen::MatrixXd multiply_by_i(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (Eigen::Index r = 0; r + 1 < a.rows(); r += 2) {
    out.row(r) = -a.row(r + 1);
    out.row(r + 1) = a.row(r);
  }
  return out;
}

struct FaceGeometry {
  std::vector<std::size_t> members;
  Eigen::MatrixXd tangent;  // 2n x n orthonormal
  Eigen::MatrixXd normal;   // 2n x n orthonormal, T^perp
};

// Affine span of the given vertices: orthonormal basis of the direction space.
Eigen::MatrixXd affine_basis(const std::vector<Eigen::VectorXd>& verts,
                             const std::vector<std::size_t>& idx) {
  const auto d = verts.front().size();
  Eigen::MatrixXd diffs(d, static_cast<Eigen::Index>(idx.size()) - 1);
  for (std::size_t j = 1; j < idx.size(); ++j)
    diffs.col(static_cast<Eigen::Index>(j) - 1) = verts[idx[j]] - verts[idx[0]];
  return column_basis(diffs);
}

// Vertices lying in the affine plane through `origin` with direction `basis`.
std::vector<std::size_t> plane_members(const std::vector<Eigen::VectorXd>& verts,
                                       const Eigen::VectorXd& origin, const Eigen::MatrixXd& basis,
                                       double tol) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Eigen::VectorXd d = verts[i] - origin;
    if ((d - basis * (basis.transpose() * d)).norm() <= tol) out.push_back(i);
  }
  return out;
}

double face_volume(const std::vector<Eigen::VectorXd>& verts, const FaceGeometry& f) {
  const auto& origin = verts[f.members.front()];
  if (f.tangent.cols() == 1) {
    double lo = 0.0, hi = 0.0;
    for (auto i : f.members) {
      const double t = f.tangent.col(0).dot(verts[i] - origin);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    return hi - lo;
  }
  std::vector<Eigen::Vector2d> local;
  for (auto i : f.members) local.push_back(f.tangent.transpose() * (verts[i] - origin));
  return polygon_area(convex_hull_2d(local));
}

// Offsets of every vertex from the face, projected into T^perp. The
// functional <u, .> with u in T^perp peaks on the face iff <u, w> <= 0 for
// all of these.
std::vector<Eigen::VectorXd> normal_offsets(const std::vector<Eigen::VectorXd>& verts,
                                            const FaceGeometry& f) {
  std::vector<Eigen::VectorXd> out;
  const auto& origin = verts[f.members.front()];
  for (const auto& v : verts) out.push_back(f.normal.transpose() * (v - origin));
  return out;
}

bool peaks_on_face(const Eigen::VectorXd& u, const std::vector<Eigen::VectorXd>& offsets,
                   double slack) {
  for (const auto& w : offsets)
    if (u.dot(w) > slack) return false;
  return true;
}

// Exact measure of the normal cone in T^perp for n <= 2.
double exact_exterior_angle(const std::vector<Eigen::VectorXd>& offsets, double scale) {
  const auto dim = offsets.front().size();
  const double slack = 1e-9 * scale;
  if (dim == 1) {
    Eigen::VectorXd u(1);
    int hits = 0;
    for (double s : {1.0, -1.0}) {
      u[0] = s;
      hits += peaks_on_face(u, offsets, slack) ? 1 : 0;
    }
    return hits / 2.0;
  }
  // dim == 2: feasibility only changes at the arc endpoints phi(w) +- pi/2.
  std::vector<double> cuts;
  for (const auto& w : offsets) {
    if (w.norm() <= slack) continue;
    const double phi = std::atan2(w[1], w[0]);
    for (double c : {phi + std::numbers::pi / 2, phi - std::numbers::pi / 2})
      cuts.push_back(std::fmod(c + 2 * kTwoPi, kTwoPi));
  }
  if (cuts.empty()) return 1.0;
  std::sort(cuts.begin(), cuts.end());
  double measure = 0.0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = i + 1 < cuts.size() ? cuts[i + 1] : cuts.front() + kTwoPi;
    if (b - a <= 1e-15) continue;
    const double mid = (a + b) / 2;
    Eigen::VectorXd u(2);
    u << std::cos(mid), std::sin(mid);
    if (peaks_on_face(u, offsets, 0.0)) measure += b - a;
  }
  return measure / kTwoPi;
}

}  // namespace

ComplexPolytope::ComplexPolytope(std::size_t n, std::vector<std::vector<Complex>> vertices,
                                 std::optional<std::vector<std::vector<std::size_t>>> faces)
    : n_(n), faces_(std::move(faces)) {
  if (n_ == 0) throw std::invalid_argument("complex dimension must be positive");
  if (vertices.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  for (const auto& z : vertices) {
    if (z.size() != n_) throw std::invalid_argument("vertex of the wrong complex dimension");
    Eigen::VectorXd v(static_cast<Eigen::Index>(2 * n_));
    for (std::size_t i = 0; i < n_; ++i) {
      v[static_cast<Eigen::Index>(2 * i)] = z[i].real();
      v[static_cast<Eigen::Index>(2 * i + 1)] = z[i].imag();
    }
    vertices_.push_back(std::move(v));
  }
  if (faces_) {
    for (const auto& f : *faces_) {
      if (f.empty()) throw std::invalid_argument("empty face in face list");
      for (auto i : f)
        if (i >= vertices_.size()) throw std::invalid_argument("face index out of range");
    }
  }
}

PseudovolumeEstimate pseudovolume_estimate(const ComplexPolytope& p, std::size_t angle_samples,
                                           std::uint64_t seed) {
  const auto n = p.n();
  if (n > 2) throw std::invalid_argument("pseudovolume is implemented for n <= 2 only");
  if (angle_samples == 0) throw std::invalid_argument("angle_samples must be positive");
  const auto& verts = p.vertices();
  const auto nv = verts.size();

  double scale = 1.0;
  for (const auto& v : verts) scale = std::max(scale, v.cwiseAbs().maxCoeff());
  const double member_tol = 1e-9 * scale;

  std::vector<std::size_t> all(nv);
  for (std::size_t i = 0; i < nv; ++i) all[i] = i;
  if (nv < n + 1 || static_cast<std::size_t>(affine_basis(verts, all).cols()) < n)
    throw std::invalid_argument("vertex set does not span an n-dimensional polytope");

  // Candidate faces: closures of affinely independent (n+1)-subsets.
  std::vector<FaceGeometry> candidates;
  std::set<std::vector<std::size_t>> seen;
  auto consider = [&](const std::vector<std::size_t>& subset, bool listed) {
    const auto basis = affine_basis(verts, subset);
    if (static_cast<std::size_t>(basis.cols()) != n) {
      if (listed) throw std::invalid_argument("listed face is not n-dimensional");
      return;
    }
    auto members = plane_members(verts, verts[subset.front()], basis, member_tol);
    if (listed) {
      auto sorted = subset;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != members)
        throw std::invalid_argument("listed face is not the full intersection with its plane");
    }
    if (!seen.insert(members).second) return;
    candidates.push_back({members, basis, complement_basis(basis)});
  };

  if (p.faces()) {
    for (const auto& f : *p.faces()) consider(f, true);
  } else {
    std::vector<std::size_t> subset(n + 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
      if (depth == n + 1) {
        consider(subset, false);
        return;
      }
      for (std::size_t i = start; i < nv; ++i) {
        subset[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  }

  PseudovolumeEstimate out;
  double var = 0.0;
  for (std::size_t fi = 0; fi < candidates.size(); ++fi) {
    const auto& f = candidates[fi];
    const auto offsets = normal_offsets(verts, f);
    const double exact = exact_exterior_angle(offsets, scale);
    if (exact <= 0.0) {
      if (p.faces()) throw std::invalid_argument("listed face is not a face of the polytope");
      continue;
    }
    const Eigen::MatrixXd itangent = column_basis(multiply_by_i(f.tangent));
    const double cosine =
        itangent.cols() == f.normal.cols()
            ? std::abs((f.normal.transpose() * itangent).determinant())
            : 0.0;
    const double volume = face_volume(verts, f);

    FaceContribution fc;
    fc.vertex_indices = f.members;
    fc.volume = volume;
    fc.cosine = cosine;
    fc.exact_angle = exact;
    if (cosine > 1e-12 && volume > 0.0) {
      RngStream rng(seed, fi);
      const double slack = 1e-9 * scale;
      std::size_t hits = 0;
      Eigen::VectorXd g(static_cast<Eigen::Index>(n));
      for (std::size_t s = 0; s < angle_samples; ++s) {
        for (Eigen::Index i = 0; i < g.size(); ++i) g[i] = rng.normal();
        if (peaks_on_face(g / g.norm(), offsets, slack)) ++hits;
      }
      const double a = static_cast<double>(hits) / static_cast<double>(angle_samples);
      fc.angle = a;
      fc.angle_std_error = std::sqrt(a * (1.0 - a) / static_cast<double>(angle_samples));
      const double w = cosine * volume;
      out.value += w * a;
      var += w * w * fc.angle_std_error * fc.angle_std_error;
    }
    out.faces.push_back(std::move(fc));
  }
  out.std_error = std::sqrt(var);
  return out;
}

double pseudovolume(const ComplexPolytope& p, std::size_t angle_samples, std::uint64_t seed) {
  return pseudovolume_estimate(p, angle_samples, seed).value;
}

std::optional<double> pseudovolume_reference(const ComplexPolytope& p) {
  const auto& verts = p.vertices();
  if (p.n() == 1) {
    std::vector<Eigen::Vector2d> pts;
    for (const auto& v : verts) pts.emplace_back(v[0], v[1]);
    return polygon_perimeter(convex_hull_2d(pts)) / 2.0;
  }
  if (p.n() == 2) {
    double scale = 0.0;
    for (const auto& v : verts) scale = std::max(scale, v.cwiseAbs().maxCoeff());
    std::vector<Eigen::Vector2d> pts;
    for (const auto& v : verts) {
      if (std::abs(v[1]) > 1e-12 * std::max(1.0, scale) || std::abs(v[3]) > 1e-12 * std::max(1.0, scale))
        return std::nullopt;
      pts.emplace_back(v[0], v[2]);
    }
    return polygon_area(convex_hull_2d(pts));
  }
  return std::nullopt;
}

}  // namespace zerostat
