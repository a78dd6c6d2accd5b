#include "hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ambient.hpp"
#include "error.hpp"

namespace solvgeom {

namespace {

const Complex kI{0.0, 1.0};

CoefficientVector gaussian_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  CoefficientVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = normal(rng);
  return v;
}

// Random plane in s_H with orthonormal spanning pair (the standard basis is
// orthonormal, so the Euclidean product on coordinates is the metric).
Plane random_plane(std::mt19937_64& rng) {
  CoefficientVector u = gaussian_vector(rng, kHypersurfaceDim);
  CoefficientVector w = gaussian_vector(rng, kHypersurfaceDim);
  u.normalize();
  w -= w.dot(u) * u;
  w.normalize();
  return {u, w};
}

}  // namespace

void validate_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= kAlphaMax)) {
    throw Error(ErrorCode::OutOfRange, "alpha must lie in [0, pi/2], got " + std::to_string(alpha));
  }
}

CoefficientVector to_coefficients(const TangentVector& x) {
  CoefficientVector v(7);
  v << x.a.real(), x.a.imag(), x.b.real(), x.b.imag(), x.c.real(), x.c.imag(), x.t;
  return v;
}

TangentVector from_coefficients(const CoefficientVector& v) {
  if (v.size() != 7) throw Error(ErrorCode::DimensionMismatch, "tangent vector needs 7 coordinates");
  return {{v(0), v(1)}, {v(2), v(3)}, {v(4), v(5)}, v(6)};
}

HypersurfaceModel::HypersurfaceModel(double alpha) : alpha_(alpha) {
  validate_alpha(alpha);
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  h_ = ca * ambient::H0() + sa * ambient::H1();
  normal_ = sa * ambient::H0() - ca * ambient::H1();
  const auto n = ambient::nilpotent_basis();
  basis_ = {n[0], n[1], n[2], n[3], n[4], n[5], h_};
}

SquareComplexMatrix HypersurfaceModel::to_matrix(const TangentVector& x) const {
  return x.a * ambient::V() + x.b * ambient::W() + x.c * ambient::Z0() + x.t * h_;
}

SquareComplexMatrix HypersurfaceModel::to_matrix(const CoefficientVector& v) const {
  if (v.size() != 7) throw Error(ErrorCode::DimensionMismatch, "tangent vector needs 7 coordinates");
  SquareComplexMatrix out(ambient::kDim);
  for (Eigen::Index i = 0; i < 7; ++i) out += v(i) * basis_[static_cast<std::size_t>(i)];
  return out;
}

double ambient_curvature(const SquareComplexMatrix& x1, const SquareComplexMatrix& x2) {
  if (!is_in_solvable(x1) || !is_in_solvable(x2)) {
    throw Error(ErrorCode::NotInSolvable, "ambient_curvature: argument is not in s = n + a");
  }
  const SquareComplexMatrix p1 = phi(x1);
  const SquareComplexMatrix p2 = phi(x2);
  return -inner_g(bracket(bracket(p1, p2), p2), p1);
}

double second_fundamental_form(const HypersurfaceModel& m, const SquareComplexMatrix& x1,
                               const SquareComplexMatrix& x2) {
  const SquareComplexMatrix& n = m.normal();
  return 0.5 * (inner_g(phi(x1), phi(bracket(x2, n))) + inner_g(phi(x2), phi(bracket(x1, n))));
}

double second_fundamental_form(const HypersurfaceModel& m, const TangentVector& x1, const TangentVector& x2) {
  return second_fundamental_form(m, m.to_matrix(x1), m.to_matrix(x2));
}

Eigen::MatrixXd second_fundamental_matrix(const HypersurfaceModel& m) {
  Eigen::MatrixXd ii(7, 7);
  const auto& b = m.basis();
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      ii(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = second_fundamental_form(m, b[i], b[j]);
    }
  return ii;
}

std::array<double, kHypersurfaceDim> shape_spectrum(const HypersurfaceModel& m) {
  std::array<double, kHypersurfaceDim> out{};
  const auto& b = m.basis();
  for (std::size_t i = 0; i < kHypersurfaceDim; ++i) out[i] = second_fundamental_form(m, b[i], b[i]);
  return out;
}

double mean_curvature(const HypersurfaceModel& m) {
  const auto s = shape_spectrum(m);
  double sum = 0.0;
  for (double v : s) sum += v;
  return sum;
}

double gauss_curvature(const HypersurfaceModel& m, const SquareComplexMatrix& x1, const SquareComplexMatrix& x2) {
  const double ii11 = second_fundamental_form(m, x1, x1);
  const double ii22 = second_fundamental_form(m, x2, x2);
  const double ii12 = second_fundamental_form(m, x1, x2);
  return ambient_curvature(x1, x2) + ii11 * ii22 - ii12 * ii12;
}

double gauss_sectional(const HypersurfaceModel& m, const CoefficientVector& x1, const CoefficientVector& x2) {
  const double area2 = x1.squaredNorm() * x2.squaredNorm() - std::pow(x1.dot(x2), 2);
  if (area2 <= 1e-12) throw Error(ErrorCode::DegeneratePlane, "gauss_sectional: degenerate plane");
  return gauss_curvature(m, m.to_matrix(x1), m.to_matrix(x2)) / area2;
}

double gauss_sectional(const HypersurfaceModel& m, const TangentVector& x1, const TangentVector& x2) {
  return gauss_sectional(m, to_coefficients(x1), to_coefficients(x2));
}

double ricci_gauss(const HypersurfaceModel& m, const TangentVector& x) {
  const SquareComplexMatrix xm = m.to_matrix(x);
  double sum = 0.0;
  for (const auto& e : m.basis()) sum += gauss_curvature(m, e, xm);
  return sum;
}

double ricci_closed(double alpha, const TangentVector& x) {
  validate_alpha(alpha);
  if (std::abs(x.norm_squared() - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "ricci_closed: X must be a unit vector");
  }
  using std::numbers::pi;
  const double sa = std::sin(alpha);
  return -3.0 + 4.0 * sa *
                    (std::sin(alpha - pi / 3.0) * std::norm(x.a) + std::sin(alpha + pi / 3.0) * std::norm(x.b) +
                     sa * std::norm(x.c));
}

RicciExtremes ricci_extremes(double alpha) {
  validate_alpha(alpha);
  using std::numbers::pi;
  const double sa = std::sin(alpha);
  // The quadratic form is diagonal with eigenvalues -3 (H) and
  // -3 + 4 sin(alpha) {sin(alpha - pi/3), sin(alpha + pi/3), sin(alpha)}.
  const double max = alpha <= kRicciNullAngle ? 4.0 * sa * std::sin(alpha + pi / 3.0) - 3.0 : 4.0 * sa * sa - 3.0;
  const double min = -3.0 + 4.0 * sa * std::min(std::sin(alpha - pi / 3.0), 0.0);
  return {min, max};
}

std::pair<TangentVector, TangentVector> sigma_plane() {
  const double r23 = std::sqrt(2.0 / 3.0);
  const double r13 = 1.0 / std::sqrt(3.0);
  TangentVector x1{{}, {r23, 0.0}, {r13, 0.0}, 0.0};
  TangentVector x2{{}, -r23 * kI, r13 * kI, 0.0};
  return {x1, x2};
}

double k_sigma(const HypersurfaceModel& m) {
  const auto [x1, x2] = sigma_plane();
  return gauss_sectional(m, x1, x2);
}

std::string_view to_string(RicciRegime r) {
  switch (r) {
    case RicciRegime::NegativeRicci: return "NegativeRicci";
    case RicciRegime::RicciNullDirection: return "RicciNullDirection";
    case RicciRegime::MixedRicci: return "MixedRicci";
  }
  return "unknown";
}

CurvatureReport classify(double alpha, std::size_t samples, std::uint64_t seed) {
  const HypersurfaceModel m(alpha);
  CurvatureReport r{};
  r.alpha = alpha;
  r.shape_eigenvalues = shape_spectrum(m);
  r.mean_curvature = 0.0;
  for (double v : r.shape_eigenvalues) r.mean_curvature += v;
  r.cheeger = cheeger(build_hypersurface_algebra(alpha));
  const auto ext = ricci_extremes(alpha);
  r.ricci_min = ext.min;
  r.ricci_max = ext.max;
  r.k_sigma = k_sigma(m);

  if (alpha < kRicciNullAngle - kRegimeTol) {
    r.regime = RicciRegime::NegativeRicci;
  } else if (alpha <= kRicciNullAngle + kRegimeTol) {
    r.regime = RicciRegime::RicciNullDirection;
  } else {
    r.regime = RicciRegime::MixedRicci;
  }
  r.is_minimal = std::abs(r.mean_curvature) <= kMembershipTol;
  r.is_einstein = alpha <= kRegimeTol;
  r.is_horosphere_range = alpha >= kRicciNullAngle - kRegimeTol;

  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    CoefficientVector v = gaussian_vector(rng, kHypersurfaceDim);
    v.normalize();
    const TangentVector x = from_coefficients(v);
    worst = std::max(worst, std::abs(ricci_gauss(m, x) - ricci_closed(alpha, x)));
  }
  r.cross_pipeline_residual = worst;
  return r;
}

MetricLieAlgebra build_hypersurface_algebra(double alpha) {
  const HypersurfaceModel m(alpha);
  std::vector<std::string> labels(HypersurfaceModel::kLabels.begin(), HypersurfaceModel::kLabels.end());
  return from_matrix_basis(m.basis(), InnerProduct::Solvable, std::move(labels));
}

PlaneScan nonpositivity_scan(double alpha, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "nonpositivity_scan: samples must be >= 1");
  const HypersurfaceModel m(alpha);
  std::mt19937_64 rng(seed);
  PlaneScan scan{};
  scan.max_random_k = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples; ++s) {
    Plane p = random_plane(rng);
    const double k = gauss_sectional(m, p.first, p.second);
    if (k > scan.max_random_k) {
      scan.max_random_k = k;
      scan.argmax_random = std::move(p);
    }
  }
  scan.max_k = scan.max_random_k;
  scan.argmax = scan.argmax_random;
  const auto [x1, x2] = sigma_plane();
  const double ks = gauss_sectional(m, x1, x2);
  if (ks > scan.max_k) {
    scan.max_k = ks;
    scan.argmax = {to_coefficients(x1), to_coefficients(x2)};
  }
  return scan;
}

ZeroPlaneSearch minimize_abs_curvature(const HypersurfaceModel& m, const Plane& start, double target,
                                       std::size_t max_evaluations) {
  Eigen::VectorXd params(14);
  params << start.first, start.second;
  auto objective = [&](const Eigen::VectorXd& p) {
    const CoefficientVector u = p.head(7);
    const CoefficientVector w = p.tail(7);
    const double area2 = u.squaredNorm() * w.squaredNorm() - std::pow(u.dot(w), 2);
    if (area2 <= 1e-12) return std::numeric_limits<double>::infinity();
    return std::abs(gauss_sectional(m, u, w));
  };

  double best = objective(params);
  std::size_t evals = 1;
  double step = 0.1;
  while (best > target && step > 1e-14 && evals < max_evaluations) {
    bool improved = false;
    for (Eigen::Index i = 0; i < params.size() && evals < max_evaluations; ++i) {
      for (double dir : {1.0, -1.0}) {
        Eigen::VectorXd trial = params;
        trial(i) += dir * step;
        const double f = objective(trial);
        ++evals;
        if (f < best) {
          best = f;
          params = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {best, {params.head(7), params.tail(7)}, evals};
}

}  // namespace solvgeom
