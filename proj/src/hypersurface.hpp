#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <utility>

#include "complex_matrix.hpp"
#include "lie_algebra.hpp"

namespace solvgeom {

inline constexpr double kAlphaMax = std::numbers::pi / 2.0;
inline constexpr double kRicciNullAngle = std::numbers::pi / 3.0;
inline constexpr double kRegimeTol = 1e-9;
inline constexpr std::size_t kHypersurfaceDim = 7;

/// Throws Error(OutOfRange) unless 0 <= alpha <= pi/2.
void validate_alpha(double alpha);

/// X = aV + bW + cZ0 + tH with a, b, c complex and t real.
struct TangentVector {
  Complex a{};
  Complex b{};
  Complex c{};
  double t = 0.0;

  double norm_squared() const { return std::norm(a) + std::norm(b) + std::norm(c) + t * t; }
};

/// Coordinates in the basis (V, iV, W, iW, Z0, iZ0, H).
CoefficientVector to_coefficients(const TangentVector& x);
TangentVector from_coefficients(const CoefficientVector& v);

/// The hypersurface S_H = N exp(R H) with H = cos(alpha) H0 + sin(alpha) H1
/// and unit normal T_H = sin(alpha) H0 - cos(alpha) H1.
class HypersurfaceModel {
 public:
  explicit HypersurfaceModel(double alpha);

  double alpha() const noexcept { return alpha_; }
  const SquareComplexMatrix& H() const noexcept { return h_; }
  const SquareComplexMatrix& normal() const noexcept { return normal_; }
  /// (V, iV, W, iW, Z0, iZ0, H)
  const std::array<SquareComplexMatrix, kHypersurfaceDim>& basis() const noexcept { return basis_; }

  SquareComplexMatrix to_matrix(const TangentVector& x) const;
  SquareComplexMatrix to_matrix(const CoefficientVector& v) const;

  static constexpr std::array<std::string_view, kHypersurfaceDim> kLabels = {"V", "iV", "W", "iW", "Z0", "iZ0", "H"};

 private:
  double alpha_;
  SquareComplexMatrix h_;
  SquareComplexMatrix normal_;
  std::array<SquareComplexMatrix, kHypersurfaceDim> basis_;
};

/// <R(X1,X2)X2, X1>_s of the symmetric space, via -<[[phi X1, phi X2], phi X2], phi X1>_g.
/// Not normalized by the area of the plane.
double ambient_curvature(const SquareComplexMatrix& x1, const SquareComplexMatrix& x2);

/// <nabla_{X1} T_H, X2>_s.
double second_fundamental_form(const HypersurfaceModel& m, const TangentVector& x1, const TangentVector& x2);
double second_fundamental_form(const HypersurfaceModel& m, const SquareComplexMatrix& x1,
                               const SquareComplexMatrix& x2);

/// Second fundamental form as a 7x7 matrix in the standard basis.
Eigen::MatrixXd second_fundamental_matrix(const HypersurfaceModel& m);

/// Diagonal of the second fundamental form in the standard basis, which is
/// an eigenbasis (V, iV, W, iW, Z0, iZ0, H order).
std::array<double, kHypersurfaceDim> shape_spectrum(const HypersurfaceModel& m);

double mean_curvature(const HypersurfaceModel& m);

/// <R^{S_H}(X1,X2)X2, X1> from the Gauss equation; not normalized.
double gauss_curvature(const HypersurfaceModel& m, const SquareComplexMatrix& x1, const SquareComplexMatrix& x2);

/// Intrinsic sectional curvature of the plane spanned by X1, X2 in s_H.
double gauss_sectional(const HypersurfaceModel& m, const TangentVector& x1, const TangentVector& x2);
double gauss_sectional(const HypersurfaceModel& m, const CoefficientVector& x1, const CoefficientVector& x2);

/// Ricci curvature as the sum of Gauss-equation terms over the orthonormal basis.
double ricci_gauss(const HypersurfaceModel& m, const TangentVector& x);

/// -3 + 4 sin(alpha) (sin(alpha - pi/3)|a|^2 + sin(alpha + pi/3)|b|^2 + sin(alpha)|c|^2)
/// for unit X; throws InvalidArgument when |X| differs from 1 by more than 1e-10.
double ricci_closed(double alpha, const TangentVector& x);

struct RicciExtremes {
  double min;
  double max;
};

/// Extremes of the Ricci curvature over unit vectors of s_H.
RicciExtremes ricci_extremes(double alpha);

/// The orthonormal pair sqrt(2/3) W + Z0/sqrt(3), -sqrt(2/3) iW + i Z0/sqrt(3).
std::pair<TangentVector, TangentVector> sigma_plane();

/// Sectional curvature of sigma_plane().
double k_sigma(const HypersurfaceModel& m);

enum class RicciRegime { NegativeRicci, RicciNullDirection, MixedRicci };
std::string_view to_string(RicciRegime r);

struct CurvatureReport {
  double alpha;
  double mean_curvature;
  double cheeger;
  std::array<double, kHypersurfaceDim> shape_eigenvalues;
  double ricci_min;
  double ricci_max;
  double k_sigma;
  RicciRegime regime;
  bool is_minimal;
  bool is_einstein;
  bool is_horosphere_range;
  /// max |ricci_gauss - ricci_closed| over the sampled unit vectors
  double cross_pipeline_residual;
};

CurvatureReport classify(double alpha, std::size_t samples = 1000, std::uint64_t seed = 1);

/// s_H as a MetricLieAlgebra for the generic engine.
MetricLieAlgebra build_hypersurface_algebra(double alpha);

struct Plane {
  CoefficientVector first;
  CoefficientVector second;
};

struct PlaneScan {
  double max_k;
  Plane argmax;
  /// Best plane among the random samples only (the sigma witness excluded).
  double max_random_k;
  Plane argmax_random;
};

/// Max of the sectional curvature over `samples` seeded random planes plus the
/// sigma plane.
PlaneScan nonpositivity_scan(double alpha, std::size_t samples, std::uint64_t seed);

struct ZeroPlaneSearch {
  double abs_k;
  Plane plane;
  std::size_t evaluations;
};

/// Coordinate descent on the 14 coordinates spanning a plane, minimizing |K|.
ZeroPlaneSearch minimize_abs_curvature(const HypersurfaceModel& m, const Plane& start,
                                       double target = 1e-12, std::size_t max_evaluations = 200000);

}  // namespace solvgeom
