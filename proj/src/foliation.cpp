#include "foliation.hpp"

#include <cmath>

#include "error.hpp"
#include "hypersurface.hpp"

namespace solvgeom {

namespace {

void validate(const GroupElement& q) {
  validate_alpha(q.alpha);
  const double vals[] = {q.x.real(), q.x.imag(), q.y.real(), q.y.imag(), q.z.real(), q.z.imag(), q.t, q.normal};
  for (double v : vals) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "group element coordinates must be finite");
  }
}

}  // namespace

std::array<double, 3> normal_diagonal(double alpha) {
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double r3 = std::sqrt(3.0);
  return {s / 2.0 - c / (2.0 * r3), c / r3, -s / 2.0 - c / (2.0 * r3)};
}

std::array<double, 3> direction_diagonal(double alpha) {
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double r3 = std::sqrt(3.0);
  return {c / 2.0 + s / (2.0 * r3), -s / r3, -c / 2.0 + s / (2.0 * r3)};
}

SquareComplexMatrix to_matrix(const GroupElement& q) {
  validate(q);
  const auto h = direction_diagonal(q.alpha);
  const auto n = normal_diagonal(q.alpha);
  double d[3];
  for (int i = 0; i < 3; ++i) d[i] = std::exp(q.t * h[i] + q.normal * n[i]);
  // upper unipotent times diagonal: column j scaled by d[j]
  return SquareComplexMatrix(3, {d[0], q.x * d[1], q.z * d[2],
                                 0.0, d[1], q.y * d[2],
                                 0.0, 0.0, d[2]});
}

SquareComplexMatrix normal_exponential(double alpha, double s) {
  validate_alpha(alpha);
  const auto n = normal_diagonal(alpha);
  const double d[] = {std::exp(s * n[0]), std::exp(s * n[1]), std::exp(s * n[2])};
  return SquareComplexMatrix::diagonal(d);
}

GroupElement flow_point(const GroupElement& q, double s) {
  validate(q);
  GroupElement out = q;
  out.normal += s;
  return out;
}

GroupElement leaf_conjugate(const GroupElement& q, double s) {
  validate(q);
  const auto n = normal_diagonal(q.alpha);
  const double tau[] = {s * n[0], s * n[1], s * n[2]};
  GroupElement out = q;
  out.x = std::exp(tau[1] - tau[0]) * q.x;
  out.z = std::exp(tau[2] - tau[0]) * q.z;
  out.y = std::exp(tau[2] - tau[1]) * q.y;
  return out;
}

double foliation_residual(const GroupElement& q, double s) {
  const SquareComplexMatrix e = normal_exponential(q.alpha, s);
  return (e * to_matrix(leaf_conjugate(q, s)) - to_matrix(q) * e).max_abs();
}

double volume_distortion(double alpha, double s) {
  validate_alpha(alpha);
  return std::exp(s * (-4.0 * std::sin(alpha)));
}

}  // namespace solvgeom
