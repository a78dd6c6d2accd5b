#pragma once

#include <array>

#include "complex_matrix.hpp"

namespace solvgeom {

/// A point of S = NA written as
///   [[1, x, z], [0, 1, y], [0, 0, 1]] * exp(t H + normal T_H)
/// for the direction pair (H, T_H) at angle `alpha`. Points of S_H have
/// normal == 0.
struct GroupElement {
  Complex x{};
  Complex y{};
  Complex z{};
  double t = 0.0;
  double normal = 0.0;
  double alpha = 0.0;
};

/// Diagonal of T_H: (sin/2 - cos/(2 sqrt3), cos/sqrt3, -sin/2 - cos/(2 sqrt3)).
std::array<double, 3> normal_diagonal(double alpha);
/// Diagonal of H = cos H0 + sin H1.
std::array<double, 3> direction_diagonal(double alpha);

SquareComplexMatrix to_matrix(const GroupElement& q);

/// exp(s T_H), computed entrywise on the diagonal.
SquareComplexMatrix normal_exponential(double alpha, double s);

/// q * exp(s T_H).
GroupElement flow_point(const GroupElement& q, double s);

/// q' with exp(s T_H) q' = q exp(s T_H).
GroupElement leaf_conjugate(const GroupElement& q, double s);

/// max entry of exp(s T_H) q' - q exp(s T_H).
double foliation_residual(const GroupElement& q, double s);

/// exp(s M(alpha)) with M(alpha) = -4 sin(alpha).
double volume_distortion(double alpha, double s);

}  // namespace solvgeom
