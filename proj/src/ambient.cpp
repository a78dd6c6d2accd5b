#include "ambient.hpp"

#include <cmath>

namespace solvgeom::ambient {

namespace {
const Complex kI{0.0, 1.0};
}

SquareComplexMatrix V() { return SquareComplexMatrix::unit(kDim, 0, 1); }
SquareComplexMatrix W() { return SquareComplexMatrix::unit(kDim, 1, 2); }
SquareComplexMatrix Z0() { return SquareComplexMatrix::unit(kDim, 0, 2); }

SquareComplexMatrix H0() {
  const double d[] = {0.5, 0.0, -0.5};
  return SquareComplexMatrix::diagonal(d);
}

SquareComplexMatrix H1() {
  const double r = 1.0 / (2.0 * std::sqrt(3.0));
  const double d[] = {r, -2.0 * r, r};
  return SquareComplexMatrix::diagonal(d);
}

std::array<SquareComplexMatrix, 6> nilpotent_basis() {
  return {V(), kI * V(), W(), kI * W(), Z0(), kI * Z0()};
}

std::array<SquareComplexMatrix, kSolvableDim> solvable_basis() {
  auto n = nilpotent_basis();
  return {n[0], n[1], n[2], n[3], n[4], n[5], H0(), H1()};
}

}  // namespace solvgeom::ambient
