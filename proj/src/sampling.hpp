#pragma once

#include <random>

#include "ambient.hpp"
#include "complex_matrix.hpp"
#include "lie_algebra.hpp"

namespace solvgeom::sampling {

using Rng = std::mt19937_64;

inline double gaussian(Rng& rng) {
  std::normal_distribution<double> n;
  return n(rng);
}

inline CoefficientVector gaussian_vector(Rng& rng, std::size_t n) {
  CoefficientVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gaussian(rng);
  return v;
}

inline CoefficientVector unit_vector(Rng& rng, std::size_t n) {
  CoefficientVector v = gaussian_vector(rng, n);
  return v / v.norm();
}

/// Random real combination of (V, iV, W, iW, Z0, iZ0, H0, H1).
inline SquareComplexMatrix solvable_element(Rng& rng) {
  SquareComplexMatrix out(ambient::kDim);
  for (const auto& b : ambient::solvable_basis()) out += gaussian(rng) * b;
  return out;
}

/// Random element of sl(3, C).
inline SquareComplexMatrix sl3_element(Rng& rng) {
  SquareComplexMatrix out(ambient::kDim);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = Complex(gaussian(rng), gaussian(rng));
  const Complex shift = out.trace() / 3.0;
  for (std::size_t i = 0; i < 3; ++i) out(i, i) -= shift;
  return out;
}

}  // namespace solvgeom::sampling
