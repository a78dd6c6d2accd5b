#pragma once

#include <array>
#include <string_view>

#include "complex_matrix.hpp"

// Iwasawa data of sl(3, C) = n + a + su(3): the nilpotent generators V, W, Z0
// and the orthonormal basis H0, H1 of a.
namespace solvgeom::ambient {

inline constexpr std::size_t kDim = 3;
inline constexpr std::size_t kSolvableDim = 8;

SquareComplexMatrix V();
SquareComplexMatrix W();
SquareComplexMatrix Z0();
SquareComplexMatrix H0();
SquareComplexMatrix H1();

/// (V, iV, W, iW, Z0, iZ0, H0, H1), orthonormal for inner_s.
std::array<SquareComplexMatrix, kSolvableDim> solvable_basis();
inline constexpr std::array<std::string_view, kSolvableDim> kSolvableLabels = {
    "V", "iV", "W", "iW", "Z0", "iZ0", "H0", "H1"};

/// Nilpotent part (V, iV, W, iW, Z0, iZ0).
std::array<SquareComplexMatrix, 6> nilpotent_basis();

}  // namespace solvgeom::ambient
