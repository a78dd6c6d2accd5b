#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lie_algebra.hpp"

namespace solvgeom {

// File format:
//   {"dim": n, "labels": [...], "structure": [[i, j, k, value], ...], "gram": [[...], ...]}
// `structure` is sparse and lists only i < j; antisymmetry fills in the rest.
// "labels" is optional.

/// Throws Error(Parse) on malformed documents and Error(InvalidAlgebra)
/// naming the first violated invariant.
MetricLieAlgebra algebra_from_json(std::string_view text);
MetricLieAlgebra load_algebra(const std::filesystem::path& path);

std::string algebra_to_json(const MetricLieAlgebra& L, double drop_below = 1e-15);
void save_algebra(const MetricLieAlgebra& L, const std::filesystem::path& path);

}  // namespace solvgeom
