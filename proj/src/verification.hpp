#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace solvgeom {

struct VerifyConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string name;
  bool passed;
  double residual;
  double tolerance;
  /// true: pass iff residual <= tolerance; false: pass iff residual >= tolerance
  bool upper_bound = true;
};

/// Runs every invariant suite of the library (identities of the matrix model,
/// the Koszul engine, the Gauss-equation pipeline and the closed forms).
std::vector<CheckResult> run_verification(const VerifyConfig& cfg);

}  // namespace solvgeom
