#pragma once

#include <stdexcept>
#include <string>

namespace solvgeom {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotInSolvable,   // matrix outside n + a
  NotSubalgebra,   // bracket closure failed
  SingularGram,
  DegeneratePlane,
  OutOfRange,
  InvalidAlgebra,  // MetricLieAlgebra invariant violated
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace solvgeom
