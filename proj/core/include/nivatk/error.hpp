#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nivatk {

enum class Errc {
  NonPrimitive,
  ZeroVector,
  RankDeficient,
  DimensionMismatch,
  EmptyShape,
  EmptySample,
  EmptyResult,
  ZeroPolynomial,
  NonIntegerCoefficients,
  V0NotInSupport,
  WindowTooSmall,
  VerificationFailed,
  Infeasible,
  DegenerateDirection,
  ZeroArea,
  ParallelDirections,
  ZeroDenominator,
  BlockTooSmall,
  NotPrime,
  SyntaxError,
  NonSquarefreeRadicand,
  InvalidArgument,
  Overflow,
};

std::string_view errc_name(Errc code) noexcept;

// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nivatk
