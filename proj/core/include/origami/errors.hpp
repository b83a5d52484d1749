#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace origami {

// Stable codes; the CLI reports these by name.
enum class ErrorCode {
  DivisionByZero,
  IncompatibleTowers,
  NegativeRadicand,
  OutOfRange,
  DegenerateTrisection,
  TowerDepthExceeded,
  ComputationLimit,
  ZeroPolynomial,
  NotTotallyReal,
  NotIrreducible,
  NotCubic,
  CoincidentPoints,
  ParallelLines,
  IdenticalLines,
  PointNotOnLine,
  NoRealFold,
  DegenerateConfiguration,
  UnknownObject,
  InvalidTrace,
  EmptyInput,
  NotAcute,
  DegenerateInput,
  ComplexPencil,
  NotDegenerate,
  ComplexLinePair,
  DegenerateIntersection,
  UnknownRecipe,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace origami
