#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmp {

enum class ErrorCode {
  // lattice
  NotSquare,
  EmptyMatrix,
  NonTwoDiagonal,
  PositiveOffDiagonal,
  AsymmetricZeroPattern,
  IndexOutOfRange,
  DimensionMismatch,
  SingularCartanMatrix,
  NotInPositiveRootLattice,
  EmptySubset,
  InvalidSubset,
  // catalog
  UnknownAlgebra,
  InvalidRankForFamily,
  // polyseries
  Overflow,
  NonUnitConstantTerm,
  InexactDivision,
  DivisionByZero,
  // weyl_enum
  NonDominantSeed,
  MemoryBudgetExceeded,
  NotInOrbit,
  RegularityViolation,
  ImageRecurrence,
  RankTooLarge,
  // ratfit
  Underdetermined,
  Inconsistent,
  NonIntegerSolution,
  // verify / io
  UnknownCase,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kmp
