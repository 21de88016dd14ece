#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradeforge {

/// Families partition failures for the CLI exit codes.
enum class ErrorFamily { schema = 2, precondition = 3, budget = 4 };

enum class ErrorCode {
  // exact_algebra
  InexactDivision,
  VariableMismatch,
  PoleAtPoint,
  DivisionByZero,
  ParseError,
  // series_core
  ZeroConstantTerm,
  TruncationExceeded,
  // algebraic_series
  RamifiedBranch,
  NotARoot,
  // holonomic
  DegenerateInput,
  InsufficientInitialTerms,
  InsufficientTerms,
  // obstruction
  TooSparse,
  // modp_automata
  PrimeDividesDenominator,
  BudgetTooSmall,
  UnsupportedModulus,
  // diagonal_lift
  BranchNotAtZero,
  RamifiedAtOrigin,
  VariableCollision,
  DenominatorVanishesAtOrigin,
  BudgetExceeded,
  // analytic_bench
  NonPositiveArgument,
  NotOdd,
  // cli
  SchemaViolation,
};

std::string_view to_string(ErrorCode code) noexcept;
ErrorFamily family_of(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorFamily family() const noexcept { return family_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace gradeforge
