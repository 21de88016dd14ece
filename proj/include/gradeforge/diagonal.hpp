#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gradeforge/algebraic.hpp"
#include "gradeforge/ratfun.hpp"
#include "gradeforge/series.hpp"

namespace gradeforge {

/**
 * A rational function in 2d variables whose complete diagonal, plus
 * constant_shift at index 0, equals the termwise product of the d factor
 * branches. The equality has been checked through verified_order only.
 */
struct DiagonalWitness {
  RatFun r;
  std::size_t d = 1;
  std::size_t verified_order = 0;
  std::vector<Annihilator> factors;
  Rational constant_shift = 0;
};

/**
 * R(x, y) = y^2·P_y(x·y, y) / P(x·y, y) with common factors of y removed, so
 * the denominator is nonzero at the origin. Variables: x is 0, y is 1.
 *
 * Throws BranchNotAtZero unless y0 == 0 and RamifiedAtOrigin when
 * P_y(0, 0) == 0.
 */
RatFun furstenberg_bivariate(const Annihilator& a);

/// Default cap on N^m coefficients for diagonal_extract.
inline constexpr std::size_t kDiagonalBudget = 2'000'000;

/**
 * Coefficients of x_1^n···x_m^n for n < N in the expansion of R at the
 * origin. The expansion solves den·S = num on the box [0, N-1]^m, which is
 * exact there because every coefficient in the box only depends on others
 * in the box.
 *
 * Throws DenominatorVanishesAtOrigin and BudgetExceeded when N^m > budget.
 */
TruncSeries diagonal_extract(const RatFun& r, std::size_t n, std::size_t budget = kDiagonalBudget);

/// Lifts one branch, moving it to the origin when y0 != 0. verified_order is
/// the length of the prefix (at most `verify_order`) on which the diagonal
/// agrees with expand_branch.
DiagonalWitness make_witness(const Annihilator& a, std::size_t verify_order);

/// Product of rational functions; factor i is renamed by placements[i] into
/// `target_nvars` variables. Throws VariableCollision when placements overlap.
RatFun product_lift(std::span<const RatFun> factors, std::span<const std::vector<std::size_t>> placements,
                    std::size_t target_nvars);

/**
 * Combines witnesses over consecutive disjoint variable blocks. The result's
 * diagonal is the termwise product of the inputs' diagonals; verified_order
 * counts agreement with the termwise product of the factor expansions, up to
 * `verify_order`. Throws DegenerateInput for fewer than two witnesses.
 */
DiagonalWitness product_lift(std::span<const DiagonalWitness> witnesses, std::size_t verify_order);

/// Diagonal of the witness with its constant shift restored.
TruncSeries witness_series(const DiagonalWitness& w, std::size_t n);

}  // namespace gradeforge
