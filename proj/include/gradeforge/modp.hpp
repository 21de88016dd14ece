#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gradeforge/algebraic.hpp"
#include "gradeforge/series.hpp"

namespace gradeforge {

/// Coefficients reduced modulo p^r.
struct ResidueSequence {
  std::uint64_t prime = 2;
  unsigned exponent = 1;
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> terms;
  std::size_t source_truncation = 0;
};

/// Moduli must stay below this.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

/// p^r, throwing UnsupportedModulus when p is not prime, r is 0 or the
/// power reaches kMaxModulus.
std::uint64_t prime_power(std::uint64_t p, unsigned r);

/// num·den^(-1) mod p^r termwise. Throws PrimeDividesDenominator naming the
/// first index whose denominator p divides.
ResidueSequence reduce_mod(const TruncSeries& f, std::uint64_t p, unsigned r);

/**
 * Expands the branch of `a` directly modulo p^r by Newton iteration, with no
 * rational arithmetic past setup. The branch equation is rescaled
 * (y = y0 + p^s·w, then divided by a power of p) until the linear term is a
 * p-adic unit, which is when Hensel lifting determines w p-integrally.
 *
 * Throws PrimeDividesDenominator when y0 or the rescaled equation is not
 * p-integral and UnsupportedModulus when no rescaling makes the linear term
 * a unit.
 */
ResidueSequence expand_branch_mod(const Annihilator& a, std::uint64_t p, unsigned r, std::size_t count);

struct KernelBudgets {
  std::size_t max_states = 4096;
  unsigned max_depth = 8;
  std::size_t fingerprint_length = 64;
  /// Cap on L·q^K for christol_report.
  std::size_t max_terms = std::size_t{1} << 20;
};

/// Depth used when only the base is known: 8 for base 2, 7 for base 3, 4 above.
unsigned default_kernel_depth(std::uint64_t base);

struct KernelState {
  unsigned k = 0;
  std::uint64_t j = 0;
  std::vector<std::uint64_t> fingerprint;
  std::uint64_t fingerprint_hash = 0;
  /// Successor under each digit; kUnresolved when the budget ran out first.
  std::vector<std::size_t> transitions;
};

enum class KernelStatus { closed, exhausted_budget, truncation_limited };

std::string to_string(KernelStatus s);

struct KernelAutomaton {
  static constexpr std::size_t kUnresolved = static_cast<std::size_t>(-1);

  std::uint64_t base = 2;
  std::vector<KernelState> states;
  KernelStatus status = KernelStatus::exhausted_budget;
  std::size_t fingerprint_length = 0;

  /// Graphviz rendering, states labelled by (k, j).
  std::string to_dot() const;
};

/**
 * Breadth-first closure of the base-q kernel of s: subsequences
 * n -> s(q^k·n + j) starting from (0, 0), children visited by increasing k,
 * then j, then digit. Two subsequences are identified when their first L
 * residues agree.
 *
 * Throws BudgetTooSmall when L·q^K exceeds the source truncation.
 */
KernelAutomaton kernel_closure(const ResidueSequence& s, std::uint64_t q, const KernelBudgets& budgets);

struct ChristolReport {
  KernelAutomaton automaton;
  std::uint64_t prime = 2;
  unsigned exponent = 1;
  std::size_t terms = 0;
  /// Closed at the given fingerprint length.
  bool consistent_with_christol = false;
  /// The exact expansion reduced mod p^r matched the modular one on the
  /// first kExactCrossCheck terms.
  bool exact_prefix_agrees = false;
};

/// Exact prefix this many terms long, cross-checked against the modular expansion.
inline constexpr std::size_t kExactCrossCheck = 64;

/**
 * Expands the branch modulo p^r to L·q^K terms and closes its base-q kernel.
 * The first kExactCrossCheck terms are also expanded exactly and reduced
 * with reduce_mod, so a prime in their denominators still throws
 * PrimeDividesDenominator. Throws BudgetExceeded when L·q^K > max_terms.
 */
ChristolReport christol_report(const Annihilator& a, std::uint64_t p, unsigned r, std::uint64_t q,
                               const KernelBudgets& budgets);

}  // namespace gradeforge
