#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gradeforge/series.hpp"
#include "gradeforge/unipoly.hpp"

namespace gradeforge {

/**
 * A P-recursive sequence: sum_{i=0..r} p_i(n)·a_{n+i} = 0 for all n >= n0,
 * with initial terms a_0..a_{n0+r-1}.
 *
 * Construction moves n0 past every integer root of p_r that is >= n0, so
 * unrolling never divides by zero and the sequence is uniquely determined.
 * The extra initial terms this needs must be supplied (make) or are read
 * from a known prefix of the sequence (from_terms).
 */
class PRecurrence {
 public:
  /// Throws DegenerateInput for a zero leading polynomial or order 0 and
  /// InsufficientInitialTerms when the initial terms do not reach n0 + r.
  static PRecurrence make(std::vector<UniPoly> coeffs, std::size_t n0, std::vector<Rational> initial);

  /// As make(), taking the initial terms from `terms`.
  static PRecurrence from_terms(std::vector<UniPoly> coeffs, std::size_t n0, const TruncSeries& terms);

  /// Initial terms a recurrence with these coefficients and base needs once
  /// n0 has been moved past the integer roots of the leading coefficient.
  static std::size_t required_terms(const std::vector<UniPoly>& coeffs, std::size_t n0);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  std::size_t n0() const { return n0_; }
  const std::vector<Rational>& initial() const { return initial_; }

  /// First `count` terms.
  TruncSeries unroll(std::size_t count) const;

  std::string to_string() const;

 private:
  PRecurrence() = default;
  static std::size_t raised_base(const std::vector<UniPoly>& coeffs, std::size_t n0);

  std::vector<UniPoly> coeffs_;
  std::size_t n0_ = 0;
  std::vector<Rational> initial_;
};

inline TruncSeries unroll(const PRecurrence& r, std::size_t count) { return r.unroll(count); }

/// Same terms through `count`.
bool equivalent(const PRecurrence& a, const PRecurrence& b, std::size_t count);

/**
 * Recurrence for the termwise product c_n = a_n·b_n, of order at most r·s.
 *
 * Row functionals rho_k(n) with c_{n+k} = rho_k(n)·(u_n ⊗ v_n) are built from
 * the companion matrices of both inputs (u_n, v_n their state vectors);
 * denominators are cleared and the first linear dependency among
 * rho_0..rho_m is read off by fraction_free_left_kernel.
 */
PRecurrence hadamard_recurrence(const PRecurrence& a, const PRecurrence& b);

struct GuessedRecurrence {
  PRecurrence recurrence;
  /// The fit is only known to reproduce this many terms.
  std::size_t certified_order;
  bool empirical = true;
};

/// Minimum number of terms guess_recurrence needs for the given ansatz.
std::size_t guess_terms_required(std::size_t max_order, std::size_t max_degree);

/**
 * Fits sum_{i<=r} sum_{d<=D} c_{i,d} n^d a_{n+i} = 0 to the supplied terms by
 * exact null-space computation, trying orders r = 1..max_order and degrees
 * 0..max_degree in turn. Returns nullopt when no ansatz admits a solution;
 * throws InsufficientTerms when f is shorter than guess_terms_required.
 */
std::optional<GuessedRecurrence> guess_recurrence(const TruncSeries& f, std::size_t max_order,
                                                  std::size_t max_degree);

}  // namespace gradeforge
