#pragma once

#include <cstdint>
#include <vector>

#include "gradeforge/rational.hpp"

namespace gradeforge {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Result of trial division: the smooth part as prime powers, plus whatever
/// cofactor survived the bound (1 when fully factored).
struct Factorization {
  std::vector<PrimePower> factors;
  Integer residue = 1;

  bool complete() const { return residue == 1; }
};

inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

/// Trial division of |n| by primes up to `bound`.
Factorization trial_factor(const Integer& n, std::uint64_t bound = kTrialDivisionBound);

bool is_prime(std::uint64_t n);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Integer& n, std::uint64_t p);

/// Inverse of a modulo m; a must be a unit mod m.
std::uint64_t inverse_mod(const Integer& a, std::uint64_t m);

/// Reduces num/den modulo m; den must be coprime to m.
std::uint64_t reduce_rational_mod(const Rational& value, std::uint64_t m);

}  // namespace gradeforge
