#include "gradeforge/number_theory.hpp"

#include "gradeforge/error.hpp"

namespace gradeforge {

namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

Factorization trial_factor(const Integer& n, std::uint64_t bound) {
  Factorization out;
  Integer rest = abs(n);
  if (rest == 0) {
    out.residue = 0;
    return out;
  }
  for (std::uint32_t p : small_primes()) {
    if (p > bound || rest == 1) break;
    if (Integer(p) * p > rest) {
      // rest is prime now; record it if it is within the bound
      if (rest <= bound) {
        out.factors.push_back({rest.get_ui(), 1});
        rest = 1;
      }
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    out.factors.push_back({p, e});
  }
  out.residue = rest;
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

unsigned valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw Error(ErrorCode::DivisionByZero, "valuation of zero");
  Integer rest = n;
  unsigned v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::uint64_t inverse_mod(const Integer& a, std::uint64_t m) {
  Integer mod(static_cast<unsigned long>(m));
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw Error(ErrorCode::DivisionByZero, "no inverse of " + to_string(a) + " modulo " + std::to_string(m));
  }
  return inv.get_ui();
}

std::uint64_t reduce_rational_mod(const Rational& value, std::uint64_t m) {
  Integer mod(static_cast<unsigned long>(m));
  Integer num = value.get_num();
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  if (value.get_den() == 1) return r.get_ui();
  Integer prod = r * inverse_mod(Integer(value.get_den()), m);
  mpz_fdiv_r(r.get_mpz_t(), prod.get_mpz_t(), mod.get_mpz_t());
  return r.get_ui();
}

}  // namespace gradeforge
