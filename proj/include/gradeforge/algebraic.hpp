#pragma once

#include <cstddef>
#include <optional>

#include "gradeforge/poly.hpp"
#include "gradeforge/series.hpp"

namespace gradeforge {

/**
 * An algebraic power series given implicitly: the unique series root y = f(z)
 * of P(z, y) = 0 with f(0) = y0.
 *
 * P lives in two variables, index 0 for z and index 1 for y. Construction
 * checks P(0, y0) = 0 (else NotARoot) and dP/dy(0, y0) != 0 (else
 * RamifiedBranch): only simple, unramified branches are representable.
 */
class Annihilator {
 public:
  static constexpr std::size_t kZ = 0;
  static constexpr std::size_t kY = 1;

  Annihilator(Poly p, Rational y0);

  const Poly& poly() const { return p_; }
  const Rational& y0() const { return y0_; }
  unsigned declared_degree() const { return p_.degree(kY); }

  /// Annihilator of f - c (the same branch moved by -c).
  Annihilator shifted_branch(const Rational& c) const;

 private:
  Poly p_;
  Rational y0_;
};

/// Builds P from (z-exponent, y-exponent, coefficient) triples.
Poly bivariate(std::initializer_list<std::tuple<unsigned, unsigned, Rational>> terms);

/// P(z, f(z)) truncated to min(order(f), order).
TruncSeries substitute_series(const Poly& p, const TruncSeries& f, std::size_t order);

/// Expands the designated branch through z^{order-1} by Newton iteration
/// with precision doubling.
TruncSeries expand_branch(const Annihilator& a, std::size_t order);

struct AnnihilatorCheck {
  bool ok = false;
  /// P(z, f) vanishes at every index below this bound.
  std::size_t checked_through = 0;
  /// Indices withheld from the check: the z-degree of P.
  std::size_t slack = 0;
};

AnnihilatorCheck check_annihilator(const Annihilator& a, const TruncSeries& f);

/// True iff P(z, f(z)) vanishes through order(f) minus the z-degree of P.
bool verify_annihilator(const Annihilator& a, const TruncSeries& f);

/// Denominator-growth scan for integers C, A with C·A^n·a_n integral.
struct EisensteinScan {
  Integer growth = 1;    // A
  Integer constant = 1;  // C
  bool holds = false;
  /// First index in the validation range where C·A^n·a_n is not integral.
  std::optional<std::size_t> first_failure;
  bool fully_factored = true;
};

/// Fits A and C on indices below `fit_until`, then checks every index of f.
EisensteinScan eisenstein_scan(const TruncSeries& f, std::size_t fit_until);

}  // namespace gradeforge
