#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradeforge/poly.hpp"
#include "gradeforge/rational.hpp"

namespace gradeforge {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// powers with no trailing zeros. Used for the polynomial-in-n coefficients
/// of recurrences and the matrices of the closure algorithm.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants mix freely

  /// The polynomial n.
  static UniPoly identity();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& n) const;
  /// p(n + k).
  UniPoly shifted(long k) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  /// Exact quotient; throws InexactDivision otherwise.
  UniPoly exact_quotient(const UniPoly& divisor) const;

  /// Primitive integer representative: integer coefficients with gcd 1 and
  /// the scaling factor used (this = factor · result).
  std::pair<Rational, UniPoly> primitive_part() const;

  /// Integer roots in [from, +inf), ascending.
  std::vector<long> integer_roots_from(long from) const;

  Poly to_poly() const;
  static UniPoly from_poly(const Poly& p);

  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace gradeforge
