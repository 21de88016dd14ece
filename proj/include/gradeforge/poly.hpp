#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gradeforge/rational.hpp"

namespace gradeforge {

using Monomial = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lex with variable 0
/// most significant. Fixed globally; RatFun normalization depends on it.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Rational. Terms are kept in
/// decreasing grlex order with no zero coefficients.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Poly(std::size_t nvars = 1);

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(const Monomial& exponents, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  /// Adds c·x^m; zero results are dropped.
  void add_term(const Monomial& m, const Rational& c);

  /// Leading term under grlex; the polynomial must be nonzero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  unsigned degree(std::size_t var) const;
  unsigned total_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(unsigned k) const;
  Poly derivative(std::size_t var) const;

  /// Evaluates at a point; point.size() must equal nvars().
  Rational eval(std::span<const Rational> point) const;

  /// Replaces variable i by the monomial images[i] (all in `target_nvars`
  /// variables), e.g. P(z, y) -> P(x*y, y).
  Poly substitute_monomials(std::span<const Monomial> images, std::size_t target_nvars) const;

  /// Replaces variable `var` by (var + shift).
  Poly shift_variable(std::size_t var, const Rational& shift) const;

  /// Renames variable i to placement[i] inside a space of `target_nvars`.
  Poly embed(std::span<const std::size_t> placement, std::size_t target_nvars) const;

  /// Collects coefficients by the power of `var`: result[k] holds the
  /// polynomial (same variable count) multiplying var^k, with var removed.
  std::vector<Poly> coefficients_in(std::size_t var) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul, exact_div };

/// Exact polynomial arithmetic. exact_div throws InexactDivision when the
/// divisor does not divide exactly; mismatched variable counts throw
/// VariableMismatch.
Poly poly_arith(PolyOp op, const Poly& p, const Poly& q);

Poly exact_div(const Poly& p, const Poly& q);

}  // namespace gradeforge
