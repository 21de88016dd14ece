#pragma once

#include <cstddef>
#include <vector>

#include "gradeforge/rational.hpp"

namespace gradeforge {

/**
 * A formal power series known through a finite number of coefficients.
 *
 * order() is the count of known coefficients a_0..a_{order-1}. Nothing is
 * assumed about coefficients past the order: reading one throws
 * TruncationExceeded, and every binary operation truncates its result to
 * the smaller input order rather than padding with zeros.
 */
class TruncSeries {
 public:
  /// coeffs must be nonempty.
  explicit TruncSeries(std::vector<Rational> coeffs);

  static TruncSeries constant(const Rational& c, std::size_t order);
  /// 1/(1 - z) truncated: the Hadamard identity.
  static TruncSeries geometric(std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t n) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// First `order` coefficients; order must not exceed the current one.
  TruncSeries truncated(std::size_t order) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const Rational& c);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

  bool is_zero() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Termwise product: coefficient n is a_n·b_n, order min of the inputs.
TruncSeries hadamard_mul(const TruncSeries& a, const TruncSeries& b);

/// Ordinary (Cauchy) product truncated to the smaller order.
TruncSeries cauchy_mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse; throws ZeroConstantTerm when a_0 == 0.
TruncSeries reciprocal(const TruncSeries& a);

/// a(c·z): coefficient n becomes a_n·c^n.
TruncSeries compose_scale(const TruncSeries& a, const Rational& c);

/// z^k·a(z), keeping the known range honest (order grows by k).
TruncSeries shift_up(const TruncSeries& a, std::size_t k);

}  // namespace gradeforge
