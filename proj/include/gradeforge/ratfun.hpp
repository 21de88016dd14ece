#pragma once

#include <span>
#include <string>

#include "gradeforge/poly.hpp"

namespace gradeforge {

/// Quotient of multivariate polynomials. Normalized so the grlex-leading
/// coefficient of the denominator is 1; no gcd cancellation is attempted.
class RatFun {
 public:
  RatFun(Poly num, Poly den);
  explicit RatFun(const Poly& num);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  /// Cross-multiplied equality (a/b == c/d iff ad == bc).
  bool equivalent(const RatFun& other) const;

  RatFun embed(std::span<const std::size_t> placement, std::size_t target_nvars) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

/// Exact value num(point)/den(point); throws PoleAtPoint when den vanishes.
Rational ratfun_eval(const RatFun& f, std::span<const Rational> point);

}  // namespace gradeforge
