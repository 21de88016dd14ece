#include "gradeforge/ratfun.hpp"

#include "gradeforge/error.hpp"

namespace gradeforge {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw Error(ErrorCode::VariableMismatch, "numerator/denominator arity");
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

RatFun::RatFun(const Poly& num) : RatFun(num, Poly::constant(num.nvars(), 1)) {}

void RatFun::normalize() {
  Rational lc = den_.leading_coefficient();
  if (lc == 1) return;
  Rational inv = 1 / lc;
  num_ *= inv;
  den_ *= inv;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

bool RatFun::equivalent(const RatFun& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

RatFun RatFun::embed(std::span<const std::size_t> placement, std::size_t target_nvars) const {
  return RatFun(num_.embed(placement, target_nvars), den_.embed(placement, target_nvars));
}

std::string RatFun::to_string(std::span<const std::string> names) const {
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

Rational ratfun_eval(const RatFun& f, std::span<const Rational> point) {
  Rational d = f.den().eval(point);
  if (d == 0) throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at the evaluation point");
  return f.num().eval(point) / d;
}

}  // namespace gradeforge
