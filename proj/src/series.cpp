#include "gradeforge/series.hpp"

#include <algorithm>

#include "gradeforge/error.hpp"

namespace gradeforge {

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::TruncationExceeded, "a series needs at least one coefficient");
}

TruncSeries TruncSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(std::max<std::size_t>(order, 1), Rational(0));
  v[0] = c;
  return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::geometric(std::size_t order) {
  return TruncSeries(std::vector<Rational>(std::max<std::size_t>(order, 1), Rational(1)));
}

const Rational& TruncSeries::operator[](std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw Error(ErrorCode::TruncationExceeded,
                "coefficient " + std::to_string(n) + " requested from a series of order " +
                    std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
  if (order == 0 || order > coeffs_.size()) {
    throw Error(ErrorCode::TruncationExceeded,
                "cannot truncate order " + std::to_string(coeffs_.size()) + " to " + std::to_string(order));
  }
  return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
  return TruncSeries(std::move(out));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const Rational& c) {
  TruncSeries r = a;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncSeries hadamard_mul(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
  return TruncSeries(std::move(out));
}

TruncSeries cauchy_mul(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n, Rational(0));
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (y[j] != 0) out[i + j] += x[i] * y[j];
    }
  }
  return TruncSeries(std::move(out));
}

TruncSeries reciprocal(const TruncSeries& a) {
  if (a[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "reciprocal of a series with zero constant term");
  const std::size_t n = a.order();
  const auto& x = a.coeffs();
  std::vector<Rational> out(n, Rational(0));
  const Rational inv0 = 1 / x[0];
  out[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (x[i] != 0) acc += x[i] * out[k - i];
    }
    out[k] = -acc * inv0;
  }
  return TruncSeries(std::move(out));
}

TruncSeries compose_scale(const TruncSeries& a, const Rational& c) {
  std::vector<Rational> out(a.order());
  Rational power = 1;
  for (std::size_t i = 0; i < a.order(); ++i) {
    out[i] = a[i] * power;
    power *= c;
  }
  return TruncSeries(std::move(out));
}

TruncSeries shift_up(const TruncSeries& a, std::size_t k) {
  std::vector<Rational> out(k, Rational(0));
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return TruncSeries(std::move(out));
}

}  // namespace gradeforge
