#include "gradeforge/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gradeforge/error.hpp"
#include "zpoly.hpp"

namespace gradeforge {

namespace {

// Root scans beyond this many integers are refused; recurrence coefficients
// in practice have tiny root bounds.
constexpr long kRootScanLimit = 100'000'000;

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UniPoly UniPoly::identity() { return UniPoly(std::vector<Rational>{0, 1}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::eval(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

UniPoly UniPoly::shifted(long k) const {
  // Horner in the polynomial ring: p(n + k) = (...(c_d (n+k) + c_{d-1})(n+k) ...)
  UniPoly linear(std::vector<Rational>{Rational(k), 1});
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + UniPoly(*it);
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quo(a.coeffs_.size() - b.coeffs_.size() + 1, Rational(0));
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + db] / b.leading();
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_quotient(const UniPoly& divisor) const {
  auto [q, r] = divmod(*this, divisor);
  if (!r.is_zero()) throw Error(ErrorCode::InexactDivision, "nonzero remainder " + r.to_string());
  return q;
}

std::pair<Rational, UniPoly> UniPoly::primitive_part() const {
  if (is_zero()) return {Rational(1), UniPoly{}};
  Integer den = common_denominator(coeffs_);
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd(g, Integer(c.get_num() * (den / c.get_den())));
  Rational factor = make_rational(g, den);
  if (leading() < 0) factor = -factor;
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c / factor);
  return {factor, UniPoly(std::move(out))};
}

std::vector<long> UniPoly::integer_roots_from(long from) const {
  if (is_zero()) throw Error(ErrorCode::DegenerateInput, "roots of the zero polynomial");
  std::vector<long> roots;
  auto [factor, prim] = primitive_part();
  std::size_t low = 0;
  while (prim.coeffs_[low] == 0) ++low;
  if (low > 0 && from <= 0) roots.push_back(0);
  if (prim.degree() == static_cast<int>(low)) return roots;  // c·n^low

  // Fujiwara bound: |root| <= 2 max_i |a_{d-i} / a_d|^{1/i}.
  const int d = prim.degree();
  const double log_lead = log_abs(Integer(prim.leading().get_num()));
  double log_bound = -HUGE_VAL;
  for (int i = 1; i <= d - static_cast<int>(low); ++i) {
    const Rational& c = prim.coeffs_[static_cast<std::size_t>(d - i)];
    if (c == 0) continue;
    log_bound = std::max(log_bound, (log_abs(Integer(c.get_num())) - log_lead) / i);
  }
  const double bound = 2.0 * std::exp(log_bound) + 2.0;
  if (!(bound < static_cast<double>(kRootScanLimit))) {
    throw Error(ErrorCode::BudgetExceeded, "integer root bound " + std::to_string(bound) + " too large");
  }
  const long b = static_cast<long>(bound);
  const Integer trailing = prim.coeffs_[low].get_num();
  for (long k = std::max(from, -b); k <= b; ++k) {
    if (k == 0) continue;
    if (mpz_divisible_ui_p(trailing.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k)) == 0) continue;
    if (prim.eval(Rational(k)) == 0) roots.push_back(k);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Poly UniPoly::to_poly() const {
  Poly p(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p.add_term({static_cast<unsigned>(i)}, coeffs_[i]);
  return p;
}

UniPoly UniPoly::from_poly(const Poly& p) {
  if (p.nvars() != 1) throw Error(ErrorCode::VariableMismatch, "expected a univariate polynomial");
  std::vector<Rational> out(p.degree(0) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) out[m[0]] = c;
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  std::string names[] = {var};
  return to_poly().to_string(names);
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  auto to_z = [](const UniPoly& p) {
    const Integer scale = common_denominator(p.coeffs());
    detail::ZPoly out;
    for (const auto& c : p.coeffs()) out.emplace_back(c.get_num() * (scale / c.get_den()));
    return out;
  };
  const detail::ZPoly g = detail::gcd(to_z(a), to_z(b));
  if (g.empty()) return {};
  std::vector<Rational> monic;
  for (const auto& c : g) monic.emplace_back(Rational(c, g.back()));
  for (auto& c : monic) c.canonicalize();
  return UniPoly(std::move(monic));
}

}  // namespace gradeforge
