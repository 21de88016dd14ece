#include "gradeforge/poly.hpp"

#include <numeric>
#include <sstream>

#include "gradeforge/error.hpp"

namespace gradeforge {

namespace {

unsigned degree_sum(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

void require_same_vars(const Poly& p, const Poly& q) {
  if (p.nvars() != q.nvars()) {
    throw Error(ErrorCode::VariableMismatch,
                std::to_string(p.nvars()) + " vs " + std::to_string(q.nvars()) + " variables");
  }
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = degree_sum(a);
  unsigned db = degree_sum(b);
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw Error(ErrorCode::VariableMismatch, "polynomial needs at least one variable");
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars, 0);
  m.at(index) = 1;
  return monomial(m, 1);
}

Poly Poly::monomial(const Monomial& exponents, const Rational& c) {
  Poly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_sum(terms_.begin()->first) == 0);
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw Error(ErrorCode::VariableMismatch, "monomial arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::DivisionByZero, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::DivisionByZero, "leading term of zero polynomial");
  return terms_.begin()->second;
}

unsigned Poly::degree(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
  return d;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : degree_sum(terms_.begin()->first);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_vars(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_vars(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_vars(a, b);
  Poly r(a.nvars());
  Monomial m(a.nvars());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.at(var) == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * m[var]);
  }
  return r;
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::VariableMismatch, "evaluation point arity");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] > 0) t *= gradeforge::pow(point[i], m[i]);
    }
    sum += t;
  }
  return sum;
}

Poly Poly::substitute_monomials(std::span<const Monomial> images, std::size_t target_nvars) const {
  if (images.size() != nvars_) throw Error(ErrorCode::VariableMismatch, "substitution arity");
  Poly r(target_nvars);
  Monomial out(target_nvars);
  for (const auto& [m, c] : terms_) {
    std::fill(out.begin(), out.end(), 0u);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (images[i].size() != target_nvars) throw Error(ErrorCode::VariableMismatch, "image arity");
      for (std::size_t k = 0; k < target_nvars; ++k) out[k] += m[i] * images[i][k];
    }
    r.add_term(out, c);
  }
  return r;
}

Poly Poly::shift_variable(std::size_t var, const Rational& shift) const {
  Poly linear = variable(nvars_, var) + constant(nvars_, shift);
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.at(var) = 0;
    r += monomial(rest, c) * linear.pow(m[var]);
  }
  return r;
}

Poly Poly::embed(std::span<const std::size_t> placement, std::size_t target_nvars) const {
  if (placement.size() != nvars_) throw Error(ErrorCode::VariableMismatch, "placement arity");
  Poly r(target_nvars);
  Monomial out(target_nvars);
  for (const auto& [m, c] : terms_) {
    std::fill(out.begin(), out.end(), 0u);
    for (std::size_t i = 0; i < nvars_; ++i) out.at(placement[i]) += m[i];
    r.add_term(out, c);
  }
  return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<Poly> out(degree(var) + 1, Poly(nvars_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[var] = 0;
    out[m[var]].add_term(rest, c);
  }
  return out;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_one = degree_sum(m) == 0;
    if (mag != 1 || is_one) os << gradeforge::to_string(mag);
    bool need_star = mag != 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      if (i < names.size()) {
        os << names[i];
      } else {
        os << "x" << i;
      }
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

Poly exact_div(const Poly& p, const Poly& q) {
  require_same_vars(p, q);
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  Poly quotient(p.nvars());
  Poly rest = p;
  const Monomial& lm = q.leading_monomial();
  const Rational& lc = q.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial& rm = rest.leading_monomial();
    if (!divides(lm, rm)) throw Error(ErrorCode::InexactDivision, "nonzero remainder");
    Monomial factor(rm.size());
    for (std::size_t i = 0; i < rm.size(); ++i) factor[i] = rm[i] - lm[i];
    Poly t = Poly::monomial(factor, rest.leading_coefficient() / lc);
    quotient += t;
    rest -= t * q;
  }
  return quotient;
}

Poly poly_arith(PolyOp op, const Poly& p, const Poly& q) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    case PolyOp::exact_div: return exact_div(p, q);
  }
  return p;
}

}  // namespace gradeforge
