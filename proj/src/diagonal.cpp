#include "gradeforge/diagonal.hpp"

#include <algorithm>
#include <numeric>

#include "gradeforge/error.hpp"

namespace gradeforge {

namespace {

bool divisible_by_var(const Poly& p, std::size_t var) {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return t.first[var] > 0; });
}

Poly divide_by_var(const Poly& p, std::size_t var) {
  Poly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial lowered = m;
    --lowered[var];
    out.add_term(lowered, c);
  }
  return out;
}

std::size_t agreeing_prefix(const TruncSeries& a, const TruncSeries& b) {
  std::size_t n = 0;
  const std::size_t limit = std::min(a.order(), b.order());
  while (n < limit && a[n] == b[n]) ++n;
  return n;
}

Rational value_at_origin(const RatFun& r) {
  const std::vector<Rational> origin(r.nvars(), Rational(0));
  return ratfun_eval(r, origin);
}

}  // namespace

RatFun furstenberg_bivariate(const Annihilator& a) {
  constexpr std::size_t kZ = Annihilator::kZ;
  constexpr std::size_t kY = Annihilator::kY;
  if (a.y0() != 0) throw Error(ErrorCode::BranchNotAtZero, "branch value at the origin is " + to_string(a.y0()));
  const Poly dp = a.poly().derivative(kY);
  if (dp.constant_term() == 0) throw Error(ErrorCode::RamifiedAtOrigin, "dP/dy vanishes at the origin");

  // z -> x·y, y -> y, in variables (x, y).
  const std::vector<Monomial> images{Monomial{1, 1}, Monomial{0, 1}};
  static_assert(kZ == 0 && kY == 1);
  Poly num = dp.substitute_monomials(images, 2) * Poly::monomial(Monomial{0, 2}, 1);
  Poly den = a.poly().substitute_monomials(images, 2);
  while (!den.is_zero() && den.constant_term() == 0 && divisible_by_var(den, 1) && divisible_by_var(num, 1)) {
    num = divide_by_var(num, 1);
    den = divide_by_var(den, 1);
  }
  return RatFun(std::move(num), std::move(den));
}

TruncSeries diagonal_extract(const RatFun& r, std::size_t n, std::size_t budget) {
  if (n == 0) throw Error(ErrorCode::TruncationExceeded, "diagonal order must be positive");
  const std::size_t m = r.nvars();
  const Rational d0 = r.den().constant_term();
  if (d0 == 0) throw Error(ErrorCode::DenominatorVanishesAtOrigin, "denominator vanishes at the origin");

  std::vector<std::size_t> stride(m);
  std::size_t box = 1;
  for (std::size_t i = 0; i < m; ++i) {
    stride[i] = box;
    if (box > budget / n) {
      throw Error(ErrorCode::BudgetExceeded, std::to_string(n) + "^" + std::to_string(m) +
                                                 " coefficients exceed the budget of " + std::to_string(budget));
    }
    box *= n;
  }

  auto inside = [&](const Monomial& e) { return std::all_of(e.begin(), e.end(), [&](unsigned x) { return x < n; }); };
  auto index_of = [&](const Monomial& e) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m; ++i) idx += e[i] * stride[i];
    return idx;
  };

  struct Term {
    Monomial exponent;
    std::size_t offset;
    Rational coeff;
  };
  std::vector<Term> den_terms;
  for (const auto& [e, c] : r.den().terms()) {
    if (inside(e) && index_of(e) != 0) den_terms.push_back({e, index_of(e), c});
  }

  std::vector<Rational> s(box);
  for (const auto& [e, c] : r.num().terms()) {
    if (inside(e)) s[index_of(e)] = c;
  }
  const Rational inv_d0 = 1 / d0;
  std::vector<unsigned> digits(m, 0);
  for (std::size_t idx = 0; idx < box; ++idx) {
    Rational acc = s[idx];
    for (const auto& t : den_terms) {
      bool below = true;
      for (std::size_t i = 0; i < m && below; ++i) below = t.exponent[i] <= digits[i];
      if (below && s[idx - t.offset] != 0) acc -= t.coeff * s[idx - t.offset];
    }
    s[idx] = acc * inv_d0;
    for (std::size_t i = 0; i < m; ++i) {
      if (++digits[i] < n) break;
      digits[i] = 0;
    }
  }

  const std::size_t diag_step = std::accumulate(stride.begin(), stride.end(), std::size_t{0});
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = s[k * diag_step];
  return TruncSeries(std::move(out));
}

TruncSeries witness_series(const DiagonalWitness& w, std::size_t n) {
  std::vector<Rational> c = diagonal_extract(w.r, n).coeffs();
  c[0] += w.constant_shift;
  return TruncSeries(std::move(c));
}

DiagonalWitness make_witness(const Annihilator& a, std::size_t verify_order) {
  const Rational shift = a.y0();
  const Annihilator centered = shift == 0 ? a : a.shifted_branch(shift);
  DiagonalWitness w{furstenberg_bivariate(centered), 1, 0, {a}, shift};
  w.verified_order = agreeing_prefix(witness_series(w, verify_order), expand_branch(a, verify_order));
  return w;
}

RatFun product_lift(std::span<const RatFun> factors, std::span<const std::vector<std::size_t>> placements,
                    std::size_t target_nvars) {
  if (factors.size() != placements.size()) {
    throw Error(ErrorCode::VariableMismatch, "one placement per factor is required");
  }
  std::vector<bool> used(target_nvars, false);
  RatFun out(Poly::constant(target_nvars, 1));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (placements[i].size() != factors[i].nvars()) {
      throw Error(ErrorCode::VariableMismatch, "placement size differs from the factor's variable count");
    }
    for (std::size_t v : placements[i]) {
      if (v >= target_nvars) throw Error(ErrorCode::VariableMismatch, "placement outside the target variables");
      if (used[v]) throw Error(ErrorCode::VariableCollision, "variable " + std::to_string(v) + " used twice");
      used[v] = true;
    }
    out = out * factors[i].embed(placements[i], target_nvars);
  }
  return out;
}

DiagonalWitness product_lift(std::span<const DiagonalWitness> witnesses, std::size_t verify_order) {
  if (witnesses.size() < 2) throw Error(ErrorCode::DegenerateInput, "a product lift needs at least two witnesses");
  std::vector<RatFun> factors;
  std::vector<std::vector<std::size_t>> placements;
  std::size_t total = 0;
  for (const auto& w : witnesses) {
    factors.push_back(w.r);
    std::vector<std::size_t> block(w.r.nvars());
    std::iota(block.begin(), block.end(), total);
    placements.push_back(std::move(block));
    total += w.r.nvars();
  }

  DiagonalWitness out{product_lift(factors, placements, total), 0, 0, {}, 0};
  // (a·[n=0] + D) * (b·[n=0] + E) = (ab + a·E_0 + b·D_0)·[n=0] + D * E.
  Rational shift = witnesses[0].constant_shift;
  Rational d0 = value_at_origin(witnesses[0].r);
  for (std::size_t i = 1; i < witnesses.size(); ++i) {
    const Rational b = witnesses[i].constant_shift;
    const Rational e0 = value_at_origin(witnesses[i].r);
    shift = shift * b + shift * e0 + b * d0;
    d0 *= e0;
  }
  out.constant_shift = shift;

  TruncSeries expected = TruncSeries::geometric(verify_order);
  for (const auto& w : witnesses) {
    out.d += w.d;
    out.factors.insert(out.factors.end(), w.factors.begin(), w.factors.end());
  }
  for (const auto& f : out.factors) expected = hadamard_mul(expected, expand_branch(f, verify_order));
  out.verified_order = agreeing_prefix(witness_series(out, verify_order), expected);
  return out;
}

}  // namespace gradeforge
