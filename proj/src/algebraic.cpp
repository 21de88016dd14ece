#include "gradeforge/algebraic.hpp"

#include <algorithm>
#include <map>

#include "gradeforge/error.hpp"
#include "gradeforge/number_theory.hpp"

namespace gradeforge {

namespace {

Rational eval_at_origin(const Poly& p, const Rational& y) {
  const Rational point[] = {Rational(0), y};
  return p.eval(point);
}

// Polynomial in z (variable 0 of a bivariate poly with y stripped) as a series.
TruncSeries z_poly_series(const Poly& c, std::size_t order) {
  std::vector<Rational> out(order, Rational(0));
  for (const auto& [m, v] : c.terms()) {
    if (m[Annihilator::kZ] < order) out[m[Annihilator::kZ]] += v;
  }
  return TruncSeries(std::move(out));
}

}  // namespace

Annihilator::Annihilator(Poly p, Rational y0) : p_(std::move(p)), y0_(std::move(y0)) {
  if (p_.nvars() != 2) throw Error(ErrorCode::VariableMismatch, "annihilator must be bivariate in (z, y)");
  if (p_.is_zero()) throw Error(ErrorCode::NotARoot, "zero annihilator");
  if (eval_at_origin(p_, y0_) != 0) {
    throw Error(ErrorCode::NotARoot, "P(0, " + to_string(y0_) + ") != 0");
  }
  if (eval_at_origin(p_.derivative(kY), y0_) == 0) {
    throw Error(ErrorCode::RamifiedBranch, "dP/dy vanishes at (0, " + to_string(y0_) + ")");
  }
}

Annihilator Annihilator::shifted_branch(const Rational& c) const {
  return Annihilator(p_.shift_variable(kY, c), y0_ - c);
}

Poly bivariate(std::initializer_list<std::tuple<unsigned, unsigned, Rational>> terms) {
  Poly p(2);
  for (const auto& [i, j, c] : terms) p.add_term({i, j}, c);
  return p;
}

TruncSeries substitute_series(const Poly& p, const TruncSeries& f, std::size_t order) {
  order = std::min(order, f.order());
  const TruncSeries g = f.truncated(order);
  const auto by_y = p.coefficients_in(Annihilator::kY);
  TruncSeries acc = z_poly_series(by_y.back(), order);
  for (std::size_t k = by_y.size() - 1; k-- > 0;) {
    acc = cauchy_mul(acc, g) + z_poly_series(by_y[k], order);
  }
  return acc;
}

TruncSeries expand_branch(const Annihilator& a, std::size_t order) {
  if (order == 0) throw Error(ErrorCode::TruncationExceeded, "expansion order must be positive");
  const Poly& p = a.poly();
  const Poly dp = p.derivative(Annihilator::kY);
  std::vector<Rational> current{a.y0()};
  std::size_t prec = 1;
  while (prec < order) {
    const std::size_t next = std::min(2 * prec, order);
    current.resize(next, Rational(0));
    TruncSeries f(current);
    TruncSeries residual = substitute_series(p, f, next);
    TruncSeries slope = substitute_series(dp, f, next);
    TruncSeries step = cauchy_mul(residual, reciprocal(slope));
    current = (f - step).coeffs();
    prec = next;
  }
  return TruncSeries(std::move(current));
}

AnnihilatorCheck check_annihilator(const Annihilator& a, const TruncSeries& f) {
  if (f.order() < 2) throw Error(ErrorCode::TruncationExceeded, "verification needs at least two coefficients");
  AnnihilatorCheck out;
  out.slack = a.poly().degree(Annihilator::kZ);
  out.checked_through = f.order() > out.slack ? f.order() - out.slack : 1;
  TruncSeries residual = substitute_series(a.poly(), f, f.order());
  out.ok = true;
  for (std::size_t n = 0; n < out.checked_through; ++n) {
    if (residual[n] != 0) {
      out.ok = false;
      break;
    }
  }
  return out;
}

bool verify_annihilator(const Annihilator& a, const TruncSeries& f) { return check_annihilator(a, f).ok; }

EisensteinScan eisenstein_scan(const TruncSeries& f, std::size_t fit_until) {
  fit_until = std::clamp<std::size_t>(fit_until, 1, f.order());
  EisensteinScan out;
  std::vector<std::map<std::uint64_t, unsigned>> vals(fit_until);
  Integer residues = 1;
  for (std::size_t n = 0; n < fit_until; ++n) {
    Factorization fac = trial_factor(Integer(f[n].get_den()));
    for (const auto& pp : fac.factors) vals[n][pp.prime] = pp.exponent;
    if (!fac.complete()) {
      out.fully_factored = false;
      residues = lcm(residues, fac.residue);
    }
  }
  std::map<std::uint64_t, unsigned> rate;
  const std::size_t tail_start = std::max<std::size_t>(1, fit_until / 2);
  for (std::size_t n = 0; n < fit_until; ++n) {
    for (const auto& [p, v] : vals[n]) {
      auto& e = rate[p];
      if (n >= tail_start) e = std::max<unsigned>(e, static_cast<unsigned>((v + n - 1) / n));
    }
  }
  for (const auto& [p, e] : rate) {
    unsigned c = 0;
    for (std::size_t n = 0; n < fit_until; ++n) {
      auto it = vals[n].find(p);
      if (it == vals[n].end()) continue;
      const long excess = static_cast<long>(it->second) - static_cast<long>(n * e);
      if (excess > 0) c = std::max<unsigned>(c, static_cast<unsigned>(excess));
    }
    Integer pz(static_cast<unsigned long>(p));
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), pz.get_mpz_t(), e);
    out.growth *= t;
    mpz_pow_ui(t.get_mpz_t(), pz.get_mpz_t(), c);
    out.constant *= t;
  }
  out.constant *= residues;

  out.holds = true;
  Integer scale = out.constant;
  for (std::size_t n = 0; n < f.order(); ++n) {
    Rational scaled = f[n] * Rational(scale);
    if (scaled.get_den() != 1) {
      out.holds = false;
      out.first_failure = n;
      break;
    }
    scale *= out.growth;
  }
  return out;
}

}  // namespace gradeforge
