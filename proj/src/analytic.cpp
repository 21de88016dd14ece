#include "gradeforge/analytic.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>
#include <map>

#include "gradeforge/error.hpp"

namespace gradeforge {

namespace {

// C(n + k, k) as a polynomial in n.
UniPoly binomial_in_n(unsigned k) {
  UniPoly p(Rational(1));
  for (unsigned i = 1; i <= k; ++i) {
    p = p * UniPoly(std::vector<Rational>{Rational(i), Rational(1)});
    p = p * UniPoly(Rational(1, i));
  }
  return p;
}

// (alpha - z)^m in one variable.
Poly linear_power(const Rational& alpha, unsigned m) {
  Poly base = Poly::constant(1, alpha) - Poly::variable(1, 0);
  return base.pow(m);
}

void require_positive(double z) {
  if (!(z > 0) || !std::isfinite(z)) throw Error(ErrorCode::NonPositiveArgument, "argument must be positive");
}

}  // namespace

ExpPolyRational::ExpPolyRational(std::vector<Term> terms) {
  std::map<Rational, UniPoly> merged;
  for (auto& t : terms) {
    if (t.pole == 0) throw Error(ErrorCode::DivisionByZero, "pole at zero");
    merged[t.pole] += t.poly;
  }
  for (auto& [pole, poly] : merged) {
    if (!poly.is_zero()) terms_.push_back({pole, std::move(poly)});
  }
}

ExpPolyRational ExpPolyRational::pole_term(const Rational& c, const Rational& alpha, unsigned m) {
  if (m == 0) throw Error(ErrorCode::DegenerateInput, "pole multiplicity must be at least 1");
  if (alpha == 0) throw Error(ErrorCode::DivisionByZero, "pole at zero");
  const UniPoly poly = binomial_in_n(m - 1) * UniPoly(c * pow(alpha, -static_cast<long>(m - 1)));
  return ExpPolyRational({{alpha, poly}});
}

std::set<Rational> ExpPolyRational::poles() const {
  std::set<Rational> out;
  for (const auto& t : terms_) out.insert(t.pole);
  return out;
}

Rational ExpPolyRational::coefficient(std::size_t n) const {
  Rational acc = 0;
  const Rational nn(static_cast<unsigned long>(n));
  for (const auto& t : terms_) acc += t.poly.eval(nn) * pow(t.pole, -static_cast<long>(n) - 1);
  return acc;
}

TruncSeries ExpPolyRational::expand(std::size_t order) const {
  std::vector<Rational> c(order);
  for (std::size_t n = 0; n < order; ++n) c[n] = coefficient(n);
  return TruncSeries(std::move(c));
}

RatFun ExpPolyRational::to_ratfun() const {
  // poly(n)·alpha^(-n-1) = sum_k b_k·C(n+k, k)·alpha^(-n-1), and
  // C(n+k, k)·alpha^(-n-1) is the coefficient of alpha^k/(alpha - z)^(k+1).
  Poly den = Poly::constant(1, 1);
  for (const auto& t : terms_) den = den * linear_power(t.pole, static_cast<unsigned>(t.poly.degree() + 1));
  Poly num(1);
  for (const auto& t : terms_) {
    const unsigned m = static_cast<unsigned>(t.poly.degree() + 1);
    Poly others = Poly::constant(1, 1);
    for (const auto& u : terms_) {
      if (u.pole != t.pole) others = others * linear_power(u.pole, static_cast<unsigned>(u.poly.degree() + 1));
    }
    UniPoly rest = t.poly;
    for (int k = rest.degree(); k >= 0; --k) {
      const Rational b = rest[static_cast<std::size_t>(k)] * factorial(static_cast<unsigned long>(k));
      rest -= binomial_in_n(static_cast<unsigned>(k)) * UniPoly(b);
      num += others * linear_power(t.pole, m - 1 - static_cast<unsigned>(k)) * (b * pow(t.pole, k));
    }
  }
  return RatFun(std::move(num), std::move(den));
}

ExpPolyRational operator+(const ExpPolyRational& a, const ExpPolyRational& b) {
  std::vector<ExpPolyRational::Term> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return ExpPolyRational(std::move(all));
}

bool operator==(const ExpPolyRational& a, const ExpPolyRational& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].pole != b.terms_[i].pole || !(a.terms_[i].poly == b.terms_[i].poly)) return false;
  }
  return true;
}

ExpPolyRational rational_hadamard(const ExpPolyRational& f, const ExpPolyRational& g) {
  std::vector<ExpPolyRational::Term> out;
  for (const auto& s : f.terms()) {
    for (const auto& t : g.terms()) out.push_back({s.pole * t.pole, s.poly * t.poly});
  }
  return ExpPolyRational(std::move(out));
}

std::pair<std::vector<double>, std::vector<double>> gauss_laguerre(unsigned nodes) {
  if (nodes < 8) throw Error(ErrorCode::DegenerateInput, "Gauss–Laguerre needs at least 8 nodes");
  const double n = nodes;
  std::vector<double> x(nodes), w(nodes);
  double z = 0;
  for (unsigned i = 0; i < nodes; ++i) {
    // Initial guesses for the i-th root, then Newton on the three-term recurrence.
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - x[i - 2]);
    }
    double p1 = 0, p2 = 0, pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      p1 = 1.0;
      p2 = 0.0;
      for (unsigned j = 1; j <= nodes; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
      }
      pp = (n * p1 - n * p2) / z;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    w[i] = -1.0 / (pp * n * p2);
  }
  return {x, w};
}

QuadratureResult euler_integral(double z, const QuadratureConfig& cfg) {
  require_positive(z);
  if (cfg.nodes < 8) throw Error(ErrorCode::DegenerateInput, "Gauss–Laguerre needs at least 8 nodes");
  if (!(cfg.tolerance > 0)) throw Error(ErrorCode::DegenerateInput, "tolerance must be positive");
  auto integrand = [z](double u) { return 1.0 / (1.0 + z * u); };
  if (z < 4) {
    auto rule = [&](unsigned nodes) {
      const auto [x, w] = gauss_laguerre(nodes);
      double s = 0;
      for (unsigned i = nodes; i-- > 0;) s += w[i] * integrand(x[i]);
      return s;
    };
    const double coarse = rule(cfg.nodes);
    const double fine = rule(2 * cfg.nodes);
    const double err = std::abs(fine - coarse);
    if (err <= cfg.tolerance) return {coarse, err, "gauss-laguerre-" + std::to_string(cfg.nodes)};
  }
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0;
  const double value = integrator.integrate([z](double u) { return std::exp(-u) / (1.0 + z * u); },
                                           0.0, std::numeric_limits<double>::infinity(), cfg.tolerance, &err);
  return {value, err, "exp-sinh"};
}

BranchFormulaResult euler_branch_formula(double z, std::size_t terms, double eps) {
  require_positive(z);
  if (terms == 0) throw Error(ErrorCode::InsufficientTerms, "at least one term is needed");
  const double y = 1.0 / z;
  const double t = static_cast<double>(terms);
  const double log_last = t * std::log(y) - std::log(t) - std::lgamma(t + 1);
  if (log_last >= std::log(eps)) {
    throw Error(ErrorCode::InsufficientTerms,
                std::to_string(terms) + " terms leave a tail above " + std::to_string(eps) + " at z = " +
                    std::to_string(z));
  }
  double sum = 0;
  double power = 1;  // (-y)^n/n!
  for (std::size_t n = 1; n <= terms; ++n) {
    power *= -y / static_cast<double>(n);
    sum += power / static_cast<double>(n);
  }
  const double scale = y * std::exp(y);
  BranchFormulaResult out;
  out.value = -scale * std::log(y) - scale * (kEulerGamma + sum);
  const double t1 = t + 1;
  out.tail_bound = scale * std::exp(t1 * std::log(y) - std::log(t1) - std::lgamma(t1 + 1));
  out.branch_offset = 2 * boost::math::constants::pi<double>() * scale;
  return out;
}

double exponential_integral_series(double y, std::size_t terms) {
  require_positive(y);
  double sum = 0;
  double power = 1;
  for (std::size_t n = 1; n <= terms; ++n) {
    power *= -y / static_cast<double>(n);
    sum += power / static_cast<double>(n);
  }
  return -kEulerGamma - std::log(y) - sum;
}

QuadratureResult exponential_integral_quadrature(double y) {
  require_positive(y);
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0;
  const double value = integrator.integrate([](double u) { return std::exp(-u) / u; }, y,
                                           std::numeric_limits<double>::infinity(), 1e-12, &err);
  return {value, err, "exp-sinh"};
}

double euler_integral_derivative(unsigned n, double h) {
  require_positive(h);
  // Stencil z0 + (k - n/2)·h, k = 0..n, kept to the right of the origin.
  const double z0 = (n + 1) * h / 2;
  double acc = 0;
  double binom = 1;
  for (unsigned k = 0; k <= n; ++k) {
    const double zk = z0 + (k - n / 2.0) * h;
    const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom * euler_integral(zk).value;
    binom = binom * (n - k) / (k + 1);
  }
  return acc / std::pow(h, n);
}

Rational optics_identity_check(std::span<const Plate> plates, const TruncSeries& h, std::size_t order) {
  if (h.order() < order) {
    throw Error(ErrorCode::TruncationExceeded,
                "H is known through " + std::to_string(h.order()) + " terms, " + std::to_string(order) + " needed");
  }
  for (std::size_t i = 0; i < order; i += 2) {
    if (h[i] != 0) throw Error(ErrorCode::NotOdd, "H has a nonzero coefficient at even index " + std::to_string(i));
  }
  for (const auto& p : plates) {
    if (p.n == 0) throw Error(ErrorCode::DivisionByZero, "plate index n_k is zero");
  }
  const TruncSeries hh = h.truncated(order);

  TruncSeries lhs = TruncSeries::constant(0, order);
  for (const auto& p : plates) lhs = lhs + compose_scale(hh, 1 / p.n) * p.a;

  std::vector<Rational> w(order);
  for (std::size_t i = 1; i < order; i += 2) {
    for (const auto& p : plates) w[i] += p.a * pow(p.n, -static_cast<long>(i));
  }
  const TruncSeries rhs = hadamard_mul(hh, TruncSeries(std::move(w)));

  Rational worst = 0;
  for (std::size_t i = 0; i < order; ++i) worst = std::max(worst, Rational(abs(lhs[i] - rhs[i])));
  return worst;
}

OpticsFloatResult optics_identity_check(std::span<const std::pair<double, double>> plates, std::span<const double> h,
                                        std::size_t order) {
  if (h.size() < order) throw Error(ErrorCode::TruncationExceeded, "H is shorter than the requested order");
  for (std::size_t i = 0; i < order; i += 2) {
    if (h[i] != 0) throw Error(ErrorCode::NotOdd, "H has a nonzero coefficient at even index " + std::to_string(i));
  }
  for (const auto& [a, n] : plates) {
    if (n == 0) throw Error(ErrorCode::DivisionByZero, "plate index n_k is zero");
  }
  OpticsFloatResult out;
  out.lhs.assign(order, 0.0);
  out.rhs.assign(order, 0.0);
  for (std::size_t i = 1; i < order; i += 2) {
    double left = 0;
    double weight = 0;
    // Smallest terms first.
    for (auto it = plates.rbegin(); it != plates.rend(); ++it) {
      const double scaled = it->first * std::pow(it->second, -static_cast<double>(i));
      left += scaled * h[i];
      weight += scaled;
    }
    out.lhs[i] = left;
    out.rhs[i] = h[i] * weight;
    out.discrepancy = std::max(out.discrepancy, std::abs(out.lhs[i] - out.rhs[i]));
  }
  return out;
}

std::vector<std::pair<double, double>> odd_plates(std::size_t count) {
  std::vector<std::pair<double, double>> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double n = 2.0 * static_cast<double>(k) + 1.0;
    out[k] = {1.0 / n, n};
  }
  return out;
}

Rational tan_coefficient(unsigned j) {
  const std::size_t order = 2 * static_cast<std::size_t>(j) + 2;
  std::vector<Rational> sin_c(order), cos_c(order);
  for (std::size_t n = 0; n < order; ++n) {
    const Rational inv = Rational(1) / Rational(factorial(n));
    const bool negative = (n / 2) % 2 == 1;
    (n % 2 == 0 ? cos_c : sin_c)[n] = negative ? Rational(-inv) : inv;
  }
  const TruncSeries tan = cauchy_mul(TruncSeries(sin_c), reciprocal(TruncSeries(cos_c)));
  return tan[2 * j + 1];
}

ZetaOddCheck zeta_odd_denominator_check(unsigned j, std::size_t k) {
  if (j > 6) throw Error(ErrorCode::DegenerateInput, "j must be at most 6");
  if (k < 1000) throw Error(ErrorCode::InsufficientTerms, "summation cutoff must be at least 1000");
  const double s = 2.0 * j + 2.0;
  double partial = 0;
  for (std::size_t i = k; i-- > 0;) partial += std::pow(2.0 * static_cast<double>(i) + 1.0, -s);

  // Euler–Maclaurin for the sum over i >= K of f(i) = (2i + 1)^-s.
  const double x = 2.0 * static_cast<double>(k) + 1.0;
  const double integral = std::pow(x, 1.0 - s) / (2.0 * (s - 1.0));
  const double f = std::pow(x, -s);
  const double f1 = -2.0 * s * std::pow(x, -s - 1.0);
  const double f3 = -8.0 * s * (s + 1.0) * (s + 2.0) * std::pow(x, -s - 3.0);

  ZetaOddCheck out;
  out.tail = integral + f / 2.0 - f1 / 12.0;
  out.error_bar = std::abs(f3) / 720.0 + 4 * std::numeric_limits<double>::epsilon() * partial;
  out.lhs = partial + out.tail;
  const double pi = boost::math::constants::pi<double>();
  out.rhs = std::pow(pi, s) / std::pow(2.0, 2.0 * j + 3.0) * to_double(tan_coefficient(j));
  out.discrepancy = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace gradeforge
