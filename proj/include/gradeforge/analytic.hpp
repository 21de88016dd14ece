#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gradeforge/ratfun.hpp"
#include "gradeforge/series.hpp"
#include "gradeforge/unipoly.hpp"

namespace gradeforge {

/**
 * A rational series written by its coefficients:
 *   a_n = sum over poles alpha of poly_alpha(n)·alpha^(-n-1).
 * A pole of multiplicity m carries a polynomial of degree m - 1. Poles are
 * nonzero, distinct and sorted; zero polynomials are dropped.
 */
class ExpPolyRational {
 public:
  struct Term {
    Rational pole;
    UniPoly poly;
  };

  ExpPolyRational() = default;
  /// Merges equal poles and drops vanishing terms; throws DivisionByZero for a zero pole.
  explicit ExpPolyRational(std::vector<Term> terms);

  /// c/(alpha - z)^m.
  static ExpPolyRational pole_term(const Rational& c, const Rational& alpha, unsigned m);

  const std::vector<Term>& terms() const { return terms_; }
  std::set<Rational> poles() const;

  Rational coefficient(std::size_t n) const;
  TruncSeries expand(std::size_t order) const;

  /// The same series as a quotient of polynomials in z.
  RatFun to_ratfun() const;

  friend ExpPolyRational operator+(const ExpPolyRational& a, const ExpPolyRational& b);
  friend bool operator==(const ExpPolyRational& a, const ExpPolyRational& b);

 private:
  std::vector<Term> terms_;
};

/// Termwise product; every output pole is a product of an input pole from each side.
ExpPolyRational rational_hadamard(const ExpPolyRational& f, const ExpPolyRational& g);

struct QuadratureConfig {
  /// Gauss–Laguerre node count; the error estimate compares against twice as many.
  unsigned nodes = 64;
  double tolerance = 1e-10;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  std::string method;
};

/// Gauss–Laguerre nodes and weights for the weight e^{-u} on [0, inf).
std::pair<std::vector<double>, std::vector<double>> gauss_laguerre(unsigned nodes);

/**
 * I(z) = integral over u >= 0 of e^{-u}/(1 + z·u).
 *
 * Gauss–Laguerre for z < 4, falling back to adaptive exp-sinh quadrature when
 * z >= 4 or when node doubling disagrees by more than the tolerance.
 * Throws NonPositiveArgument unless z > 0.
 */
QuadratureResult euler_integral(double z, const QuadratureConfig& cfg = {});

/// Euler–Mascheroni constant to 30 digits.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

struct BranchFormulaResult {
  double value = 0;
  /// First omitted term of the alternating sum, scaled like the sum.
  double tail_bound = 0;
  /// 2·pi·e^{1/z}/z, the spacing between branches.
  double branch_offset = 0;
};

/**
 * -(1/z)·e^{1/z}·log(1/z) + S(1/z), S(y) = -y·e^y·(gamma + sum_{n=1..terms} (-y)^n/(n·n!)).
 * Throws NonPositiveArgument unless z > 0 and InsufficientTerms when
 * y^terms/(terms·terms!) >= eps.
 */
BranchFormulaResult euler_branch_formula(double z, std::size_t terms = 80, double eps = 1e-15);

/// E_1(y) = -gamma - log y - sum_{n>=1} (-y)^n/(n·n!) for y > 0.
double exponential_integral_series(double y, std::size_t terms = 80);

/// E_1(y) = integral from y to inf of e^{-u}/u, by adaptive quadrature.
QuadratureResult exponential_integral_quadrature(double y);

/// n-th derivative of I at z0 = (n+1)·h/2 by a central difference with step h.
double euler_integral_derivative(unsigned n, double h = 1e-3);

struct Plate {
  Rational a;
  Rational n;
};

/**
 * Both sides of sum_k a_k·H(z/n_k) = H(z) * sum_k a_k·n_k·z/(n_k^2 - z^2)
 * through z^{order-1}, exactly. Returns the largest coefficient difference.
 *
 * Throws NotOdd when H has a nonzero even coefficient below `order`,
 * DivisionByZero for n_k = 0 and TruncationExceeded when H is too short.
 */
Rational optics_identity_check(std::span<const Plate> plates, const TruncSeries& h, std::size_t order);

struct OpticsFloatResult {
  std::vector<double> lhs;
  std::vector<double> rhs;
  double discrepancy = 0;
};

/// Floating-point version for plate systems too large for exact sums.
OpticsFloatResult optics_identity_check(std::span<const std::pair<double, double>> plates, std::span<const double> h,
                                        std::size_t order);

/// Plates a_k = 1/(2k + 1), n_k = 2k + 1 for k < count.
std::vector<std::pair<double, double>> odd_plates(std::size_t count);

/// Coefficient of z^(2j+1) in tan z, from sin times the reciprocal of cos.
Rational tan_coefficient(unsigned j);

struct ZetaOddCheck {
  /// Sum of (2k+1)^-(2j+2), k < K, plus an Euler–Maclaurin tail estimate.
  double lhs = 0;
  /// pi^(2j+2)·t_(2j+1)/2^(2j+3).
  double rhs = 0;
  double discrepancy = 0;
  /// Bound on the error of the tail estimate.
  double error_bar = 0;
  /// The tail estimate itself.
  double tail = 0;
};

/// Throws DegenerateInput for j > 6 and InsufficientTerms for K < 1000.
ZetaOddCheck zeta_odd_denominator_check(unsigned j, std::size_t k);

}  // namespace gradeforge
