#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gradeforge/analytic.hpp"
#include "gradeforge/error.hpp"
#include "oracles.hpp"

using namespace gradeforge;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::SchemaViolation;
}

// z/sqrt(1 - z^2) = sum binom(2j, j)/4^j z^{2j+1}.
TruncSeries inverse_sqrt_odd(std::size_t order) {
  const auto cb = oracle::central_binomials(order);
  std::vector<Rational> c(order);
  for (std::size_t j = 0; 2 * j + 1 < order; ++j) c[2 * j + 1] = Rational(cb[j]) / Rational(Integer(1) << (2 * j));
  return TruncSeries(std::move(c));
}

}  // namespace

TEST_SUITE("analytic_bench") {
  TEST_CASE("rational_hadamard examples") {
    const auto f = ExpPolyRational::pole_term(1, 2, 1), g = ExpPolyRational::pole_term(1, 3, 1);
    const auto h = rational_hadamard(f, g);
    CHECK(h == ExpPolyRational::pole_term(1, 6, 1));
    CHECK(h.to_ratfun().equivalent(RatFun(Poly::constant(1, 1), Poly::constant(1, 6) - Poly::variable(1, 0))));

    const auto geo = ExpPolyRational::pole_term(1, 1, 1);
    const auto a = ExpPolyRational::pole_term(Rational(2, 3), Rational(5, 2), 1);
    CHECK(rational_hadamard(a, geo) == a);

    const auto sq = ExpPolyRational::pole_term(1, 1, 2);
    const auto s = rational_hadamard(sq, sq);
    CHECK(s.poles() == std::set<Rational>{1});
    const Poly z = Poly::variable(1, 0), one = Poly::constant(1, 1);
    const RatFun expect(one + z, (one - z) * (one - z) * (one - z));
    CHECK(s.to_ratfun().equivalent(expect));
    std::vector<Rational> c;
    for (long n = 0; n < 20; ++n) c.emplace_back((n + 1) * (n + 1));
    CHECK(s.expand(20) == TruncSeries(c));
  }

  TEST_CASE("poles of a product are products of poles") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> count(1, 3), mult(1, 2);
    for (int t = 0; t < 50; ++t) {
      ExpPolyRational f, g;
      for (int i = count(rng); i > 0; --i) {
        Rational pole = oracle::random_rational(rng);
        if (pole == 0) pole = 1;
        f = f + ExpPolyRational::pole_term(oracle::random_rational(rng) + 10, pole, mult(rng));
      }
      for (int i = count(rng); i > 0; --i) {
        Rational pole = oracle::random_rational(rng);
        if (pole == 0) pole = -1;
        g = g + ExpPolyRational::pole_term(oracle::random_rational(rng) + 10, pole, mult(rng));
      }
      const auto h = rational_hadamard(f, g);
      for (const auto& p : h.poles()) {
        bool found = false;
        for (const auto& a : f.poles())
          for (const auto& b : g.poles()) found = found || a * b == p;
        REQUIRE(found);
      }
      REQUIRE(h.expand(30) == hadamard_mul(f.expand(30), g.expand(30)));
      // The quotient form expands to the same coefficients.
      const RatFun r = h.to_ratfun();
      REQUIRE(cauchy_mul(reciprocal(TruncSeries([&] {
                           std::vector<Rational> d(30);
                           for (const auto& [m, c] : r.den().terms())
                             if (m[0] < 30) d[m[0]] = c;
                           return d;
                         }())),
                         TruncSeries([&] {
                           std::vector<Rational> n(30);
                           for (const auto& [m, c] : r.num().terms())
                             if (m[0] < 30) n[m[0]] = c;
                           return n;
                         }())) == h.expand(30));
    }
  }

  TEST_CASE("pole_term coefficients") {
    // 1/(2 - z)^2 = sum (n + 1)/2^{n+2} z^n.
    const auto f = ExpPolyRational::pole_term(1, 2, 2);
    for (unsigned n = 0; n < 10; ++n) CHECK(f.coefficient(n) == Rational(n + 1) / Rational(Integer(1) << (n + 2)));
    CHECK(code_of([] { ExpPolyRational::pole_term(1, 0, 1); }) == ErrorCode::DivisionByZero);
  }

  TEST_CASE("Euler integral values") {
    CHECK(euler_integral(1).value == doctest::Approx(0.596347).epsilon(1e-5));
    CHECK(euler_integral(1e-4).value == doctest::Approx(1).epsilon(1e-3));
    for (double z : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      CAPTURE(z);
      CHECK(std::abs(euler_integral(z).value - euler_branch_formula(z).value) < 1e-8);
    }
    CHECK(code_of([] { euler_integral(0); }) == ErrorCode::NonPositiveArgument);
    CHECK(code_of([] { euler_integral(-1); }) == ErrorCode::NonPositiveArgument);
  }

  TEST_CASE("adaptive fallback for large z") {
    const QuadratureResult q = euler_integral(8);
    CHECK(q.method != "gauss-laguerre-64");
    CHECK(std::abs(q.value - euler_branch_formula(8).value) < 1e-8);
  }

  TEST_CASE("Gauss-Laguerre integrates polynomials exactly") {
    const auto [x, w] = gauss_laguerre(16);
    for (unsigned k = 0; k < 20; ++k) {
      double s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], k);
      CHECK(s == doctest::Approx(std::tgamma(k + 1.0)).epsilon(1e-10));
    }
  }

  TEST_CASE("branch formula at z = 1") {
    const double s = -std::numbers::e * (kEulerGamma + [] {
      double sum = 0, fact = 1;
      for (int n = 1; n < 30; ++n) {
        fact *= n;
        sum += (n % 2 ? -1.0 : 1.0) / (n * fact);
      }
      return sum;
    }());
    const BranchFormulaResult b = euler_branch_formula(1);
    CHECK(b.value == doctest::Approx(s).epsilon(1e-14));
    CHECK(b.branch_offset == doctest::Approx(2 * kPi * std::numbers::e));
    CHECK(code_of([] { euler_branch_formula(1e-4); }) == ErrorCode::InsufficientTerms);
  }

  TEST_CASE("exponential integral two ways") {
    for (double y : {0.1, 0.5, 1.0, 3.0}) {
      CHECK(exponential_integral_series(y) == doctest::Approx(exponential_integral_quadrature(y).value).epsilon(1e-10));
    }
    CHECK(exponential_integral_series(1) == doctest::Approx(0.219383934395520).epsilon(1e-12));
  }

  TEST_CASE("derivatives at the origin, loose by nature") {
    for (unsigned n = 0; n <= 3; ++n) {
      const double expect = (n % 2 ? -1.0 : 1.0) * std::pow(std::tgamma(n + 1.0), 2);
      CAPTURE(n);
      CHECK(std::abs(euler_integral_derivative(n) - expect) <= 0.05 * std::abs(expect));
    }
  }

  TEST_CASE("optics identity is exact on rational input") {
    const Plate p{1, 2};
    const std::vector<Plate> one{p};
    CHECK(optics_identity_check(one, inverse_sqrt_odd(9), 9) == 0);

    std::mt19937_64 rng(52);
    for (int t = 0; t < 10; ++t) {
      std::vector<Plate> plates;
      for (int k = 0; k < 4; ++k) {
        Rational n = oracle::random_rational(rng);
        if (n == 0) n = 3;
        plates.push_back({oracle::random_rational(rng), n});
      }
      for (std::size_t order : {3, 9, 15, 21}) {
        CHECK(optics_identity_check(plates, inverse_sqrt_odd(order), order) == 0);
        std::vector<Rational> z(order);
        z[1] = 1;
        CHECK(optics_identity_check(plates, TruncSeries(z), order) == 0);
      }
    }
  }

  TEST_CASE("optics preconditions") {
    const std::vector<Plate> plates{{1, 2}};
    CHECK(code_of([&] { optics_identity_check(plates, oracle::series({1, 1, 0}), 3); }) == ErrorCode::NotOdd);
    const std::vector<Plate> zero{{1, 0}};
    CHECK(code_of([&] { optics_identity_check(zero, inverse_sqrt_odd(5), 5); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([&] { optics_identity_check(plates, inverse_sqrt_odd(5), 9); }) == ErrorCode::TruncationExceeded);
  }

  TEST_CASE("odd plates approach pi^2/8") {
    const auto plates = odd_plates(100000);
    const std::vector<double> h{0, 1, 0};
    const OpticsFloatResult r = optics_identity_check(plates, h, 3);
    CHECK(r.lhs[1] == doctest::Approx(kPi * kPi / 8).epsilon(1e-5));
    CHECK(r.discrepancy < 1e-12);
  }

  TEST_CASE("tan coefficients") {
    CHECK(tan_coefficient(0) == 1);
    CHECK(tan_coefficient(1) == Rational(1, 3));
    CHECK(tan_coefficient(2) == Rational(2, 15));
    CHECK(tan_coefficient(3) == Rational(17, 315));
  }

  TEST_CASE("odd zeta sums") {
    const double refs[] = {kPi * kPi / 8, std::pow(kPi, 4) / 96, std::pow(kPi, 6) / 960};
    for (unsigned j = 0; j < 3; ++j) {
      const ZetaOddCheck z = zeta_odd_denominator_check(j, 1'000'000);
      CHECK(z.rhs == doctest::Approx(refs[j]).epsilon(1e-14));
      CHECK(z.discrepancy <= 1e-9);
      CHECK(z.discrepancy <= z.error_bar + 1e-15);
    }
    CHECK(code_of([] { zeta_odd_denominator_check(7, 1'000'000); }) == ErrorCode::DegenerateInput);
    CHECK(code_of([] { zeta_odd_denominator_check(0, 10); }) == ErrorCode::InsufficientTerms);
  }
}
