#include <doctest.h>

#include <random>

#include "gradeforge/error.hpp"
#include "gradeforge/series.hpp"
#include "oracles.hpp"

using namespace gradeforge;

namespace {

TruncSeries rs(std::initializer_list<Rational> v) { return TruncSeries(std::vector<Rational>(v)); }

TruncSeries exp_series(std::size_t n) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(1 / Rational(factorial(i)));
  return TruncSeries(std::move(c));
}

TruncSeries sin_series(std::size_t n) {
  std::vector<Rational> c(n);
  for (std::size_t i = 1; i < n; i += 2) c[i] = Rational((i / 2) % 2 ? -1 : 1) / Rational(factorial(i));
  return TruncSeries(std::move(c));
}

TruncSeries cos_series(std::size_t n) {
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; i += 2) c[i] = Rational((i / 2) % 2 ? -1 : 1) / Rational(factorial(i));
  return TruncSeries(std::move(c));
}

}  // namespace

TEST_SUITE("series_core") {
  TEST_CASE("hadamard_mul examples") {
    CHECK(hadamard_mul(oracle::series({1, 1, 1, 1}), oracle::series({1, 2, 6, 20})) ==
          oracle::series({1, 2, 6, 20}));
    const TruncSeries cb = oracle::series(oracle::central_binomials(5));
    CHECK(hadamard_mul(cb, cb) == oracle::series({1, 4, 36, 400, 4900}));
    CHECK(hadamard_mul(oracle::series({1, -1, 2, -6, 24}), exp_series(5)) == oracle::series({1, -1, 1, -1, 1}));
  }

  TEST_CASE("truncation is the smaller order, never padded") {
    const TruncSeries p = hadamard_mul(oracle::series({1, 2, 3}), oracle::series({1, 1, 1, 1, 1}));
    CHECK(p.order() == 3);
    CHECK(cauchy_mul(oracle::series({1, 2}), oracle::series({1, 1, 1})).order() == 2);
    CHECK_THROWS_AS(p[3], Error);
    CHECK_THROWS_AS(p.truncated(4), Error);
  }

  TEST_CASE("cauchy_mul examples") {
    CHECK(cauchy_mul(oracle::series({1, 1, 0}), oracle::series({1, -1, 0})) == oracle::series({1, 0, -1}));
    CHECK(cauchy_mul(oracle::series({1, 1, 1, 1, 1}), oracle::series({1, 1, 1, 1, 1})) ==
          oracle::series({1, 2, 3, 4, 5}));
    const TruncSeries f = oracle::series({0, 1, 1, 2, 5, 14});
    CHECK(cauchy_mul(f, f) == f - oracle::series({0, 1, 0, 0, 0, 0}));
  }

  TEST_CASE("reciprocal examples") {
    CHECK(reciprocal(oracle::series({1, -1, 0, 0, 0})) == oracle::series({1, 1, 1, 1, 1}));
    CHECK(reciprocal(oracle::series({1, 1, 0, 0})) == oracle::series({1, -1, 1, -1}));
    const TruncSeries tan = cauchy_mul(sin_series(8), reciprocal(cos_series(8)));
    CHECK(tan == rs({0, 1, 0, Rational(1, 3), 0, Rational(2, 15), 0, Rational(17, 315)}));
    CHECK_THROWS_AS(reciprocal(oracle::series({0, 1})), Error);
  }

  TEST_CASE("compose_scale examples") {
    CHECK(compose_scale(oracle::series({1, 1, 1}), 2) == oracle::series({1, 2, 4}));
    const TruncSeries a = oracle::series({3, -1, 4, 1});
    CHECK(compose_scale(a, 1) == a);
    CHECK(compose_scale(rs({0, 1, 0, Rational(1, 2)}), Rational(1, 3)) == rs({0, Rational(1, 3), 0, Rational(1, 54)}));
  }

  TEST_CASE("hadamard_mul is commutative, associative and bilinear") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
      const TruncSeries a = oracle::random_series(rng, 20), b = oracle::random_series(rng, 20),
                        c = oracle::random_series(rng, 20);
      const Rational k = oracle::random_rational(rng);
      REQUIRE(hadamard_mul(a, b) == hadamard_mul(b, a));
      REQUIRE(hadamard_mul(hadamard_mul(a, b), c) == hadamard_mul(a, hadamard_mul(b, c)));
      REQUIRE(hadamard_mul(a + b * k, c) == hadamard_mul(a, c) + hadamard_mul(b, c) * k);
    }
  }

  TEST_CASE("the geometric series is a two-sided identity") {
    std::mt19937_64 rng(12);
    const TruncSeries g = TruncSeries::geometric(20);
    for (int t = 0; t < 100; ++t) {
      const TruncSeries a = oracle::random_series(rng, 20);
      REQUIRE(hadamard_mul(a, g) == a);
      REQUIRE(hadamard_mul(g, a) == a);
    }
  }

  TEST_CASE("even times odd is zero") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
      std::vector<Rational> e(20), o(20);
      for (std::size_t i = 0; i < 20; ++i) (i % 2 ? o : e)[i] = oracle::random_rational(rng);
      REQUIRE(hadamard_mul(TruncSeries(e), TruncSeries(o)).is_zero());
    }
  }

  TEST_CASE("shift_up grows the order") {
    const TruncSeries s = shift_up(oracle::series({1, 2}), 2);
    CHECK(s == oracle::series({0, 0, 1, 2}));
  }
}
