#include <doctest.h>

#include <algorithm>
#include <set>

#include "gradeforge/descriptor.hpp"
#include "gradeforge/error.hpp"
#include "gradeforge/obstruction.hpp"
#include "oracles.hpp"

using namespace gradeforge;

namespace {

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> support(const PrimeSupport& s) {
  std::vector<std::uint64_t> out;
  for (const auto& p : s.primes) out.push_back(p.prime);
  std::sort(out.begin(), out.end());
  return out;
}

TruncSeries terms_of(const std::string& builtin, std::size_t n) { return expand(builtin_descriptor(builtin), n); }

}  // namespace

TEST_SUITE("obstruction") {
  TEST_CASE("prime support examples") {
    const PrimeSupport e = prime_support_scan(terms_of("exp", 40), 10);
    CHECK(support(e) == primes_upto(37));
    CHECK(e.still_growing);

    const PrimeSupport cb = prime_support_scan(terms_of("central-binomial", 40), 10);
    CHECK(cb.primes.empty());
    CHECK_FALSE(cb.still_growing);

    const PrimeSupport l = prime_support_scan(terms_of("log1p", 40), 10);
    CHECK(support(l) == primes_upto(39));
    CHECK(l.still_growing);
    CHECK(l.truncation == 40);
  }

  TEST_CASE("first occurrences") {
    const PrimeSupport e = prime_support_scan(terms_of("exp", 40), 10);
    for (const auto& p : e.primes) CHECK(p.first_index == p.prime);
  }

  TEST_CASE("prime support is monotone in the number of terms") {
    for (const char* name : {"exp", "log1p", "euler", "catalan"}) {
      const TruncSeries f = terms_of(name, 60);
      auto prev = support(prime_support_scan(f.truncated(20), 10));
      for (std::size_t n : {30, 45, 60}) {
        auto cur = support(prime_support_scan(f.truncated(n), 10));
        REQUIRE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        prev = cur;
      }
    }
  }

  TEST_CASE("radius examples") {
    const RadiusEstimate e = radius_estimate(terms_of("euler", 60));
    CHECK(e.beta == doctest::Approx(1).epsilon(0.05));
    CHECK(e.verdict == RadiusClass::zero_evidence);

    const RadiusEstimate g = radius_estimate(TruncSeries::geometric(60));
    CHECK(std::abs(g.beta) < 0.05);
    CHECK(g.verdict == RadiusClass::positive_evidence);

    const RadiusEstimate cb = radius_estimate(terms_of("central-binomial", 60));
    CHECK(std::abs(cb.beta) < 0.1);
    CHECK(cb.verdict == RadiusClass::positive_evidence);

    CHECK_THROWS_AS(radius_estimate(TruncSeries::geometric(8)), Error);
    std::vector<Rational> sparse(40);
    sparse[0] = 1;
    CHECK_THROWS_AS(radius_estimate(TruncSeries(sparse)), Error);
  }

  TEST_CASE("geometric scaling keeps the beta class") {
    for (const char* name : {"euler", "central-binomial", "exp", "catalan"}) {
      const TruncSeries f = terms_of(name, 60);
      const RadiusClass base = radius_estimate(f).verdict;
      for (const Rational c : {Rational(3), Rational(1, 5), Rational(-2)}) {
        CAPTURE(name);
        CHECK(radius_estimate(compose_scale(f, c)).verdict == base);
      }
    }
  }

  TEST_CASE("eventual period examples") {
    std::vector<int> alt(60);
    for (std::size_t i = 0; i < 60; ++i) alt[i] = i % 2 ? -1 : 1;
    Periodicity p = eventual_period(alt, 20);
    CHECK(p.kind == Periodicity::Kind::eventually_periodic);
    CHECK(p.preperiod == 0);
    CHECK(p.period == 2);

    const std::vector<int> tm = oracle::thue_morse_signs(200);
    p = eventual_period(tm, 60);
    CHECK(p.kind == Periodicity::Kind::aperiodic);
    CHECK(p.bound == 60);

    std::vector<int> tail(60, -1);
    tail[0] = tail[1] = 1;
    p = eventual_period(tail, 20);
    CHECK(p.kind == Periodicity::Kind::eventually_periodic);
    CHECK(p.preperiod == 2);
    CHECK(p.period == 1);

    CHECK_THROWS_AS(eventual_period(tail, 30), Error);
  }

  TEST_CASE("reported periods re-verify against every term") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coin(0, 1), len(1, 7), pre(0, 15);
    for (int t = 0; t < 300; ++t) {
      std::vector<int> block(len(rng)), s(pre(rng));
      for (auto& b : block) b = coin(rng) ? 1 : -1;
      for (auto& b : s) b = coin(rng) ? 1 : -1;
      while (s.size() < 90) s.push_back(block[s.size() % block.size()]);
      const Periodicity p = eventual_period(s, 30);
      REQUIRE(p.kind == Periodicity::Kind::eventually_periodic);
      for (std::size_t i = p.preperiod; i + p.period < s.size(); ++i) REQUIRE(s[i] == s[i + p.period]);
      REQUIRE(p.period <= block.size());
    }
  }

  TEST_CASE("sign sequences") {
    CHECK(sign_sequence(terms_of("thue-morse-signs", 64)).value() == oracle::thue_morse_signs(64));
    CHECK_FALSE(sign_sequence(terms_of("catalan", 10)));
  }

  TEST_CASE("verdicts on the corpus") {
    for (const char* name : {"exp", "log1p", "euler", "thue-morse-signs"}) {
      CAPTURE(name);
      CHECK(obstruction_report(terms_of(name, 32)).verdict == Verdict::infinite_grade_evidence);
    }
    for (const char* name : {"geometric", "central-binomial", "catalan"}) {
      CAPTURE(name);
      CHECK(obstruction_report(terms_of(name, 32)).verdict == Verdict::no_obstruction_found);
    }
    const TruncSeries cb = terms_of("central-binomial", 32);
    const ObstructionReport sq = obstruction_report(hadamard_mul(cb, cb));
    CHECK(sq.verdict == Verdict::no_obstruction_found);
    CHECK(sq.truncation == 32);
  }

  TEST_CASE("report JSON layout") {
    const auto j = obstruction_to_json(obstruction_report(terms_of("exp", 32)));
    CHECK(j["verdict"] == "infinite-grade-evidence");
    CHECK(j["radius"]["class"] == "positive-evidence");
    CHECK(obstruction_to_json(obstruction_report(terms_of("euler", 32)))["radius"]["class"] == "zero-evidence");
    CHECK(j["prime_support"][0] == nlohmann::json::array({2, 2}));
    CHECK(j["truncation"] == 32);
  }
}
