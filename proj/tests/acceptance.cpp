// Runs the nine acceptance criteria and prints one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "gradeforge/analytic.hpp"
#include "gradeforge/config.hpp"
#include "gradeforge/descriptor.hpp"
#include "gradeforge/diagonal.hpp"
#include "gradeforge/holonomic.hpp"
#include "gradeforge/modp.hpp"
#include "gradeforge/obstruction.hpp"
#include "oracles.hpp"

using namespace gradeforge;

namespace {

// Tolerances and time limits.
constexpr double kEulerAgreement = 1e-8;
constexpr double kZetaTolerance = 1e-9;
constexpr std::size_t kZetaCutoff = 1'000'000;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

UniPoly up(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

Outcome singularity_law() {
  Outcome o;
  const auto h = rational_hadamard(ExpPolyRational::pole_term(1, 2, 1), ExpPolyRational::pole_term(1, 3, 1));
  o.require(h == ExpPolyRational::pole_term(1, 6, 1), "1/(2-z) * 1/(3-z) != 1/(6-z)");
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> count(1, 3);
  for (int t = 0; t < 50; ++t) {
    ExpPolyRational f, g;
    for (int i = count(rng); i > 0; --i) {
      Rational p = oracle::random_rational(rng);
      f = f + ExpPolyRational::pole_term(oracle::random_rational(rng) + 20, p == 0 ? Rational(1) : p, 1);
    }
    for (int i = count(rng); i > 0; --i) {
      Rational p = oracle::random_rational(rng);
      g = g + ExpPolyRational::pole_term(oracle::random_rational(rng) + 20, p == 0 ? Rational(2) : p, 1);
    }
    const auto prod = rational_hadamard(f, g);
    for (const auto& p : prod.poles()) {
      bool found = false;
      for (const auto& a : f.poles())
        for (const auto& b : g.poles()) found = found || a * b == p;
      o.require(found, "pole " + to_string(p) + " is not a product of input poles");
    }
    o.require(prod.expand(30) == hadamard_mul(f.expand(30), g.expand(30)), "coefficient mismatch");
  }
  return o;
}

Outcome euler_value() {
  Outcome o;
  const double q = euler_integral(1).value, b = euler_branch_formula(1).value;
  char qs[16], bs[16];
  std::snprintf(qs, sizeof qs, "%.4f", q);
  std::snprintf(bs, sizeof bs, "%.4f", b);
  o.require(std::string(qs) == "0.5963", std::string("quadrature shows ") + qs);
  o.require(std::string(bs) == "0.5963", std::string("branch formula shows ") + bs);
  o.require(std::abs(q - b) < kEulerAgreement, "quadrature and branch formula differ by " + std::to_string(q - b));
  return o;
}

Outcome euler_counterexample() {
  Outcome o;
  const TruncSeries p =
      hadamard_mul(expand(builtin_descriptor("euler"), 64), expand(builtin_descriptor("exp"), 64));
  // 1/(1 + z) = -1/(-1 - z).
  o.require(p == ExpPolyRational::pole_term(-1, -1, 1).expand(64), "product is not 1/(1+z)");
  return o;
}

Outcome optics() {
  Outcome o;
  std::vector<Rational> tan(21);
  for (unsigned j = 0; 2 * j + 1 < 21; ++j) tan[2 * j + 1] = tan_coefficient(j);
  std::vector<Plate> plates;
  for (long k = 0; k < 6; ++k) plates.push_back({make_rational(1, 2 * k + 1), Rational(2 * k + 1)});
  plates.push_back({make_rational(-3, 7), make_rational(5, 2)});
  for (std::size_t order = 1; order <= 21; ++order) {
    const TruncSeries h = TruncSeries(tan).truncated(order);
    o.require(optics_identity_check(plates, h, order) == 0, "nonzero discrepancy at order " + std::to_string(order));
  }
  const double pi = std::numbers::pi;
  const double refs[] = {pi * pi / 8, std::pow(pi, 4) / 96, std::pow(pi, 6) / 960};
  for (unsigned j = 0; j < 3; ++j) {
    const ZetaOddCheck z = zeta_odd_denominator_check(j, kZetaCutoff);
    o.require(std::abs(z.lhs - refs[j]) <= kZetaTolerance, "j=" + std::to_string(j) + " off by " +
                                                               std::to_string(std::abs(z.lhs - refs[j])));
    o.require(z.discrepancy <= kZetaTolerance, "j=" + std::to_string(j) + " discrepancy too large");
  }
  return o;
}

Outcome dfinite_closure() {
  Outcome o;
  const PRecurrence cb = PRecurrence::make({up({-2, -4}), up({1, 1})}, 0, {Rational(1)});
  const PRecurrence sq = hadamard_recurrence(cb, cb);
  const auto c = oracle::central_binomials(200);
  std::vector<Integer> squares;
  for (const auto& x : c) squares.push_back(x * x);
  o.require(sq.unroll(200) == oracle::series(squares), "unroll differs from the squared Pascal oracle");
  return o;
}

Outcome diagonal_theorem() {
  Outcome o;
  const Annihilator a(bivariate({{0, 2, 1}, {0, 1, -1}, {1, 0, 1}}), 0);
  const RatFun r = furstenberg_bivariate(a);
  const auto cat = oracle::catalan_convolution(9);
  std::vector<Integer> shifted{0};
  shifted.insert(shifted.end(), cat.begin(), cat.end());
  o.require(diagonal_extract(r, 10) == oracle::series(shifted), "diagonal is not the Catalan series");
  const DiagonalWitness w = make_witness(a, 10);
  const std::vector<DiagonalWitness> ws{w, w};
  const DiagonalWitness sq = product_lift(ws, 8);
  const TruncSeries f = oracle::series(shifted).truncated(8);
  o.require(witness_series(sq, 8) == hadamard_mul(f, f), "product lift is not the Hadamard square");
  o.require(sq.verified_order == 8, "verified order " + std::to_string(sq.verified_order));
  return o;
}

Outcome obstruction_corpus() {
  Outcome o;
  const Config cfg;
  for (const char* name : {"exp", "log1p", "euler", "thue-morse-signs"}) {
    const auto v = obstruction_report(expand(builtin_descriptor(name), cfg.terms), cfg.obstruction()).verdict;
    o.require(v == Verdict::infinite_grade_evidence, std::string(name) + " gave " + to_string(v));
  }
  for (const char* name : {"geometric", "central-binomial"}) {
    const auto v = obstruction_report(expand(builtin_descriptor(name), cfg.terms), cfg.obstruction()).verdict;
    o.require(v == Verdict::no_obstruction_found, std::string(name) + " gave " + to_string(v));
  }
  const TruncSeries cb = expand(builtin_descriptor("central-binomial"), cfg.terms);
  const auto v = obstruction_report(hadamard_mul(cb, cb), cfg.obstruction()).verdict;
  o.require(v == Verdict::no_obstruction_found, "Hadamard square gave " + to_string(v));
  return o;
}

Outcome automaticity() {
  Outcome o;
  const Config cfg;
  for (const char* name : {"central-binomial", "catalan"}) {
    const Annihilator a = *builtin_descriptor(name).annihilator;
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
      KernelBudgets b = cfg.kernel_budgets(p);
      const std::string tag = std::string(name) + " mod " + std::to_string(p) + "^" + std::to_string(r);
      b.fingerprint_length = 64;
      const ChristolReport short_fp = christol_report(a, p, r, p, b);
      b.fingerprint_length = 128;
      b.max_terms *= 2;
      const ChristolReport long_fp = christol_report(a, p, r, p, b);
      o.require(short_fp.exact_prefix_agrees, tag + ": exact prefix disagrees");
      o.require(short_fp.automaton.status == KernelStatus::closed, tag + ": " + to_string(short_fp.automaton.status));
      o.require(long_fp.automaton.status == KernelStatus::closed, tag + " (L=128): not closed");
      o.require(short_fp.automaton.states.size() == long_fp.automaton.states.size(), tag + ": state count moved");
    }
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(99);
  const TruncSeries g = TruncSeries::geometric(20);
  for (int t = 0; t < 100; ++t) {
    const TruncSeries a = oracle::random_series(rng, 20), b = oracle::random_series(rng, 20),
                      c = oracle::random_series(rng, 20);
    o.require(hadamard_mul(a, b) == hadamard_mul(b, a), "not commutative");
    o.require(hadamard_mul(hadamard_mul(a, b), c) == hadamard_mul(a, hadamard_mul(b, c)), "not associative");
    o.require(hadamard_mul(a, g) == a && hadamard_mul(g, a) == a, "geometric is not the identity");
    std::vector<Rational> e(20), d(20);
    for (std::size_t i = 0; i < 20; ++i) (i % 2 ? d : e)[i] = a[i];
    o.require(hadamard_mul(TruncSeries(e), TruncSeries(d)).is_zero(), "even * odd != 0");
  }

  std::uniform_int_distribution<int> order(1, 3), degree(0, 2);
  std::uniform_int_distribution<long> coef(-4, 4);
  auto random_rec = [&] {
    for (;;) {
      std::vector<UniPoly> cs;
      const int r = order(rng);
      for (int i = 0; i <= r; ++i) {
        std::vector<Rational> v;
        for (int k = degree(rng); k >= 0; --k) v.emplace_back(coef(rng));
        cs.emplace_back(std::move(v));
      }
      if (cs.back().is_zero() || cs.front().is_zero()) continue;
      std::vector<Rational> init;
      for (std::size_t i = PRecurrence::required_terms(cs, 0); i > 0; --i) init.push_back(oracle::random_rational(rng));
      if (init.front() == 0) init.front() = 1;
      return PRecurrence::make(std::move(cs), 0, std::move(init));
    }
  };
  for (int t = 0; t < 20; ++t) {
    const PRecurrence a = random_rec(), b = random_rec();
    const PRecurrence c = hadamard_recurrence(a, b);
    o.require(c.order() <= a.order() * b.order(), "order bound exceeded");
    o.require(c.unroll(200) == hadamard_mul(a.unroll(200), b.unroll(200)), "closure unsound: " + a.to_string() +
                                                                               " with " + b.to_string());
  }

  // Every transition's target carries the child subsequence's fingerprint.
  const Annihilator cat = *builtin_descriptor("catalan").annihilator;
  for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 2}, {3, 2}, {5, 1}}) {
    KernelBudgets bud;
    bud.max_depth = default_kernel_depth(p);
    std::size_t len = bud.fingerprint_length;
    for (unsigned i = 0; i < bud.max_depth; ++i) len *= p;
    const ResidueSequence s = expand_branch_mod(cat, p, r, len);
    const KernelAutomaton a = kernel_closure(s, p, bud);
    for (const auto& st : a.states) {
      std::uint64_t qk = 1;
      for (unsigned i = 0; i < st.k; ++i) qk *= p;
      for (std::uint64_t d = 0; d < p; ++d) {
        if (st.transitions[d] == KernelAutomaton::kUnresolved) continue;
        const auto& target = a.states[st.transitions[d]];
        for (std::size_t n = 0; n < a.fingerprint_length; ++n) {
          o.require(target.fingerprint[n] == s.terms[p * qk * n + st.j + d * qk], "unsound merge");
        }
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_ms;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "rational singularity law", 1000, singularity_law},
      {2, "Euler value 0.5963", 1000, euler_value},
      {3, "Euler series times exp is 1/(1+z)", 1000, euler_counterexample},
      {4, "optics identities and odd zeta sums", 10000, optics},
      {5, "D-finite closure of the central binomial square", 5000, dfinite_closure},
      {6, "diagonal round trip and product lift", 30000, diagonal_theorem},
      {7, "obstruction corpus verdicts", 5000, obstruction_corpus},
      {8, "kernel closure mod p and p^2", 60000, automaticity},
      {9, "property suites", 60000, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && ms > c.limit_ms) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<long>(c.limit_ms)) + " ms limit";
    }
    std::printf("criterion %d: %s  %s (%.0f ms)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, ms,
                o.ok ? "" : ": ", o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
