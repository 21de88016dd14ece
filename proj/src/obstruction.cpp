#include "gradeforge/obstruction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "gradeforge/error.hpp"
#include "gradeforge/number_theory.hpp"

namespace gradeforge {

std::string to_string(RadiusClass c) {
  switch (c) {
    case RadiusClass::positive_evidence: return "positive-evidence";
    case RadiusClass::zero_evidence: return "zero-evidence";
    case RadiusClass::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Periodicity::Kind k) {
  switch (k) {
    case Periodicity::Kind::eventually_periodic: return "eventually-periodic";
    case Periodicity::Kind::aperiodic: return "aperiodic-up-to";
    case Periodicity::Kind::not_a_sign_sequence: return "not-a-sign-sequence";
  }
  return "not-a-sign-sequence";
}

std::string to_string(Verdict v) {
  return v == Verdict::infinite_grade_evidence ? "infinite-grade-evidence" : "no-obstruction-found";
}

PrimeSupport prime_support_scan(const TruncSeries& f, std::size_t window) {
  const std::size_t n = f.order();
  if (n < 2 * window) {
    throw Error(ErrorCode::InsufficientTerms,
                "prime support scan needs " + std::to_string(2 * window) + " terms, got " + std::to_string(n));
  }
  PrimeSupport out;
  out.truncation = n;
  std::map<std::uint64_t, std::size_t> first;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& den = f[i].get_den();
    if (den == 1) continue;
    Factorization fac = trial_factor(den);
    if (!fac.complete()) out.fully_factored = false;
    for (const auto& pp : fac.factors) first.emplace(pp.prime, i);
  }
  for (const auto& [p, i] : first) {
    out.primes.push_back({p, i});
    if (i + window >= n) out.still_growing = true;
  }
  return out;
}

namespace {

// Solves the 3x3 system by Gaussian elimination with partial pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 4>, 3> m) {
  for (int c = 0; c < 3; ++c) {
    int p = c;
    for (int r = c + 1; r < 3; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    }
    std::swap(m[p], m[c]);
    for (int r = c + 1; r < 3; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::array<double, 3> x{};
  for (int r = 2; r >= 0; --r) {
    double s = m[r][3];
    for (int k = r + 1; k < 3; ++k) s -= m[r][k] * x[k];
    x[r] = s / m[r][r];
  }
  return x;
}

}  // namespace

RadiusEstimate radius_estimate(const TruncSeries& f, const RadiusThresholds& thresholds) {
  const std::size_t n = f.order();
  if (n < 16) throw Error(ErrorCode::InsufficientTerms, "radius estimate needs at least 16 terms");
  std::size_t zeros = 0;
  for (const auto& c : f.coeffs()) zeros += (c == 0);
  if (2 * zeros > n) {
    throw Error(ErrorCode::TooSparse, std::to_string(zeros) + " of " + std::to_string(n) + " coefficients are zero");
  }

  // Normal equations on the columns n·log n, n, 1.
  std::array<std::array<double, 4>, 3> normal{};
  std::size_t used = 0;
  for (std::size_t i = n / 2; i < n; ++i) {
    if (f[i] == 0) continue;
    const double x = static_cast<double>(i);
    const std::array<double, 3> row{x * std::log(x), x, 1.0};
    const double y = log_abs(f[i]);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) normal[r][c] += row[r] * row[c];
      normal[r][3] += row[r] * y;
    }
    ++used;
  }
  if (used < 3) throw Error(ErrorCode::TooSparse, "fewer than three nonzero coefficients in the fit range");

  const auto fit = solve3(normal);
  RadiusEstimate out;
  out.beta = fit[0];
  out.linear = fit[1];
  out.truncation = n;

  // |a_n|^(1/n) over the last quarter must not run away from the second.
  auto root_max = [&](std::size_t lo, std::size_t hi) {
    double m = 0;
    for (std::size_t i = std::max<std::size_t>(lo, 1); i < hi; ++i) {
      if (f[i] != 0) m = std::max(m, std::exp(log_abs(f[i]) / static_cast<double>(i)));
    }
    return m;
  };
  const bool bounded = root_max(3 * n / 4, n) <= 1.5 * root_max(n / 4, n / 2);

  if (out.beta >= thresholds.zero_beta) {
    out.verdict = RadiusClass::zero_evidence;
  } else if (out.beta <= thresholds.positive_beta && bounded) {
    out.verdict = RadiusClass::positive_evidence;
  }
  return out;
}

Periodicity eventual_period(std::span<const int> signs, std::size_t max_period) {
  const std::size_t len = signs.size();
  if (len < 3 * max_period) {
    throw Error(ErrorCode::InsufficientTerms,
                "periodicity scan needs " + std::to_string(3 * max_period) + " terms, got " + std::to_string(len));
  }
  Periodicity out;
  if (!std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1 || s == -1; })) return out;

  for (std::size_t p = 1; p <= max_period; ++p) {
    const std::size_t need = std::max(3 * p, (len + 1) / 2);
    if (need > len) break;
    // Walk back from the end while the period holds; the first break bounds
    // the preperiod from below.
    std::size_t start = len - p;
    while (start > 0 && signs[start - 1] == signs[start - 1 + p]) --start;
    if (len - start >= need) {
      out.kind = Periodicity::Kind::eventually_periodic;
      out.preperiod = start;
      out.period = p;
      return out;
    }
  }
  out.kind = Periodicity::Kind::aperiodic;
  out.bound = max_period;
  return out;
}

std::optional<std::vector<int>> sign_sequence(const TruncSeries& f) {
  std::vector<int> out;
  out.reserve(f.order());
  for (const auto& c : f.coeffs()) {
    if (c == 1) {
      out.push_back(1);
    } else if (c == -1) {
      out.push_back(-1);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

ObstructionReport obstruction_report(const TruncSeries& f, const ObstructionConfig& config) {
  ObstructionReport out;
  out.truncation = f.order();
  out.prime_support = prime_support_scan(f, config.window);
  try {
    out.radius = radius_estimate(f, config.thresholds);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooSparse) throw;
  }
  if (auto signs = sign_sequence(f)) {
    std::size_t max_period = config.max_period;
    if (max_period == 0) max_period = std::min<std::size_t>(60, f.order() / 3);
    out.periodicity = eventual_period(*signs, max_period);
  }
  const bool fired = out.prime_support.still_growing ||
                     (out.radius && out.radius->verdict == RadiusClass::zero_evidence) ||
                     out.periodicity.kind == Periodicity::Kind::aperiodic;
  out.verdict = fired ? Verdict::infinite_grade_evidence : Verdict::no_obstruction_found;
  return out;
}

}  // namespace gradeforge
