#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradeforge/series.hpp"

namespace gradeforge {

// Every scan here reports evidence read off a finite prefix. None of them can
// prove anything about the full series, so each result carries the number of
// coefficients it looked at.

struct PrimeOccurrence {
  std::uint64_t prime;
  /// Index of the first coefficient whose denominator the prime divides.
  std::size_t first_index;
};

struct PrimeSupport {
  /// Sorted by prime.
  std::vector<PrimeOccurrence> primes;
  /// Some prime first shows up among the last `window` coefficients.
  bool still_growing = false;
  /// False when some denominator kept a cofactor above the trial-division bound.
  bool fully_factored = true;
  std::size_t truncation = 0;
};

/// Factors every denominator of f. Throws InsufficientTerms unless
/// order(f) >= 2·window.
PrimeSupport prime_support_scan(const TruncSeries& f, std::size_t window);

enum class RadiusClass { positive_evidence, zero_evidence, inconclusive };

std::string to_string(RadiusClass c);

struct RadiusThresholds {
  /// beta at or above this reads as factorial growth.
  double zero_beta = 0.5;
  /// beta at or below this, with bounded |a_n|^(1/n), reads as exponential growth.
  double positive_beta = 0.1;
};

struct RadiusEstimate {
  /// Coefficient of n·log n in the fit of log|a_n|.
  double beta = 0;
  /// Coefficient of n.
  double linear = 0;
  RadiusClass verdict = RadiusClass::inconclusive;
  std::size_t truncation = 0;
};

/**
 * Least-squares fit of log|a_n| ≈ beta·n·log n + c·n + b over the nonzero
 * coefficients in the last half of f.
 *
 * Throws InsufficientTerms below 16 coefficients and TooSparse when more
 * than half of them are zero.
 */
RadiusEstimate radius_estimate(const TruncSeries& f, const RadiusThresholds& thresholds = {});

struct Periodicity {
  enum class Kind { eventually_periodic, aperiodic, not_a_sign_sequence };
  Kind kind = Kind::not_a_sign_sequence;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  /// For aperiodic: no period up to this bound fits.
  std::size_t bound = 0;
};

std::string to_string(Periodicity::Kind k);

/**
 * Smallest period p <= max_period, then smallest preperiod, such that the
 * data repeats with period p from the preperiod on. The repeating stretch
 * must be at least max(3p, len/2) long, so a short tail never counts as
 * periodic. Entries other than +1/-1 give not_a_sign_sequence.
 *
 * Throws InsufficientTerms when len < 3·max_period.
 */
Periodicity eventual_period(std::span<const int> signs, std::size_t max_period);

/// +1/-1 entries of f, or nullopt when some coefficient is not a sign.
std::optional<std::vector<int>> sign_sequence(const TruncSeries& f);

struct ObstructionConfig {
  std::size_t window = 10;
  RadiusThresholds thresholds;
  /// 0 picks order(f)/3, capped at 60.
  std::size_t max_period = 0;
};

enum class Verdict { infinite_grade_evidence, no_obstruction_found };

std::string to_string(Verdict v);

struct ObstructionReport {
  PrimeSupport prime_support;
  /// nullopt when the fit was impossible (too sparse); counts as inconclusive.
  std::optional<RadiusEstimate> radius;
  Periodicity periodicity;
  Verdict verdict = Verdict::no_obstruction_found;
  std::size_t truncation = 0;
};

/// Runs the three scans; the verdict is evidence iff one of them fired.
ObstructionReport obstruction_report(const TruncSeries& f, const ObstructionConfig& config = {});

}  // namespace gradeforge
