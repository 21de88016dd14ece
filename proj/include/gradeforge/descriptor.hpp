#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradeforge/algebraic.hpp"
#include "gradeforge/analytic.hpp"
#include "gradeforge/diagonal.hpp"
#include "gradeforge/holonomic.hpp"
#include "gradeforge/modp.hpp"
#include "gradeforge/obstruction.hpp"
#include "gradeforge/series.hpp"

namespace gradeforge {

enum class DescriptorKind { coeffs, algebraic, holonomic, rational_exppoly, builtin };

std::string to_string(DescriptorKind k);

/**
 * A series as named on the command line. Builtins fill in every
 * representation they have (central-binomial carries both its recurrence and
 * its annihilator), so commands pick whichever one they need.
 */
struct SeriesDescriptor {
  DescriptorKind kind = DescriptorKind::coeffs;
  std::string name;
  std::optional<TruncSeries> coeffs;
  std::optional<Annihilator> annihilator;
  std::optional<PRecurrence> recurrence;
  std::optional<ExpPolyRational> exppoly;
  /// Coefficient generator for builtins with no finite description here.
  std::function<Rational(std::size_t)> generator;
};

/// Names accepted by builtin_descriptor, in a fixed order.
const std::vector<std::string>& builtin_names();

/// Throws SchemaViolation for an unknown name.
SeriesDescriptor builtin_descriptor(const std::string& name);

/// Validates and converts a JSON descriptor; errors name the offending field.
SeriesDescriptor parse_descriptor(const nlohmann::json& j);

/// A builtin name, inline JSON (leading '{') or a path to a JSON file.
SeriesDescriptor load_descriptor(const std::string& arg);

/// First `terms` coefficients. A coeffs descriptor that is too short throws
/// TruncationExceeded.
TruncSeries expand(const SeriesDescriptor& d, std::size_t terms);

nlohmann::json series_to_json(const TruncSeries& s);
nlohmann::json recurrence_to_json(const PRecurrence& r);
nlohmann::json poly_to_json(const Poly& p);
nlohmann::json ratfun_to_json(const RatFun& r);
nlohmann::json witness_to_json(const DiagonalWitness& w);
nlohmann::json obstruction_to_json(const ObstructionReport& r);
nlohmann::json automaton_to_json(const KernelAutomaton& a);

/// Parses a rational from its text form; throws SchemaViolation naming `field`.
Rational rational_field(const nlohmann::json& j, const std::string& field);

}  // namespace gradeforge
