#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradeforge/config.hpp"
#include "gradeforge/descriptor.hpp"

namespace gradeforge {

// Each command returns its report as JSON; render_table prints the same data
// for people.

nlohmann::json cmd_expand(const SeriesDescriptor& d, std::size_t terms);

/// With emit_recurrence both inputs need a recurrence, else DegenerateInput.
nlohmann::json cmd_hadamard(const SeriesDescriptor& a, const SeriesDescriptor& b, std::size_t terms,
                            bool emit_recurrence);

nlohmann::json cmd_obstruct(const SeriesDescriptor& d, std::size_t terms, const Config& cfg);

/// q = 0 means q = p. Needs an annihilator.
nlohmann::json cmd_modp(const SeriesDescriptor& d, std::uint64_t p, unsigned r, std::uint64_t q, const Config& cfg,
                        bool with_dot);

/// One descriptor gives its witness; several give their product lift.
nlohmann::json cmd_diagonal(const std::vector<SeriesDescriptor>& factors, std::size_t order, const Config& cfg);

nlohmann::json cmd_euler(double z, const Config& cfg);

nlohmann::json cmd_optics(const Config& cfg);

/// Flattens a report into aligned "path  value" lines.
std::string render_table(const nlohmann::json& report);

}  // namespace gradeforge
