#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "gradeforge/analytic.hpp"
#include "gradeforge/diagonal.hpp"
#include "gradeforge/modp.hpp"
#include "gradeforge/obstruction.hpp"

namespace gradeforge {

/// Every default the command layer uses, in one place.
struct Config {
  std::size_t terms = 32;

  std::size_t window = 10;
  double zero_beta = 0.5;
  double positive_beta = 0.1;

  std::size_t max_states = 4096;
  unsigned depth_base2 = 8;
  unsigned depth_base3 = 7;
  unsigned depth_other = 4;
  std::size_t fingerprint_length = 64;
  std::size_t max_modular_terms = std::size_t{1} << 20;

  unsigned quadrature_nodes = 64;
  double quadrature_tolerance = 1e-10;
  std::size_t branch_terms = 80;

  std::size_t diagonal_order = 10;
  std::size_t diagonal_budget = kDiagonalBudget;

  std::size_t optics_order = 21;
  std::size_t zeta_cutoff = 1'000'000;
  std::size_t optics_plates = 100'000;

  ObstructionConfig obstruction() const;
  KernelBudgets kernel_budgets(std::uint64_t base) const;
  QuadratureConfig quadrature() const;
};

nlohmann::json to_json(const Config& c);

/// Overrides the fields present in `j`; unknown keys and wrong types throw
/// SchemaViolation.
Config config_from_json(const nlohmann::json& j, Config base = {});

/// Defaults, overridden by the JSON file named in GRADEFORGE_CONFIG when set.
Config load_config();

}  // namespace gradeforge
