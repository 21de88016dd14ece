#include "gradeforge/config.hpp"

#include <cstdlib>
#include <fstream>

#include "gradeforge/error.hpp"

namespace gradeforge {

using nlohmann::json;

ObstructionConfig Config::obstruction() const {
  ObstructionConfig o;
  o.window = window;
  o.thresholds.zero_beta = zero_beta;
  o.thresholds.positive_beta = positive_beta;
  return o;
}

KernelBudgets Config::kernel_budgets(std::uint64_t base) const {
  KernelBudgets b;
  b.max_states = max_states;
  b.max_depth = base == 2 ? depth_base2 : base == 3 ? depth_base3 : depth_other;
  b.fingerprint_length = fingerprint_length;
  b.max_terms = max_modular_terms;
  return b;
}

QuadratureConfig Config::quadrature() const { return {quadrature_nodes, quadrature_tolerance}; }

namespace {

// One table drives both directions so the printed config and the accepted
// keys cannot drift apart.
template <typename F>
void for_each_field(Config& c, F&& f) {
  f("terms", c.terms);
  f("window", c.window);
  f("zero_beta", c.zero_beta);
  f("positive_beta", c.positive_beta);
  f("max_states", c.max_states);
  f("depth_base2", c.depth_base2);
  f("depth_base3", c.depth_base3);
  f("depth_other", c.depth_other);
  f("fingerprint_length", c.fingerprint_length);
  f("max_modular_terms", c.max_modular_terms);
  f("quadrature_nodes", c.quadrature_nodes);
  f("quadrature_tolerance", c.quadrature_tolerance);
  f("branch_terms", c.branch_terms);
  f("diagonal_order", c.diagonal_order);
  f("diagonal_budget", c.diagonal_budget);
  f("optics_order", c.optics_order);
  f("zeta_cutoff", c.zeta_cutoff);
  f("optics_plates", c.optics_plates);
}

}  // namespace

json to_json(const Config& c) {
  json j = json::object();
  Config copy = c;
  for_each_field(copy, [&](const char* key, auto& value) { j[key] = value; });
  return j;
}

Config config_from_json(const json& j, Config base) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaViolation, "config: expected a JSON object");
  std::size_t matched = 0;
  for_each_field(base, [&](const char* key, auto& value) {
    using T = std::decay_t<decltype(value)>;
    auto it = j.find(key);
    if (it == j.end()) return;
    ++matched;
    if constexpr (std::is_floating_point_v<T>) {
      if (!it->is_number()) throw Error(ErrorCode::SchemaViolation, std::string("config.") + key + ": expected a number");
    } else {
      if (!it->is_number_unsigned()) {
        throw Error(ErrorCode::SchemaViolation, std::string("config.") + key + ": expected a nonnegative integer");
      }
    }
    value = it->template get<T>();
  });
  if (matched != j.size()) {
    Config probe;
    json known = to_json(probe);
    for (const auto& [key, value] : j.items()) {
      if (!known.contains(key)) throw Error(ErrorCode::SchemaViolation, "config: unknown key '" + key + "'");
    }
  }
  return base;
}

Config load_config() {
  const char* path = std::getenv("GRADEFORGE_CONFIG");
  if (path == nullptr || *path == '\0') return {};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaViolation, std::string("config: cannot read ") + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
  }
  return config_from_json(j);
}

}  // namespace gradeforge
