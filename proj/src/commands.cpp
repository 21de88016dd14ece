#include "gradeforge/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gradeforge/error.hpp"

namespace gradeforge {

using nlohmann::json;

json cmd_expand(const SeriesDescriptor& d, std::size_t terms) { return series_to_json(expand(d, terms)); }

json cmd_hadamard(const SeriesDescriptor& a, const SeriesDescriptor& b, std::size_t terms, bool emit_recurrence) {
  const TruncSeries product = hadamard_mul(expand(a, terms), expand(b, terms));
  json out{{"product", series_to_json(product)}};
  if (emit_recurrence) {
    if (!a.recurrence || !b.recurrence) {
      throw Error(ErrorCode::DegenerateInput, "--emit-recurrence needs two descriptors with recurrences");
    }
    const PRecurrence r = hadamard_recurrence(*a.recurrence, *b.recurrence);
    out["recurrence"] = recurrence_to_json(r);
    out["recurrence_matches_product"] = r.unroll(terms) == product;
  }
  return out;
}

json cmd_obstruct(const SeriesDescriptor& d, std::size_t terms, const Config& cfg) {
  return obstruction_to_json(obstruction_report(expand(d, terms), cfg.obstruction()));
}

json cmd_modp(const SeriesDescriptor& d, std::uint64_t p, unsigned r, std::uint64_t q, const Config& cfg,
              bool with_dot) {
  if (!d.annihilator) throw Error(ErrorCode::DegenerateInput, "modp needs an algebraic descriptor");
  if (q == 0) q = p;
  const ChristolReport rep = christol_report(*d.annihilator, p, r, q, cfg.kernel_budgets(q));
  json out{{"prime", rep.prime},
           {"exponent", rep.exponent},
           {"modulus", prime_power(p, r)},
           {"terms", rep.terms},
           {"exact_prefix_agrees", rep.exact_prefix_agrees},
           {"consistent_with_christol", rep.consistent_with_christol},
           {"automaton", automaton_to_json(rep.automaton)}};
  if (with_dot) out["dot"] = rep.automaton.to_dot();
  return out;
}

json cmd_diagonal(const std::vector<SeriesDescriptor>& factors, std::size_t order, const Config& cfg) {
  if (factors.empty()) throw Error(ErrorCode::DegenerateInput, "diagonal needs at least one descriptor");
  std::vector<DiagonalWitness> witnesses;
  for (const auto& f : factors) {
    if (!f.annihilator) throw Error(ErrorCode::DegenerateInput, "diagonal needs algebraic descriptors");
    witnesses.push_back(make_witness(*f.annihilator, order));
  }
  const DiagonalWitness w = witnesses.size() == 1 ? witnesses.front() : product_lift(witnesses, order);
  const std::size_t m = 2 * w.d;
  std::size_t box = 1;
  for (std::size_t i = 0; i < m; ++i) box *= order;
  if (box > cfg.diagonal_budget) {
    throw Error(ErrorCode::BudgetExceeded, "order^" + std::to_string(m) + " exceeds the diagonal budget");
  }
  json out = witness_to_json(w);
  out["diagonal"] = series_to_json(witness_series(w, order));
  return out;
}

json cmd_euler(double z, const Config& cfg) {
  const QuadratureResult q = euler_integral(z, cfg.quadrature());
  json out{{"z", z}, {"value", q.value}, {"error_estimate", q.error_estimate}, {"method", q.method}};
  try {
    const BranchFormulaResult b = euler_branch_formula(z, cfg.branch_terms);
    out["reference"] = b.value;
    out["discrepancy"] = std::abs(b.value - q.value);
    out["branch_offset"] = b.branch_offset;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientTerms) throw;
    out["reference"] = nullptr;
    out["discrepancy"] = nullptr;
    out["branch_offset"] = 2 * std::numbers::pi * std::exp(1 / z) / z;
  }
  return out;
}

json cmd_optics(const Config& cfg) {
  const std::size_t order = cfg.optics_order;
  std::vector<Rational> tan(order);
  for (unsigned j = 0; 2 * j + 1 < order; ++j) tan[2 * j + 1] = tan_coefficient(j);
  const TruncSeries h(tan);

  std::vector<Plate> plates;
  for (long k = 0; k < 8; ++k) plates.push_back({make_rational(1, 2 * k + 1), Rational(2 * k + 1)});
  const Rational exact = optics_identity_check(plates, h, order);

  std::vector<double> hd;
  for (const auto& c : tan) hd.push_back(to_double(c));
  const auto many = odd_plates(cfg.optics_plates);
  const OpticsFloatResult fl = optics_identity_check(many, hd, order);

  json zeta = json::array();
  const double pi = std::numbers::pi;
  for (unsigned j = 0; j < 3; ++j) {
    const ZetaOddCheck z = zeta_odd_denominator_check(j, cfg.zeta_cutoff);
    zeta.push_back(json{{"j", j},
                        {"value", z.lhs},
                        {"reference", z.rhs},
                        {"discrepancy", z.discrepancy},
                        {"error_estimate", z.error_bar},
                        {"tail", z.tail}});
  }
  return json{{"order", order},
              {"exact_discrepancy", to_string(exact)},
              {"exact_plates", plates.size()},
              {"float_plates", many.size()},
              {"float_discrepancy", fl.discrepancy},
              {"float_z_coefficient", fl.lhs.size() > 1 ? fl.lhs[1] : 0.0},
              {"pi_squared_over_8", pi * pi / 8},
              {"zeta", zeta}};
}

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream s;
    s.precision(15);
    s << v.get<double>();
    return s.str();
  }
  return v.dump();
}

bool all_scalars(const json& v) {
  return std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
}

void flatten(const json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) flatten(e, path.empty() ? k : path + "." + k, rows);
  } else if (v.is_array() && all_scalars(v)) {
    std::string line;
    for (const auto& e : v) line += (line.empty() ? "" : " ") + scalar(e);
    rows.emplace_back(path, line);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, scalar(v));
  }
}

}  // namespace

std::string render_table(const json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    // Multi-line values (DOT output) go below their key.
    if (v.find('\n') != std::string::npos) {
      out += k + ":\n" + v + (v.back() == '\n' ? "" : "\n");
    } else {
      out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
    }
  }
  return out;
}

}  // namespace gradeforge
