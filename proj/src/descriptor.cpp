#include "gradeforge/descriptor.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gradeforge/error.hpp"

namespace gradeforge {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, field + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) schema(path + "." + key, "missing");
  return *it;
}

std::vector<Rational> rational_list(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_field(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::size_t count_field(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) schema(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

UniPoly n_poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

SeriesDescriptor parse_coeffs(const json& j) {
  SeriesDescriptor d;
  d.kind = DescriptorKind::coeffs;
  auto c = rational_list(member(j, "coeffs", "descriptor"), "descriptor.coeffs");
  if (c.empty()) schema("descriptor.coeffs", "must not be empty");
  if (j.contains("order") && count_field(j["order"], "descriptor.order") != c.size()) {
    schema("descriptor.order", "does not match the number of coefficients");
  }
  d.coeffs = TruncSeries(std::move(c));
  return d;
}

SeriesDescriptor parse_algebraic(const json& j) {
  SeriesDescriptor d;
  d.kind = DescriptorKind::algebraic;
  const json& terms = member(j, "P", "descriptor");
  if (!terms.is_array() || terms.empty()) schema("descriptor.P", "expected a nonempty array of [i, j, c] triples");
  Poly p(2);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string path = "descriptor.P[" + std::to_string(t) + "]";
    const json& e = terms[t];
    if (!e.is_array() || e.size() != 3) schema(path, "expected [z-exponent, y-exponent, coefficient]");
    const auto i = count_field(e[0], path + "[0]");
    const auto k = count_field(e[1], path + "[1]");
    p.add_term({static_cast<unsigned>(i), static_cast<unsigned>(k)}, rational_field(e[2], path + "[2]"));
  }
  const Rational y0 = j.contains("y0") ? rational_field(j["y0"], "descriptor.y0") : Rational(0);
  d.annihilator = Annihilator(std::move(p), y0);
  return d;
}

SeriesDescriptor parse_holonomic(const json& j) {
  SeriesDescriptor d;
  d.kind = DescriptorKind::holonomic;
  json coeffs = member(j, "coeffs", "descriptor");
  // Also accept the list wrapped once more.
  if (coeffs.is_array() && coeffs.size() == 1 && coeffs[0].is_array() && !coeffs[0].empty() &&
      coeffs[0][0].is_array()) {
    coeffs = json(coeffs[0]);
  }
  if (!coeffs.is_array() || coeffs.size() < 2) schema("descriptor.coeffs", "expected at least two polynomials");
  std::vector<UniPoly> polys;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    polys.emplace_back(rational_list(coeffs[i], "descriptor.coeffs[" + std::to_string(i) + "]"));
  }
  if (j.contains("order") && count_field(j["order"], "descriptor.order") + 1 != polys.size()) {
    schema("descriptor.order", "does not match the number of coefficient polynomials");
  }
  const std::size_t n0 = j.contains("n0") ? count_field(j["n0"], "descriptor.n0") : 0;
  d.recurrence = PRecurrence::make(std::move(polys), n0, rational_list(member(j, "initial", "descriptor"),
                                                                        "descriptor.initial"));
  return d;
}

SeriesDescriptor parse_exppoly(const json& j) {
  SeriesDescriptor d;
  d.kind = DescriptorKind::rational_exppoly;
  const json& terms = member(j, "terms", "descriptor");
  if (!terms.is_array() || terms.empty()) schema("descriptor.terms", "expected a nonempty array");
  std::vector<ExpPolyRational::Term> out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string path = "descriptor.terms[" + std::to_string(t) + "]";
    if (!terms[t].is_object()) schema(path, "expected an object with pole and poly");
    out.push_back({rational_field(member(terms[t], "pole", path), path + ".pole"),
                   UniPoly(rational_list(member(terms[t], "poly", path), path + ".poly"))});
  }
  d.exppoly = ExpPolyRational(std::move(out));
  return d;
}

}  // namespace

std::string to_string(DescriptorKind k) {
  switch (k) {
    case DescriptorKind::coeffs: return "coeffs";
    case DescriptorKind::algebraic: return "algebraic";
    case DescriptorKind::holonomic: return "holonomic";
    case DescriptorKind::rational_exppoly: return "rational-exppoly";
    case DescriptorKind::builtin: return "builtin";
  }
  return "coeffs";
}

Rational rational_field(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) schema(field, "expected a rational such as \"-3/7\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    schema(field, "'" + j.get<std::string>() + "' is not a rational");
  }
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"euler",   "exp",         "log1p",
                                              "geometric", "central-binomial", "catalan",
                                              "thue-morse-signs"};
  return names;
}

SeriesDescriptor builtin_descriptor(const std::string& name) {
  SeriesDescriptor d;
  d.kind = DescriptorKind::builtin;
  d.name = name;
  if (name == "euler") {
    // a_{n+1} + (n+1)·a_n = 0: (-1)^n·n!
    d.recurrence = PRecurrence::make({n_poly({1, 1}), n_poly({1})}, 0, {Rational(1)});
  } else if (name == "exp") {
    d.recurrence = PRecurrence::make({n_poly({-1}), n_poly({1, 1})}, 0, {Rational(1)});
  } else if (name == "log1p") {
    d.recurrence = PRecurrence::make({n_poly({0, 1}), n_poly({1, 1})}, 1, {Rational(0), Rational(1)});
  } else if (name == "geometric") {
    d.recurrence = PRecurrence::make({n_poly({-1}), n_poly({1})}, 0, {Rational(1)});
    d.annihilator = Annihilator(bivariate({{0, 1, 1}, {1, 1, -1}, {0, 0, -1}}), 1);
    d.exppoly = ExpPolyRational::pole_term(1, 1, 1);
  } else if (name == "central-binomial") {
    d.recurrence = PRecurrence::make({n_poly({-2, -4}), n_poly({1, 1})}, 0, {Rational(1)});
    d.annihilator = Annihilator(bivariate({{0, 2, 1}, {1, 2, -4}, {0, 0, -1}}), 1);
  } else if (name == "catalan") {
    d.recurrence = PRecurrence::make({n_poly({-2, -4}), n_poly({2, 1})}, 0, {Rational(1)});
    d.annihilator = Annihilator(bivariate({{1, 2, 1}, {0, 1, -1}, {0, 0, 1}}), 1);
  } else if (name == "thue-morse-signs") {
    d.generator = [](std::size_t n) { return Rational(std::popcount(static_cast<unsigned long long>(n)) % 2 ? -1 : 1); };
  } else {
    std::string known;
    for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
    schema("builtin", "unknown name '" + name + "' (known: " + known + ")");
  }
  return d;
}

SeriesDescriptor parse_descriptor(const json& j) {
  if (!j.is_object()) schema("descriptor", "expected a JSON object");
  if (!j.contains("kind")) {
    if (j.contains("coeffs")) return parse_coeffs(j);
    schema("descriptor.kind", "missing");
  }
  if (!j["kind"].is_string()) schema("descriptor.kind", "expected a string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "coeffs") return parse_coeffs(j);
  if (kind == "algebraic") return parse_algebraic(j);
  if (kind == "holonomic") return parse_holonomic(j);
  if (kind == "rational-exppoly") return parse_exppoly(j);
  if (kind == "builtin") {
    const json& name = member(j, "name", "descriptor");
    if (!name.is_string()) schema("descriptor.name", "expected a string");
    return builtin_descriptor(name.get<std::string>());
  }
  schema("descriptor.kind", "unknown kind '" + kind + "'");
}

SeriesDescriptor load_descriptor(const std::string& arg) {
  std::string text;
  if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else if (std::ifstream in(arg); in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    return builtin_descriptor(arg);
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "descriptor: " + std::string(e.what()));
  }
  return parse_descriptor(j);
}

TruncSeries expand(const SeriesDescriptor& d, std::size_t terms) {
  if (terms == 0) throw Error(ErrorCode::TruncationExceeded, "at least one term must be requested");
  if (d.coeffs) {
    if (terms > d.coeffs->order()) {
      throw Error(ErrorCode::TruncationExceeded, "requested terms exceed truncation: " + std::to_string(terms) +
                                                     " > " + std::to_string(d.coeffs->order()));
    }
    return d.coeffs->truncated(terms);
  }
  if (d.recurrence) return d.recurrence->unroll(terms);
  if (d.annihilator) return expand_branch(*d.annihilator, terms);
  if (d.exppoly) return d.exppoly->expand(terms);
  if (d.generator) {
    std::vector<Rational> c(terms);
    for (std::size_t n = 0; n < terms; ++n) c[n] = d.generator(n);
    return TruncSeries(std::move(c));
  }
  throw Error(ErrorCode::SchemaViolation, "descriptor has no expandable representation");
}

json series_to_json(const TruncSeries& s) {
  return json{{"kind", "coeffs"}, {"coeffs", rationals(s.coeffs())}, {"order", s.order()}};
}

json recurrence_to_json(const PRecurrence& r) {
  json coeffs = json::array();
  for (const auto& p : r.coeffs()) coeffs.push_back(rationals(p.coeffs()));
  return json{{"kind", "holonomic"},
              {"order", r.order()},
              {"coeffs", coeffs},
              {"n0", r.n0()},
              {"initial", rationals(r.initial())},
              {"text", r.to_string()}};
}

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(json::array({m, to_string(c)}));
  return out;
}

json ratfun_to_json(const RatFun& r) {
  return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}, {"text", r.to_string()}};
}

json witness_to_json(const DiagonalWitness& w) {
  return json{{"d", w.d},
              {"R", ratfun_to_json(w.r)},
              {"verified_order", w.verified_order},
              {"constant_shift", to_string(w.constant_shift)}};
}

json obstruction_to_json(const ObstructionReport& r) {
  json primes = json::array();
  for (const auto& p : r.prime_support.primes) primes.push_back(json::array({p.prime, p.first_index}));
  json radius;
  if (r.radius) {
    radius = json{{"beta", r.radius->beta}, {"class", to_string(r.radius->verdict)}};
  } else {
    radius = json{{"beta", nullptr}, {"class", to_string(RadiusClass::inconclusive)}, {"reason", "too sparse"}};
  }
  json periodicity{{"kind", to_string(r.periodicity.kind)}};
  if (r.periodicity.kind == Periodicity::Kind::eventually_periodic) {
    periodicity["preperiod"] = r.periodicity.preperiod;
    periodicity["period"] = r.periodicity.period;
  } else if (r.periodicity.kind == Periodicity::Kind::aperiodic) {
    periodicity["bound"] = r.periodicity.bound;
  }
  return json{{"prime_support", primes},
              {"still_growing", r.prime_support.still_growing},
              {"fully_factored", r.prime_support.fully_factored},
              {"radius", radius},
              {"periodicity", periodicity},
              {"verdict", to_string(r.verdict)},
              {"truncation", r.truncation},
              {"evidence_only", true}};
}

json automaton_to_json(const KernelAutomaton& a) {
  json states = json::array();
  for (const auto& s : a.states) {
    json transitions = json::array();
    for (std::size_t t : s.transitions) {
      if (t == KernelAutomaton::kUnresolved) {
        transitions.push_back(nullptr);
      } else {
        transitions.push_back(t);
      }
    }
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(s.fingerprint_hash));
    states.push_back(json{{"k", s.k}, {"j", s.j}, {"fingerprint_hash", hash}, {"transitions", transitions}});
  }
  return json{{"base", a.base},
              {"status", to_string(a.status)},
              {"fingerprint_length", a.fingerprint_length},
              {"state_count", a.states.size()},
              {"states", states}};
}

}  // namespace gradeforge
