#include "gradeforge/holonomic.hpp"

#include <algorithm>
#include <sstream>

#include "gradeforge/error.hpp"
#include "gradeforge/linalg.hpp"

namespace gradeforge {

namespace {

void validate_coeffs(const std::vector<UniPoly>& coeffs) {
  if (coeffs.size() < 2) throw Error(ErrorCode::DegenerateInput, "recurrence order must be at least 1");
  if (coeffs.back().is_zero()) throw Error(ErrorCode::DegenerateInput, "leading recurrence coefficient is zero");
}

// Companion numerator: u_{n+1} = (companion(n) / p_r(n)) u_n.
PolyMatrix companion_numerator(const std::vector<UniPoly>& p) {
  const std::size_t r = p.size() - 1;
  PolyMatrix m(r, std::vector<UniPoly>(r));
  for (std::size_t i = 0; i + 1 < r; ++i) m[i][i + 1] = p[r];
  for (std::size_t j = 0; j < r; ++j) m[r - 1][j] = -p[j];
  return m;
}

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t r = a.size();
  const std::size_t s = b.size();
  PolyMatrix k(r * s, std::vector<UniPoly>(r * s));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < r; ++c) {
      if (a[i][c].is_zero()) continue;
      for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t l = 0; l < s; ++l) {
          if (!b[j][l].is_zero()) k[i * s + j][c * s + l] = a[i][c] * b[j][l];
        }
      }
    }
  }
  return k;
}

std::vector<UniPoly> shifted(const std::vector<UniPoly>& row, long k) {
  std::vector<UniPoly> out;
  out.reserve(row.size());
  for (const auto& e : row) out.push_back(e.shifted(k));
  return out;
}

std::vector<UniPoly> times(const std::vector<UniPoly>& row, const PolyMatrix& m) {
  std::vector<UniPoly> out(m.front().size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (!m[i][j].is_zero()) out[j] += row[i] * m[i][j];
    }
  }
  return out;
}

// Drops identically zero low-order coefficients: sum_{k>=t} q_k(n) c_{n+k} = 0
// for n >= n0 is the order-(m-t) recurrence q_{k+t}(n-t) from n0 + t.
std::pair<std::vector<UniPoly>, std::size_t> trim_low(std::vector<UniPoly> q, std::size_t n0) {
  while (!q.empty() && q.back().is_zero()) q.pop_back();
  std::size_t t = 0;
  while (t < q.size() && q[t].is_zero()) ++t;
  if (t == 0) return {std::move(q), n0};
  std::vector<UniPoly> out;
  for (std::size_t k = t; k < q.size(); ++k) out.push_back(q[k].shifted(-static_cast<long>(t)));
  return {std::move(out), n0 + t};
}

}  // namespace

std::size_t PRecurrence::required_terms(const std::vector<UniPoly>& coeffs, std::size_t n0) {
  validate_coeffs(coeffs);
  return raised_base(coeffs, n0) + coeffs.size() - 1;
}

std::size_t PRecurrence::raised_base(const std::vector<UniPoly>& coeffs, std::size_t n0) {
  auto roots = coeffs.back().integer_roots_from(static_cast<long>(n0));
  if (roots.empty()) return n0;
  return static_cast<std::size_t>(roots.back()) + 1;
}

PRecurrence PRecurrence::make(std::vector<UniPoly> coeffs, std::size_t n0, std::vector<Rational> initial) {
  validate_coeffs(coeffs);
  PRecurrence r;
  r.n0_ = raised_base(coeffs, n0);
  const std::size_t needed = r.n0_ + coeffs.size() - 1;
  if (initial.size() < needed) {
    throw Error(ErrorCode::InsufficientInitialTerms,
                "need " + std::to_string(needed) + " initial terms, got " + std::to_string(initial.size()));
  }
  initial.resize(needed);
  r.initial_ = std::move(initial);
  r.coeffs_ = normalize_content(std::move(coeffs));
  return r;
}

PRecurrence PRecurrence::from_terms(std::vector<UniPoly> coeffs, std::size_t n0, const TruncSeries& terms) {
  const std::size_t needed = required_terms(coeffs, n0);
  if (terms.order() < needed) {
    throw Error(ErrorCode::InsufficientInitialTerms,
                "need " + std::to_string(needed) + " known terms, got " + std::to_string(terms.order()));
  }
  return make(std::move(coeffs), n0, terms.truncated(needed).coeffs());
}

TruncSeries PRecurrence::unroll(std::size_t count) const {
  if (count == 0) throw Error(ErrorCode::TruncationExceeded, "unroll count must be positive");
  std::vector<Rational> a(initial_.begin(), initial_.begin() + static_cast<std::ptrdiff_t>(std::min(count, initial_.size())));
  const std::size_t r = order();
  for (std::size_t idx = a.size(); idx < count; ++idx) {
    const std::size_t n = idx - r;
    const Rational nn(static_cast<unsigned long>(n));
    Rational acc = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (a[n + i] != 0) acc += coeffs_[i].eval(nn) * a[n + i];
    }
    a.push_back(-acc / coeffs_[r].eval(nn));
  }
  return TruncSeries(std::move(a));
}

std::string PRecurrence::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (os.tellp() > 0) os << " + ";
    os << "(" << coeffs_[i].to_string() << ")*a(n+" << i << ")";
  }
  os << " = 0 for n >= " << n0_ << "; initial [";
  for (std::size_t i = 0; i < initial_.size(); ++i) os << (i ? ", " : "") << gradeforge::to_string(initial_[i]);
  os << "]";
  return os.str();
}

bool equivalent(const PRecurrence& a, const PRecurrence& b, std::size_t count) {
  return a.unroll(count) == b.unroll(count);
}

PRecurrence hadamard_recurrence(const PRecurrence& a, const PRecurrence& b) {
  auto all_zero_tail = [](const PRecurrence& r) {
    return std::all_of(r.coeffs().begin(), r.coeffs().end() - 1, [](const UniPoly& p) { return p.is_zero(); });
  };
  auto zero_window = [](const PRecurrence& r) {
    return std::all_of(r.initial().begin(), r.initial().end(), [](const Rational& c) { return c == 0; });
  };
  if (zero_window(a) || zero_window(b)) {
    throw Error(ErrorCode::DegenerateInput, "an input recurrence has an all-zero leading window");
  }
  if (all_zero_tail(a) || all_zero_tail(b)) {
    throw Error(ErrorCode::DegenerateInput, "an input recurrence forces an eventually zero sequence");
  }
  const std::size_t r = a.order();
  const std::size_t s = b.order();
  const std::size_t dim = r * s;
  const std::size_t base = std::max(a.n0(), b.n0());

  const PolyMatrix step = kronecker(companion_numerator(a.coeffs()), companion_numerator(b.coeffs()));
  const UniPoly lead = a.coeffs().back() * b.coeffs().back();

  // rho_k = numer[k] / denom[k], denom[k](n) = prod_{i<k} lead(n + i).
  std::vector<std::vector<UniPoly>> numer;
  std::vector<UniPoly> denom;
  std::vector<UniPoly> first(dim);
  first[0] = UniPoly(Rational(1));
  numer.push_back(std::move(first));
  denom.emplace_back(Rational(1));

  std::optional<std::vector<UniPoly>> kernel;
  for (std::size_t k = 1; k <= dim && !kernel; ++k) {
    numer.push_back(times(shifted(numer.back(), 1), step));
    denom.push_back(lead * denom.back().shifted(1));
    kernel = fraction_free_left_kernel(numer);
  }
  if (!kernel) throw Error(ErrorCode::DegenerateInput, "no dependency among the row functionals");

  std::vector<UniPoly> q(kernel->size());
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = (*kernel)[k] * denom[k];
  q = normalize_content(std::move(q));
  auto [coeffs, n0] = trim_low(std::move(q), base);
  validate_coeffs(coeffs);

  const std::size_t needed = PRecurrence::required_terms(coeffs, n0);
  const TruncSeries product = hadamard_mul(a.unroll(needed), b.unroll(needed));
  return PRecurrence::from_terms(std::move(coeffs), n0, product);
}

std::size_t guess_terms_required(std::size_t max_order, std::size_t max_degree) {
  return (max_order + 1) * (max_degree + 1) + max_order + 10;
}

std::optional<GuessedRecurrence> guess_recurrence(const TruncSeries& f, std::size_t max_order,
                                                  std::size_t max_degree) {
  const std::size_t total = f.order();
  if (max_order == 0) throw Error(ErrorCode::DegenerateInput, "recurrence order must be at least 1");
  if (total < guess_terms_required(max_order, max_degree)) {
    throw Error(ErrorCode::InsufficientTerms,
                "need " + std::to_string(guess_terms_required(max_order, max_degree)) + " terms, got " +
                    std::to_string(total));
  }
  for (std::size_t r = 1; r <= max_order; ++r) {
    for (std::size_t d = 0; d <= max_degree; ++d) {
      const std::size_t unknowns = (r + 1) * (d + 1);
      RationalMatrix rows;
      for (std::size_t n = 0; n + r < total; ++n) {
        std::vector<Rational> row(unknowns);
        const Rational nn(static_cast<unsigned long>(n));
        for (std::size_t i = 0; i <= r; ++i) {
          Rational power = 1;
          for (std::size_t e = 0; e <= d; ++e) {
            row[i * (d + 1) + e] = power * f[n + i];
            power *= nn;
          }
        }
        rows.push_back(std::move(row));
      }
      for (const auto& v : rational_nullspace(std::move(rows), unknowns)) {
        std::vector<UniPoly> q(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
          q[i] = UniPoly(std::vector<Rational>(v.begin() + static_cast<std::ptrdiff_t>(i * (d + 1)),
                                               v.begin() + static_cast<std::ptrdiff_t>((i + 1) * (d + 1))));
        }
        if (q.back().is_zero()) continue;
        auto [coeffs, n0] = trim_low(normalize_content(std::move(q)), 0);
        try {
          PRecurrence rec = PRecurrence::from_terms(std::move(coeffs), n0, f);
          if (rec.unroll(total) == f) return GuessedRecurrence{std::move(rec), total, true};
        } catch (const Error& e) {
          if (e.code() != ErrorCode::InsufficientInitialTerms) throw;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace gradeforge
