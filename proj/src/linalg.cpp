#include "gradeforge/linalg.hpp"

#include "gradeforge/error.hpp"
#include "zpoly.hpp"

namespace gradeforge {

namespace {

detail::ZPoly to_zpoly(const UniPoly& p, const Integer& scale) {
  detail::ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c.get_num() * (scale / c.get_den()));
  return out;
}

UniPoly from_zpoly(const detail::ZPoly& p) {
  return UniPoly(std::vector<Rational>(p.begin(), p.end()));
}

}  // namespace

std::vector<UniPoly> normalize_content(std::vector<UniPoly> v) {
  using detail::ZPoly;
  ZPoly g;
  for (const auto& e : v) {
    g = detail::gcd(g, to_zpoly(e, common_denominator(e.coeffs())));
    if (g.size() == 1) break;
  }
  if (g.empty()) return v;
  if (g.size() > 1) {
    const UniPoly divisor = from_zpoly(g);
    for (auto& e : v) e = e.exact_quotient(divisor);
  }
  // Scale to integer coefficients with overall gcd 1.
  Integer den = 1;
  for (const auto& e : v) den = lcm(den, common_denominator(e.coeffs()));
  Integer num_gcd = 0;
  for (const auto& e : v) {
    for (const auto& c : e.coeffs()) num_gcd = gcd(num_gcd, Integer(c.get_num() * (den / c.get_den())));
  }
  Rational scale = make_rational(den, num_gcd);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (!it->is_zero()) {
      if (it->leading() < 0) scale = -scale;
      break;
    }
  }
  for (auto& e : v) e = e * UniPoly(scale);
  return v;
}

std::optional<std::vector<UniPoly>> fraction_free_left_kernel(const PolyMatrix& m) {
  using detail::ZPoly;
  const std::size_t rows = m.size();
  if (rows == 0) return std::nullopt;
  const std::size_t cols = m.front().size();
  const std::size_t width = cols + rows;

  // Scale each row to integer coefficients; row i of the scaled matrix is
  // row_scale[i] times row i of m.
  std::vector<Integer> row_scale(rows, Integer(1));
  std::vector<std::vector<ZPoly>> a(rows, std::vector<ZPoly>(width));
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) throw Error(ErrorCode::VariableMismatch, "ragged matrix");
    for (const auto& e : m[i]) row_scale[i] = lcm(row_scale[i], common_denominator(e.coeffs()));
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = to_zpoly(m[i][j], row_scale[i]);
    a[i][cols + i] = ZPoly{Integer(1)};
  }

  ZPoly prev{Integer(1)};
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t p = pivot_row;
    while (p < rows && a[p][col].empty()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[pivot_row]);
    const ZPoly& piv = a[pivot_row][col];
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      const ZPoly factor = a[i][col];
      for (std::size_t j = col + 1; j < width; ++j) {
        ZPoly t = detail::mul_sub(piv, a[i][j], factor, a[pivot_row][j]);
        if (!detail::divide_exact(t, prev, a[i][j])) {
          throw Error(ErrorCode::InexactDivision, "Bareiss step lost exactness");
        }
      }
      a[i][col].clear();
    }
    prev = piv;
    ++pivot_row;
  }
  if (pivot_row == rows) return std::nullopt;

  std::vector<UniPoly> v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = from_zpoly(a[pivot_row][cols + i]) * UniPoly(Rational(row_scale[i]));
  return normalize_content(std::move(v));
}

std::vector<std::vector<Rational>> rational_nullspace(RationalMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gradeforge
