#include "zpoly.hpp"

#include <algorithm>

namespace gradeforge::detail {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(out);
  return out;
}

ZPoly mul_sub(const ZPoly& a, const ZPoly& b, const ZPoly& c, const ZPoly& d) {
  std::size_t n = 0;
  if (!a.empty() && !b.empty()) n = a.size() + b.size() - 1;
  if (!c.empty() && !d.empty()) n = std::max(n, c.size() + d.size() - 1);
  ZPoly out(n);
  for (std::size_t i = 0; i < a.size() && !b.empty(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < c.size() && !d.empty(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) mpz_submul(out[i + j].get_mpz_t(), c[i].get_mpz_t(), d[j].get_mpz_t());
  }
  trim(out);
  return out;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  quotient.clear();
  if (a.empty()) return true;
  if (b.empty() || a.size() < b.size()) return false;
  ZPoly rem = a;
  const std::size_t db = b.size() - 1;
  quotient.assign(a.size() - db, Integer(0));
  const Integer& lead = b.back();
  for (std::size_t k = quotient.size(); k-- > 0;) {
    Integer& top = rem[k + db];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) == 0) return false;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
    quotient[k] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) return false;
  }
  trim(quotient);
  return true;
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(ZPoly p) {
  if (p.empty()) return p;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

namespace {

Integer max_norm(const ZPoly& p) {
  Integer m = 0;
  for (const auto& c : p) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

Integer evaluate(const ZPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Symmetric xi-adic digits of gamma.
ZPoly from_adic(Integer gamma, const Integer& xi) {
  ZPoly out;
  const Integer half = xi / 2;
  while (gamma != 0) {
    Integer digit;
    mpz_fdiv_r(digit.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    if (digit > half) digit -= xi;
    out.push_back(digit);
    gamma -= digit;
    mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
  }
  trim(out);
  return out;
}

// Heuristic gcd (Char, Geddes, Gonnet): evaluate at a large integer, take the
// integer gcd, and read the polynomial back from its xi-adic expansion.
bool heuristic_gcd(const ZPoly& a, const ZPoly& b, ZPoly& out) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer gamma = gcd(evaluate(a, xi), evaluate(b, xi));
    ZPoly g = primitive(from_adic(gamma, xi));
    ZPoly q;
    if (!g.empty() && divide_exact(a, g, q) && divide_exact(b, g, q)) {
      out = std::move(g);
      return true;
    }
    xi = xi * 73794 / 27011;
  }
  return false;
}

// Primitive polynomial remainder sequence.
ZPoly prs_gcd(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b
    ZPoly r = a;
    const std::size_t db = b.size() - 1;
    while (r.size() >= b.size()) {
      const std::size_t shift = r.size() - b.size();
      Integer lr = r.back();
      for (auto& c : r) c *= b.back();
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
      trim(r);
      r = primitive(std::move(r));
    }
    a = std::move(b);
    b = primitive(std::move(r));
  }
  return primitive(std::move(a));
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  ZPoly pa = primitive(a);
  ZPoly pb = primitive(b);
  if (pa.size() == 1 || pb.size() == 1) return ZPoly{Integer(1)};
  ZPoly g;
  if (heuristic_gcd(pa, pb, g)) return g;
  return prs_gcd(std::move(pa), std::move(pb));
}

}  // namespace gradeforge::detail
