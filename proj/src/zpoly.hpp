#pragma once

// Dense integer polynomials for the hot loops (fraction-free elimination and
// gcd). Internal to the library; UniPoly is the public face.

#include <vector>

#include "gradeforge/rational.hpp"

namespace gradeforge::detail {

/// Ascending coefficients, no trailing zeros; empty is zero.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& p);
ZPoly mul(const ZPoly& a, const ZPoly& b);
/// a*b - c*d
ZPoly mul_sub(const ZPoly& a, const ZPoly& b, const ZPoly& c, const ZPoly& d);
/// Exact quotient a / b in Z[n]; returns false when b does not divide a.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);
Integer content(const ZPoly& p);
/// Divides by the content and makes the leading coefficient positive.
ZPoly primitive(ZPoly p);
/// Primitive gcd with positive leading coefficient (zero iff both are zero).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

}  // namespace gradeforge::detail
