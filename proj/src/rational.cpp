#include "gradeforge/rational.hpp"

#include <cctype>
#include <cmath>

#include "gradeforge/error.hpp"

namespace gradeforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::RamifiedBranch: return "RamifiedBranch";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InsufficientInitialTerms: return "InsufficientInitialTerms";
    case ErrorCode::InsufficientTerms: return "InsufficientTerms";
    case ErrorCode::TooSparse: return "TooSparse";
    case ErrorCode::PrimeDividesDenominator: return "PrimeDividesDenominator";
    case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::BranchNotAtZero: return "BranchNotAtZero";
    case ErrorCode::RamifiedAtOrigin: return "RamifiedAtOrigin";
    case ErrorCode::VariableCollision: return "VariableCollision";
    case ErrorCode::DenominatorVanishesAtOrigin: return "DenominatorVanishesAtOrigin";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::NotOdd: return "NotOdd";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

ErrorFamily family_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaViolation:
    case ErrorCode::VariableMismatch:
      return ErrorFamily::schema;
    case ErrorCode::BudgetTooSmall:
    case ErrorCode::BudgetExceeded:
      return ErrorFamily::budget;
    default:
      return ErrorFamily::precondition;
  }
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(n, d);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double log_abs(const Integer& value) {
  if (value == 0) return -HUGE_VAL;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& value) {
  return log_abs(Integer(value.get_num())) - log_abs(Integer(value.get_den()));
}

double to_double(const Rational& value) { return value.get_d(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) l = lcm(l, Integer(v.get_den()));
  return l;
}

}  // namespace gradeforge
