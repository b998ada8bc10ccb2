#include "symf/arith.hpp"

#include <cctype>
#include <string>

#include "symf/error.hpp"

namespace symf {

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer power(const Integer& base, unsigned exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("division by zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer require_integer(const Rational& value, std::string_view what) {
  if (value.get_den() != 1) {
    throw InvariantViolation(std::string(what) + " is not an integer: " +
                             to_string(value));
  }
  return value.get_num();
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) ||
      (slash != std::string_view::npos &&
       (!is_integer_literal(den) || den.front() == '-' || den.front() == '+'))) {
    throw SyntaxError("malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Rational result;
  result.get_num() = Integer(std::string(num));
  result.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (result.get_den() == 0) {
    throw SyntaxError("zero denominator in '" + std::string(text) + "'");
  }
  result.canonicalize();
  return result;
}

}  // namespace symf
