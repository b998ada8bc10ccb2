#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symf {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer power(const Integer& base, unsigned exponent);

/// Converts an exact rational that must be integral; throws
/// InvariantViolation naming `what` otherwise.
/// num/den in lowest terms. Throws DomainError when den is zero.
Rational ratio(const Integer& num, const Integer& den);

Integer require_integer(const Rational& value, std::string_view what);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Parses "p", "-p" or "p/q"; throws SyntaxError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace symf
