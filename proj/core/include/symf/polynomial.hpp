#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symf/arith.hpp"

namespace symf {

class Permutation;

/// Exponent vector over x_1..x_k.
using Exponents = std::vector<int>;

/// A polynomial in a fixed number of commuting variables with exact
/// rational coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}
  static Polynomial constant(std::size_t variables, const Rational& c);
  /// x_i, 1-based.
  static Polynomial variable(std::size_t variables, std::size_t i);
  static Polynomial monomial(Exponents exponents, const Rational& c = 1);

  std::size_t variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// σ·f: substitutes x_i -> x_{σ(i)}. Requires degree(σ) == variables().
  Polynomial permute(const Permutation& sigma) const;
  /// f(values_1, ..., values_k) computed in the ring of the values.
  Polynomial substitute(std::span<const Polynomial> values) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Sum of all coefficients, i.e. f(1, ..., 1).
  Rational at_ones() const;

 private:
  std::size_t variables_;
  Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Readable form such as "x1^2*x2 - 1/2*x3", or "0".
std::string to_string(const Polynomial& f);

}  // namespace symf
