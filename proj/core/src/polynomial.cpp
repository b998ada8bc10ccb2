#include "symf/polynomial.hpp"

#include "symf/error.hpp"
#include "symf/permutation.hpp"

namespace symf {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
  if (i < 1 || i > variables) throw DomainError("variable index out of range");
  Exponents e(variables, 0);
  e[i - 1] = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponents exponents, const Rational& c) {
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != variables_) throw DomainError("exponent vector has wrong length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.variables_ != variables_) throw DomainError("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.variables_ != variables_) throw DomainError("polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw DomainError("polynomial variable count mismatch");
  Polynomial out(a.variables_);
  Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::permute(const Permutation& sigma) const {
  if (static_cast<std::size_t>(sigma.degree()) != variables_) {
    throw DomainError("permutation degree does not match the variable count");
  }
  Polynomial out(variables_);
  Exponents moved(variables_);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < variables_; ++i) {
      moved[static_cast<std::size_t>(sigma(static_cast<int>(i) + 1) - 1)] = e[i];
    }
    out.add_term(moved, c);
  }
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.variables(), 1);
  for (unsigned k = 0; k < exponent; ++k) result = result * base;
  return result;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (values.size() != variables_) throw DomainError("substitute: wrong number of values");
  const std::size_t target = values.empty() ? 0 : values.front().variables();
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < variables_; ++i) {
      if (e[i] != 0) term = term * pow(values[i], static_cast<unsigned>(e[i]));
    }
    out += term;
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_) throw DomainError("evaluate: wrong number of values");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < variables_; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Rational Polynomial::at_ones() const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  // Highest exponent vectors first reads like x1^2 + x1*x2 + ...
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + "*" + mono;
    }
  }
  return out;
}

}  // namespace symf
