#include "symf/characters.hpp"

#include "symf/error.hpp"

namespace symf {

ClassFunction::ClassFunction(int n) : n_(n) {
  for (const auto& mu : partition_list(n).items) values_.emplace(mu, Rational(0));
}

ClassFunction::ClassFunction(int n, PartitionMap<Rational> values)
    : n_(n), values_(std::move(values)) {
  const auto& list = partition_list(n);
  if (values_.size() != list.items.size()) {
    throw DomainError("class function on S_" + std::to_string(n) +
                      " needs one value per partition of " + std::to_string(n));
  }
  for (const auto& [mu, v] : values_) {
    if (mu.size() != n) {
      throw DomainError("class function key " + to_string(mu) + " is not a partition of " +
                        std::to_string(n));
    }
  }
}

const Rational& ClassFunction::operator()(const Partition& mu) const {
  auto it = values_.find(mu);
  if (it == values_.end()) {
    throw DomainError(to_string(mu) + " is not a class of S_" + std::to_string(n_));
  }
  return it->second;
}

void ClassFunction::set(const Partition& mu, const Rational& value) {
  if (mu.size() != n_) {
    throw DomainError(to_string(mu) + " is not a class of S_" + std::to_string(n_));
  }
  values_[mu] = value;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (a.n_ != b.n_) throw DomainError("class functions of different degrees");
  ClassFunction out = a;
  for (auto& [mu, v] : out.values_) v += b(mu);
  return out;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  if (a.n_ != b.n_) throw DomainError("class functions of different degrees");
  ClassFunction out = a;
  for (auto& [mu, v] : out.values_) v *= b(mu);
  return out;
}

namespace {

void check_coefficient_degree(int n) {
  if (n > kDefaultCoefficientCap) {
    throw CapExceeded("degree " + std::to_string(n) + " exceeds the coefficient cap " +
                      std::to_string(kDefaultCoefficientCap));
  }
}

}  // namespace

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw DomainError("character: |" + to_string(lambda) + "| != |" + to_string(mu) + "|");
  }
  const int n = lambda.size();
  check_coefficient_degree(n);
  const auto& list = partition_list(n);
  const Matrix& schur = to_power_sums(BasisTag::S, n);
  const Rational value = schur(list.index_of(lambda), list.index_of(mu)) * z_value(mu);
  return require_integer(value, "character value");
}

ClassFunction irreducible_character(const Partition& lambda) {
  const int n = lambda.size();
  ClassFunction chi(n);
  for (const auto& mu : partition_list(n).items) chi.set(mu, Rational(character(lambda, mu)));
  return chi;
}

CharacterTable character_table(int n, int cap) {
  if (n < 1) throw DomainError("character_table: n must be at least 1");
  if (n > cap) {
    throw CapExceeded("character table degree " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(cap));
  }
  CharacterTable table;
  table.n = n;
  table.partitions = partition_list(n).items;
  for (const auto& lambda : table.partitions) {
    auto& row = table.values.emplace_back();
    for (const auto& mu : table.partitions) row.push_back(character(lambda, mu));
  }
  return table;
}

SymElement frobenius_ch(const ClassFunction& f) {
  SymElement out(BasisTag::P);
  for (const auto& [mu, v] : f.values()) out.add_term(mu, v / z_value(mu));
  return out;
}

ClassFunction frobenius_inverse(const SymElement& f, int n) {
  const SymElement p = convert(f, BasisTag::P);
  if (!p.is_zero() && p.homogeneous_degree() != n) {
    throw DomainError("frobenius_inverse: input is not homogeneous of degree " +
                      std::to_string(n));
  }
  ClassFunction g(n);
  for (const auto& [mu, c] : p.terms()) g.set(mu, c * z_value(mu));
  return g;
}

Rational char_inner(const ClassFunction& phi, const ClassFunction& chi) {
  if (phi.degree() != chi.degree()) {
    throw DomainError("char_inner: class functions of S_" + std::to_string(phi.degree()) +
                      " and S_" + std::to_string(chi.degree()));
  }
  Rational total = 0;
  for (const auto& [mu, v] : phi.values()) total += v * chi(mu) / z_value(mu);
  return total;
}

Integer littlewood_richardson(const Partition& lambda, const Partition& mu,
                              const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  check_coefficient_degree(lambda.size());
  const SymElement product =
      multiply(basis_element(BasisTag::S, mu), basis_element(BasisTag::S, nu));
  const Integer c = require_integer(hall_inner(basis_element(BasisTag::S, lambda), product),
                                    "Littlewood-Richardson coefficient");
  if (c < 0) throw InvariantViolation("negative Littlewood-Richardson coefficient");
  return c;
}

Integer kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() || mu.size() != nu.size()) return 0;
  const int n = lambda.size();
  check_coefficient_degree(n);
  Rational total = 0;
  for (const auto& rho : partition_list(n).items) {
    total += ratio(character(lambda, rho) * character(mu, rho) * character(nu, rho),
                      z_value(rho));
  }
  const Integer c = require_integer(total, "Kronecker coefficient");
  if (c < 0) throw InvariantViolation("negative Kronecker coefficient");
  return c;
}

SymElement kronecker_product(const SymElement& f, const SymElement& g) {
  const SymElement a = convert(f, BasisTag::P);
  const SymElement b = convert(g, BasisTag::P);
  SymElement out(BasisTag::P);
  for (const auto& [rho, c] : a.terms()) {
    const Rational d = b.coefficient(rho);
    if (sgn(d) != 0) out.add_term(rho, c * d * z_value(rho));
  }
  return convert(out, f.basis());
}

PartitionMap<Integer> youngs_rule(const Partition& mu) {
  check_coefficient_degree(mu.size());
  const SymElement h_mu = convert(basis_element(BasisTag::H, mu), BasisTag::S);
  PartitionMap<Integer> out;
  for (const auto& [lambda, c] : h_mu.terms()) {
    out.emplace(lambda, require_integer(c, "Young's rule multiplicity"));
  }
  return out;
}

}  // namespace symf
