#pragma once

#include <vector>

#include "symf/arith.hpp"
#include "symf/partition.hpp"
#include "symf/symfunc.hpp"

namespace symf {

/// A class function on S_n, one value per conjugacy class (cycle type).
class ClassFunction {
 public:
  ClassFunction() = default;
  /// The zero function on S_n.
  explicit ClassFunction(int n);
  /// Throws DomainError unless the keys are exactly the partitions of n.
  ClassFunction(int n, PartitionMap<Rational> values);

  int degree() const { return n_; }
  const PartitionMap<Rational>& values() const { return values_; }
  const Rational& operator()(const Partition& mu) const;
  void set(const Partition& mu, const Rational& value);

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

 private:
  int n_ = 0;
  PartitionMap<Rational> values_;
};

/// Default degree cap for full character tables.
inline constexpr int kDefaultCharacterTableCap = 8;
/// Default degree cap for single coefficients.
inline constexpr int kDefaultCoefficientCap = 12;

/// χ^λ(μ) = z_μ · [p_μ] s_λ. Throws DomainError when |λ| != |μ|.
Integer character(const Partition& lambda, const Partition& mu);
/// The irreducible character χ^λ as a class function.
ClassFunction irreducible_character(const Partition& lambda);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;  ///< rows λ and columns μ, canonical order
  std::vector<std::vector<Integer>> values;
};
CharacterTable character_table(int n, int cap = kDefaultCharacterTableCap);

/// ch(f) = Σ_μ f(μ) p_μ / z_μ, in the power-sum basis.
SymElement frobenius_ch(const ClassFunction& f);
/// Inverse of ch on Sym^(n); throws DomainError unless f is homogeneous of
/// degree n (the zero element is accepted).
ClassFunction frobenius_inverse(const SymElement& f, int n);

/// ⟨φ, χ⟩ = Σ_μ φ(μ) χ(μ) / z_μ. Throws DomainError on a degree mismatch.
Rational char_inner(const ClassFunction& phi, const ClassFunction& chi);

/// c^λ_{μν} = ⟨s_λ, s_μ s_ν⟩.
Integer littlewood_richardson(const Partition& lambda, const Partition& mu,
                              const Partition& nu);
/// γ^λ_{μν} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ; 0 unless all sizes agree.
Integer kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);
/// The internal product, p_λ ⋆ p_μ = δ_{λμ} z_λ p_λ; result in f's basis.
SymElement kronecker_product(const SymElement& f, const SymElement& g);
/// Multiplicities of S^λ in the Young permutation module H^μ; zero entries
/// are omitted.
PartitionMap<Integer> youngs_rule(const Partition& mu);

}  // namespace symf
