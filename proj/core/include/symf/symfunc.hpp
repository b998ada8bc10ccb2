#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symf/arith.hpp"
#include "symf/matrix.hpp"
#include "symf/partition.hpp"
#include "symf/polynomial.hpp"

namespace symf {

/// The five classical bases of Sym.
enum class BasisTag { M, E, H, P, S };

inline constexpr BasisTag kAllBases[] = {BasisTag::M, BasisTag::E, BasisTag::H,
                                         BasisTag::P, BasisTag::S};

/// Lower-case letter: "m", "e", "h", "p", "s".
std::string_view basis_name(BasisTag b);
/// Accepts the letter in either case; throws SyntaxError otherwise.
BasisTag parse_basis(std::string_view text);

/// A finite linear combination of basis functions b_λ with exact rational
/// coefficients. Degrees may be mixed. Zero coefficients are never stored.
///
/// Equality is semantic: elements in different bases compare equal when
/// they expand to the same power-sum coefficients.
class SymElement {
 public:
  using Terms = PartitionMap<Rational>;

  explicit SymElement(BasisTag basis = BasisTag::P) : basis_(basis) {}
  SymElement(BasisTag basis, Terms terms);

  BasisTag basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& c);

  /// The common degree of all terms; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;
  /// Terms of one degree only.
  SymElement degree_part(int n) const;

  /// The right operand is converted to this element's basis first.
  SymElement& operator+=(const SymElement& other);
  SymElement& operator-=(const SymElement& other);
  SymElement& operator*=(const Rational& scalar);
  friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
  friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
  friend SymElement operator-(SymElement a) { return a *= -1; }
  friend SymElement operator*(SymElement a, const Rational& s) { return a *= s; }
  friend SymElement operator*(const Rational& s, SymElement a) { return a *= s; }

  friend bool operator==(const SymElement& a, const SymElement& b);
  /// Same basis and identical stored terms.
  bool same_terms(const SymElement& other) const {
    return basis_ == other.basis_ && terms_ == other.terms_;
  }

 private:
  BasisTag basis_;
  Terms terms_;
};

/// Sparse coefficient vector over partitions.
using SparseVector = PartitionMap<Rational>;

// -- Transition matrices ----------------------------------------------------
//
// Power sums are the hub basis. For each basis b and degree n, row λ of
// to_power_sums(b, n) holds the power-sum expansion of b_λ, with columns in
// partitions_of(n) order; from_power_sums(b, n) is its inverse, so row ρ
// holds the expansion of p_ρ in basis b.
//
// Matrices are memoized per (basis, degree) and computed at most once even
// under concurrent access.

const Matrix& to_power_sums(BasisTag b, int n);
const Matrix& from_power_sums(BasisTag b, int n);

/// Degree cap for transition matrices (default 20). Requests above it
/// throw CapExceeded.
int max_degree();
void set_max_degree(int n);

// -- Ring operations --------------------------------------------------------

SymElement basis_element(BasisTag b, const Partition& lambda);
SymElement convert(const SymElement& f, BasisTag target);
/// Ring product, reported in the power-sum basis.
SymElement multiply(const SymElement& f, const SymElement& g);
/// Hall scalar product, computed diagonally on power sums.
Rational hall_inner(const SymElement& f, const SymElement& g);
/// The involution with ω(e_n) = h_n; result in f's basis.
SymElement omega(const SymElement& f);
/// s_{λ/μ} = Σ_ν ⟨s_λ, s_μ s_ν⟩ s_ν in the Schur basis; zero when μ ⊄ λ.
SymElement skew_schur(const Partition& lambda, const Partition& mu);
/// s_μ^⊥ f, the adjoint of multiplication by s_μ; result in f's basis.
SymElement perp(const Partition& mu, const SymElement& f);
/// f(x_1, ..., x_m, 0, 0, ...).
Polynomial evaluate(const SymElement& f, int variables);

}  // namespace symf
