#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "symf/arith.hpp"
#include "symf/characters.hpp"
#include "symf/matrix.hpp"
#include "symf/partition.hpp"
#include "symf/permutation.hpp"
#include "symf/polynomial.hpp"
#include "symf/tableau.hpp"

namespace symf {

/// Size caps for explicit representations. Configurable at run time.
struct RepCaps {
  int regular = 6;         ///< n! × n! matrices
  int young_module = 6;    ///< permutation module on row-sorted tableaux
  int specht_module = 5;   ///< polynomial Specht modules
};
RepCaps rep_caps();
void set_rep_caps(const RepCaps& caps);

/// A subgroup H ≤ S_n given by its elements.
class SubgroupSpec {
 public:
  /// Throws DomainError unless the list contains the identity and is closed
  /// under composition (and so under inverses).
  static SubgroupSpec from_elements(int n, std::vector<Permutation> elements);
  /// S_{c_1} × S_{c_2} × ... acting on consecutive blocks of 1..n.
  static SubgroupSpec young(const std::vector<int>& composition);
  static SubgroupSpec symmetric(int n);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  /// Sorted in lexicographic word order.
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;

 private:
  int n_ = 0;
  std::vector<Permutation> elements_;
};

/// A matrix representation X of S_n, stored as the images of the adjacent
/// transpositions s_1 .. s_{n-1}. Other permutations are reached by
/// composing generator matrices along a reduced word; those products are
/// memoized. Immutable once built, safe to share between threads.
class MatrixRep {
 public:
  MatrixRep() = default;
  /// generators[i] is X(s_{i+1}). Throws DomainError on a size mismatch.
  MatrixRep(int n, std::size_t dim, std::vector<Matrix> generators);

  int degree() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  /// X(π), with X(πσ) = X(π) X(σ).
  const Matrix& matrix(const Permutation& pi) const;

 private:
  struct Memo;
  int n_ = 0;
  std::size_t dim_ = 0;
  std::vector<Matrix> generators_;
  std::shared_ptr<Memo> memo_;
};

/// A representation of a subgroup H ≤ S_n, with one matrix per element.
class SubgroupRep {
 public:
  /// Throws DomainError unless `matrices` has exactly the elements of H as
  /// keys, all of size dim × dim.
  SubgroupRep(SubgroupSpec group, std::size_t dim, std::map<Permutation, Matrix> matrices);
  static SubgroupRep trivial(const SubgroupSpec& group);
  static SubgroupRep sign(const SubgroupSpec& group);

  const SubgroupSpec& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const Matrix& matrix(const Permutation& h) const;
  /// Element-wise character h -> tr Y(h).
  std::map<Permutation, Rational> character() const;

 private:
  SubgroupSpec group_;
  std::size_t dim_;
  std::map<Permutation, Matrix> matrices_;
};

/// ⟨φ, χ⟩_H = (1/|H|) Σ_h φ(h) χ(h^{-1}).
Rational subgroup_inner(const SubgroupSpec& group, const std::map<Permutation, Rational>& phi,
                        const std::map<Permutation, Rational>& chi);

enum class ClassicalKind { Trivial, Sign, Defining, Regular, Standard };
ClassicalKind parse_classical_kind(std::string_view text);

/// trivial, sign, defining (X(π)e_j = e_{π(j)}), regular (on S_n in
/// lexicographic order), standard (basis e_{j+1} - e_1, j = 1..n-1).
MatrixRep classical_rep(ClassicalKind kind, int n);

/// Trace at the canonical representative of each cycle type.
ClassFunction character_of(const MatrixRep& rep);
/// Multiplicities of the irreducibles; zeros omitted. Throws
/// InvariantViolation on a non-integral or negative multiplicity.
PartitionMap<Integer> decompose(const MatrixRep& rep);
/// Same, starting from a character.
PartitionMap<Integer> decompose(const ClassFunction& chi);

/// Whether s_i^2 = 1, (s_i s_{i+1})^3 = 1 and s_i s_j = s_j s_i (|i-j| > 1)
/// hold exactly for the generator matrices.
bool satisfies_coxeter_relations(const MatrixRep& rep);

/// Row-sorted injective tableaux of shape λ with entries 1..n, in
/// lexicographic row-major order: the basis of H^λ.
std::vector<Tableau> young_module_basis(const Partition& lambda);
/// x^t = ∏ x_{t(l)}^{row(l)-1} over the cells of an injective tableau.
Polynomial injective_weight(const Tableau& t, int variables);
/// The permutation module H^λ on the monomials x^t.
MatrixRep young_module(const Partition& lambda);

/// a_t = Σ_{σ ∈ C_t} sgn(σ) σ·x^t for an injective tableau t.
Polynomial specht_polynomial(const Tableau& t, int variables);
/// The standard tableaux of shape λ together with their a_t.
std::vector<std::pair<Tableau, Polynomial>> specht_basis(const Partition& lambda);
/// S^λ in the basis {a_t : t standard}; matrices by exact linear solves.
MatrixRep specht_module(const Partition& lambda);

/// Left coset representatives of H in S_n: scanning S_n in lexicographic
/// order, each not-yet-covered permutation starts a new coset.
std::vector<Permutation> default_transversal(const SubgroupSpec& group);
/// The block matrix (Y(t_i^{-1} g t_j)) with Y = 0 off H.
Matrix induced_matrix(const SubgroupRep& rep, const std::vector<Permutation>& transversal,
                      const Permutation& g);
/// Y↑^{S_n}_H. With no transversal the default one is used; a supplied
/// transversal is validated.
MatrixRep induce(const SubgroupRep& rep,
                 std::optional<std::vector<Permutation>> transversal = std::nullopt);
/// X↓_H.
SubgroupRep restrict(const MatrixRep& rep, const SubgroupSpec& group);

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);
/// Diagonal action on the tensor product.
MatrixRep tensor_product(const MatrixRep& a, const MatrixRep& b);

/// Cycle type of g² from that of g.
Partition square_class(const Partition& mu);
/// χ_{∧²V}(g) = (χ(g)² - χ(g²)) / 2.
ClassFunction exterior_square_character(const ClassFunction& chi);

/// s_λ(x_1, ..., x_m).
Polynomial gl_character(const Partition& lambda, int m);
/// Number of semistandard tableaux of shape λ with entries ≤ m.
Integer gl_dimension(const Partition& lambda, int m);
/// m^n == Σ_{λ⊢n, ℓ(λ)≤m} f^λ · gl_dimension(λ, m). Requires n, m ≤ 6.
bool schur_weyl_check(int n, int m);

}  // namespace symf
