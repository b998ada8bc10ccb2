#pragma once

#include <map>
#include <utility>

#include "symf/arith.hpp"
#include "symf/partition.hpp"
#include "symf/symfunc.hpp"

namespace symf {

/// Order on (left, right) partition pairs: canonical order on the left,
/// then on the right.
struct PairLess {
  bool operator()(const std::pair<Partition, Partition>& a,
                  const std::pair<Partition, Partition>& b) const {
    CanonicalLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

/// An element of Sym ⊗ Sym written in a pair of bases. Equality is
/// semantic, through the (p, p) expansion.
class TensorElement {
 public:
  using Key = std::pair<Partition, Partition>;
  using Terms = std::map<Key, Rational, PairLess>;

  explicit TensorElement(BasisTag left = BasisTag::P, BasisTag right = BasisTag::P)
      : left_(left), right_(right) {}

  BasisTag left_basis() const { return left_; }
  BasisTag right_basis() const { return right_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& a, const Partition& b) const;
  void add_term(const Partition& a, const Partition& b, const Rational& c);

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator*=(const Rational& scalar);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
  /// Componentwise product (a ⊗ b)(c ⊗ d) = ac ⊗ bd, reported in (p, p).
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b);

 private:
  BasisTag left_;
  BasisTag right_;
  Terms terms_;
};

TensorElement tensor(const SymElement& a, const SymElement& b);
/// Re-expresses both sides in the requested bases.
TensorElement convert(const TensorElement& t, BasisTag left, BasisTag right);
/// ⟨T, g ⊗ h⟩ with the product-extended Hall inner product.
Rational tensor_inner(const TensorElement& t, const SymElement& g, const SymElement& h);
/// Multiplies the two tensor factors: a ⊗ b -> ab, in the power-sum basis.
SymElement contract(const TensorElement& t);
/// Applies a linear map to the left or right factor.
template <class F>
TensorElement map_left(const TensorElement& t, F&& f);
template <class F>
TensorElement map_right(const TensorElement& t, F&& f);

/// Δf = f[X+Y]: the algebra morphism with p_n -> p_n ⊗ 1 + 1 ⊗ p_n.
/// Result in (p, p).
TensorElement coproduct_sum(const SymElement& f);
/// Δ*f = f[XY]: the algebra morphism with p_n -> p_n ⊗ p_n. Result in (p, p).
TensorElement coproduct_prod(const SymElement& f);

/// ε(f) = f(0, 0, ...), the degree-0 coefficient.
Rational counit(const SymElement& f);
/// ε*(f) = f(1, 0, 0, ...).
Rational counit_star(const SymElement& f);

/// The algebra morphism with h_i -> (-1)^i e_i; result in f's basis.
SymElement antipode(const SymElement& f);
/// Σ f_(1) · antipode(f_(2)); equals ε(f)·1 by the antipode axiom.
SymElement antipode_convolution(const SymElement& f);

/// Dual basis pairs accepted by cauchy_kernel. `PowerOverZ` is the pair
/// (p_λ, p_λ / z_λ), written in the (p, p) basis.
enum class DualPair { SS, HM, MH, PowerOverZ };
/// h_n[XY] written in the given dual pair.
TensorElement cauchy_kernel(int n, DualPair pair);
/// Accepts "s,s", "h,m", "m,h" or "p,p/z"; throws DomainError otherwise.
DualPair parse_dual_pair(std::string_view text);

/// f[k·g]: expand f in power sums and replace each p_n by g with every
/// p_m -> p_{nm}. Coefficients of g are constants under p_n. The positive
/// integer `alphabet_multiplicity` k repeats the inner alphabet k times.
/// Result in f's basis.
SymElement plethysm(const SymElement& f, const SymElement& g, int alphabet_multiplicity = 1);

// -- template definitions ---------------------------------------------------------

template <class F>
TensorElement map_left(const TensorElement& t, F&& f) {
  TensorElement out(BasisTag::P, BasisTag::P);
  const TensorElement pp = convert(t, BasisTag::P, BasisTag::P);
  for (const auto& [key, c] : pp.terms()) {
    const SymElement image = convert(f(basis_element(BasisTag::P, key.first)), BasisTag::P);
    for (const auto& [lambda, d] : image.terms()) out.add_term(lambda, key.second, c * d);
  }
  return out;
}

template <class F>
TensorElement map_right(const TensorElement& t, F&& f) {
  TensorElement out(BasisTag::P, BasisTag::P);
  const TensorElement pp = convert(t, BasisTag::P, BasisTag::P);
  for (const auto& [key, c] : pp.terms()) {
    const SymElement image = convert(f(basis_element(BasisTag::P, key.second)), BasisTag::P);
    for (const auto& [lambda, d] : image.terms()) out.add_term(key.first, lambda, c * d);
  }
  return out;
}

}  // namespace symf
