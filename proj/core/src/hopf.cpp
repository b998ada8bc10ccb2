#include "symf/hopf.hpp"

#include <map>
#include <tuple>
#include <vector>

#include "symf/error.hpp"

namespace symf {

Rational TensorElement::coefficient(const Partition& a, const Partition& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const Partition& a, const Partition& b, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  const TensorElement rhs = (other.left_ == left_ && other.right_ == right_)
                                ? other
                                : convert(other, left_, right_);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
  TensorElement neg = b;
  neg *= -1;
  return a + neg;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  const TensorElement x = convert(a, BasisTag::P, BasisTag::P);
  const TensorElement y = convert(b, BasisTag::P, BasisTag::P);
  TensorElement out(BasisTag::P, BasisTag::P);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      out.add_term(merge(kx.first, ky.first), merge(kx.second, ky.second), cx * cy);
    }
  }
  return out;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.left_ == b.left_ && a.right_ == b.right_) return a.terms_ == b.terms_;
  return convert(a, BasisTag::P, BasisTag::P).terms_ ==
         convert(b, BasisTag::P, BasisTag::P).terms_;
}

TensorElement tensor(const SymElement& a, const SymElement& b) {
  TensorElement out(a.basis(), b.basis());
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) out.add_term(la, lb, ca * cb);
  }
  return out;
}

namespace {

/// Memoized single-basis-vector conversions for one call.
class Expander {
 public:
  const SymElement::Terms& expand(BasisTag from, const Partition& lambda, BasisTag to) {
    auto key = std::make_tuple(static_cast<int>(from), lambda, static_cast<int>(to));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, convert(basis_element(from, lambda), to).terms()).first->second;
  }

 private:
  std::map<std::tuple<int, Partition, int>, SymElement::Terms> memo_;
};

}  // namespace

TensorElement convert(const TensorElement& t, BasisTag left, BasisTag right) {
  if (t.left_basis() == left && t.right_basis() == right) return t;
  Expander expander;
  TensorElement out(left, right);
  for (const auto& [key, c] : t.terms()) {
    const auto& a = expander.expand(t.left_basis(), key.first, left);
    const auto& b = expander.expand(t.right_basis(), key.second, right);
    for (const auto& [la, ca] : a) {
      for (const auto& [lb, cb] : b) out.add_term(la, lb, c * ca * cb);
    }
  }
  return out;
}

Rational tensor_inner(const TensorElement& t, const SymElement& g, const SymElement& h) {
  const TensorElement pp = convert(t, BasisTag::P, BasisTag::P);
  const SymElement gp = convert(g, BasisTag::P);
  const SymElement hp = convert(h, BasisTag::P);
  Rational total = 0;
  for (const auto& [key, c] : pp.terms()) {
    const Rational a = gp.coefficient(key.first);
    if (sgn(a) == 0) continue;
    const Rational b = hp.coefficient(key.second);
    if (sgn(b) == 0) continue;
    total += c * a * b * z_value(key.first) * z_value(key.second);
  }
  return total;
}

SymElement contract(const TensorElement& t) {
  const TensorElement pp = convert(t, BasisTag::P, BasisTag::P);
  SymElement out(BasisTag::P);
  for (const auto& [key, c] : pp.terms()) out.add_term(merge(key.first, key.second), c);
  return out;
}

TensorElement coproduct_sum(const SymElement& f) {
  // Δp_ρ = ∏ (p_{ρ_i} ⊗ 1 + 1 ⊗ p_{ρ_i}); grouping equal parts, choosing a
  // of the m copies of part k for the left factor contributes C(m, a).
  TensorElement out(BasisTag::P, BasisTag::P);
  const SymElement fp = convert(f, BasisTag::P);
  for (const auto& [rho, c] : fp.terms()) {
    std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
    for (int part : rho.parts()) {
      if (!groups.empty() && groups.back().first == part) {
        ++groups.back().second;
      } else {
        groups.emplace_back(part, 1);
      }
    }
    std::vector<int> chosen(groups.size(), 0);
    while (true) {
      std::vector<int> left;
      std::vector<int> right;
      Integer weight = 1;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto [part, mult] = groups[g];
        left.insert(left.end(), static_cast<std::size_t>(chosen[g]), part);
        right.insert(right.end(), static_cast<std::size_t>(mult - chosen[g]), part);
        weight *= binomial(static_cast<unsigned>(mult), static_cast<unsigned>(chosen[g]));
      }
      out.add_term(Partition(std::move(left)), Partition(std::move(right)), c * weight);
      std::size_t g = 0;
      while (g < groups.size() && chosen[g] == groups[g].second) chosen[g++] = 0;
      if (g == groups.size()) break;
      ++chosen[g];
    }
  }
  return out;
}

TensorElement coproduct_prod(const SymElement& f) {
  TensorElement out(BasisTag::P, BasisTag::P);
  const SymElement fp = convert(f, BasisTag::P);
  for (const auto& [rho, c] : fp.terms()) out.add_term(rho, rho, c);
  return out;
}

Rational counit(const SymElement& f) { return f.coefficient(Partition()); }

Rational counit_star(const SymElement& f) { return evaluate(f, 1).at_ones(); }

SymElement antipode(const SymElement& f) {
  SymElement p = convert(f, BasisTag::P);
  SymElement out(BasisTag::P);
  for (const auto& [rho, c] : p.terms()) out.add_term(rho, rho.length() % 2 == 0 ? c : -c);
  return convert(out, f.basis());
}

SymElement antipode_convolution(const SymElement& f) {
  return contract(map_right(coproduct_sum(f), [](const SymElement& x) { return antipode(x); }));
}

TensorElement cauchy_kernel(int n, DualPair pair) {
  if (n < 0) throw DomainError("cauchy_kernel: degree must be nonnegative");
  const TensorElement kernel = coproduct_prod(basis_element(BasisTag::H, Partition::row(n)));
  switch (pair) {
    case DualPair::SS: return convert(kernel, BasisTag::S, BasisTag::S);
    case DualPair::HM: return convert(kernel, BasisTag::H, BasisTag::M);
    case DualPair::MH: return convert(kernel, BasisTag::M, BasisTag::H);
    case DualPair::PowerOverZ: return kernel;
  }
  throw InvariantViolation("unknown dual pair");
}

DualPair parse_dual_pair(std::string_view text) {
  if (text == "s,s") return DualPair::SS;
  if (text == "h,m") return DualPair::HM;
  if (text == "m,h") return DualPair::MH;
  if (text == "p,p/z") return DualPair::PowerOverZ;
  throw DomainError("'" + std::string(text) +
                    "' is not a dual basis pair: expected s,s  h,m  m,h  or p,p/z");
}

SymElement plethysm(const SymElement& f, const SymElement& g, int alphabet_multiplicity) {
  if (alphabet_multiplicity < 1) {
    throw DomainError("plethysm: alphabet multiplicity must be a positive integer");
  }
  SymElement inner = convert(g, BasisTag::P);
  inner *= alphabet_multiplicity;

  std::map<int, SymElement> substituted;  // p_n[inner]
  auto power_sum_of_inner = [&](int n) -> const SymElement& {
    auto it = substituted.find(n);
    if (it != substituted.end()) return it->second;
    SymElement out(BasisTag::P);
    for (const auto& [sigma, d] : inner.terms()) out.add_term(scale_parts(sigma, n), d);
    return substituted.emplace(n, std::move(out)).first->second;
  };

  SymElement out(BasisTag::P);
  const SymElement fp = convert(f, BasisTag::P);
  for (const auto& [rho, c] : fp.terms()) {
    SymElement term = basis_element(BasisTag::P, Partition()) * c;
    for (int part : rho.parts()) term = multiply(term, power_sum_of_inner(part));
    out += term;
  }
  return convert(out, f.basis());
}

}  // namespace symf
