#include "symf/symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>

#include "symf/detail/once_cache.hpp"
#include "symf/error.hpp"

namespace symf {

std::string_view basis_name(BasisTag b) {
  switch (b) {
    case BasisTag::M: return "m";
    case BasisTag::E: return "e";
    case BasisTag::H: return "h";
    case BasisTag::P: return "p";
    case BasisTag::S: return "s";
  }
  return "?";
}

BasisTag parse_basis(std::string_view text) {
  if (text.size() == 1) {
    switch (text.front()) {
      case 'm': case 'M': return BasisTag::M;
      case 'e': case 'E': return BasisTag::E;
      case 'h': case 'H': return BasisTag::H;
      case 'p': case 'P': return BasisTag::P;
      case 's': case 'S': return BasisTag::S;
      default: break;
    }
  }
  throw SyntaxError("unknown basis '" + std::string(text) + "': expected one of m, e, h, p, s");
}

// -- SymElement ---------------------------------------------------------------

SymElement::SymElement(BasisTag basis, Terms terms) : basis_(basis), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

Rational SymElement::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymElement::add_term(const Partition& lambda, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<int> SymElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.size();
  if (terms_.rbegin()->first.size() != d) return std::nullopt;
  return d;
}

int SymElement::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

SymElement SymElement::degree_part(int n) const {
  SymElement out(basis_);
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() == n) out.terms_.emplace(lambda, c);
  }
  return out;
}

SymElement& SymElement::operator+=(const SymElement& other) {
  const SymElement rhs = other.basis_ == basis_ ? other : convert(other, basis_);
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, c);
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& other) {
  const SymElement rhs = other.basis_ == basis_ ? other : convert(other, basis_);
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, -c);
  return *this;
}

SymElement& SymElement::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= scalar;
  return *this;
}

// -- Transition matrices --------------------------------------------------------

namespace {

std::atomic<int> g_max_degree{20};

void check_degree(int n) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (n > g_max_degree.load()) {
    throw CapExceeded("degree " + std::to_string(n) + " exceeds the configured maximum " +
                      std::to_string(g_max_degree.load()) + " (SYMF_MAX_DEGREE)");
  }
}

void add_to(SparseVector& v, const Partition& key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = v.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  }
}

/// Product of power-sum expansions: p_ρ p_σ = p_{ρ∪σ}.
SparseVector multiply_power_sums(const SparseVector& a, const SparseVector& b) {
  SparseVector out;
  for (const auto& [rho, c] : a) {
    for (const auto& [sigma, d] : b) add_to(out, merge(rho, sigma), c * d);
  }
  return out;
}

/// h_k = Σ_{ρ⊢k} p_ρ / z_ρ and e_k = Σ_{ρ⊢k} (-1)^{k-ℓ(ρ)} p_ρ / z_ρ.
SparseVector single_row_expansion(BasisTag b, int k) {
  SparseVector out;
  for (const auto& rho : partition_list(k).items) {
    Rational c(Integer(1), z_value(rho));
    if (b == BasisTag::E && (k - rho.length()) % 2 != 0) c = -c;
    out.emplace(rho, c);
  }
  return out;
}

Matrix dense_rows(int n, const std::vector<SparseVector>& rows) {
  const auto& list = partition_list(n);
  Matrix m(list.items.size(), list.items.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [rho, c] : rows[i]) m(i, list.index_of(rho)) = c;
  }
  return m;
}

SparseVector sparse_row(const Matrix& m, std::size_t i, int n) {
  const auto& list = partition_list(n);
  SparseVector out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (sgn(m(i, j)) != 0) out.emplace(list.items[j], m(i, j));
  }
  return out;
}

/// Rows for the multiplicative families h and e: b_λ = b_{λ_1} b_{λ∖λ_1}.
Matrix multiplicative_to_power_sums(BasisTag b, int n) {
  const auto& list = partition_list(n);
  std::vector<SparseVector> rows;
  rows.reserve(list.items.size());
  for (const auto& lambda : list.items) {
    if (lambda.empty()) {
      rows.push_back({{Partition(), Rational(1)}});
      continue;
    }
    const int first = lambda[0];
    const Partition rest(std::vector<int>(lambda.vec().begin() + 1, lambda.vec().end()));
    const Matrix& lower = to_power_sums(b, rest.size());
    const SparseVector rest_row =
        sparse_row(lower, partition_list(rest.size()).index_of(rest), rest.size());
    rows.push_back(multiply_power_sums(single_row_expansion(b, first), rest_row));
  }
  return dense_rows(n, rows);
}

/// Expands det(h_{λ_i - i + j}) as a combination of products h_μ.
/// Dynamic programming over the set of columns already used; the sign of
/// a partial permutation is tracked through its inversion count.
SparseVector jacobi_trudi(const Partition& lambda) {
  const int len = lambda.length();
  using Products = std::map<Partition, Integer>;
  std::map<std::uint32_t, Products> states{{0u, Products{{Partition(), Integer(1)}}}};
  for (int i = 0; i < len; ++i) {
    std::map<std::uint32_t, Products> next;
    for (const auto& [mask, products] : states) {
      for (int j = 0; j < len; ++j) {
        if (mask & (1u << j)) continue;
        const int index = lambda[static_cast<std::size_t>(i)] - i + j;
        if (index < 0) continue;
        const std::uint32_t grown = mask | (1u << j);
        // Row r only reaches columns c >= r - λ_r, a bound increasing in r,
        // so columns below the next row's bound must already be used.
        if (i + 1 < len) {
          const int threshold = (i + 1) - lambda[static_cast<std::size_t>(i + 1)];
          if (threshold > 0) {
            const std::uint32_t below = (1u << threshold) - 1u;
            if ((grown & below) != below) continue;
          }
        }
        const bool negative = std::popcount(mask >> (j + 1)) % 2 == 1;
        auto& target = next[grown];
        for (const auto& [mu, c] : products) {
          Partition product = index > 0 ? merge(mu, Partition{index}) : mu;
          auto& slot = target[product];
          if (negative) {
            slot -= c;
          } else {
            slot += c;
          }
        }
      }
    }
    states = std::move(next);
  }
  SparseVector out;
  const std::uint32_t full = len == 0 ? 0u : (len >= 32 ? ~0u : (1u << len) - 1u);
  if (auto it = states.find(full); it != states.end()) {
    for (const auto& [mu, c] : it->second) add_to(out, mu, Rational(c));
  }
  return out;
}

Matrix schur_to_power_sums(int n) {
  const auto& list = partition_list(n);
  std::vector<SparseVector> jt;
  jt.reserve(list.items.size());
  for (const auto& lambda : list.items) jt.push_back(jacobi_trudi(lambda));
  return dense_rows(n, jt) * to_power_sums(BasisTag::H, n);
}

/// ⟨m_λ, h_μ⟩ = δ_{λμ} and ⟨p_ρ, p_σ⟩ = δ z_ρ give M = ((A Z)^{-1})^T,
/// where A holds the power-sum expansions of the h_μ.
Matrix monomial_to_power_sums(int n) {
  const auto& list = partition_list(n);
  Matrix az = to_power_sums(BasisTag::H, n);
  for (std::size_t j = 0; j < list.items.size(); ++j) {
    const Rational z(z_value(list.items[j]));
    for (std::size_t i = 0; i < az.rows(); ++i) az(i, j) *= z;
  }
  return inverse(az).transpose();
}

using CacheKey = std::pair<int, int>;  // (basis, degree)
detail::OnceCache<CacheKey, Matrix>& to_cache() {
  static detail::OnceCache<CacheKey, Matrix> cache;
  return cache;
}
detail::OnceCache<CacheKey, Matrix>& from_cache() {
  static detail::OnceCache<CacheKey, Matrix> cache;
  return cache;
}

}  // namespace

int max_degree() { return g_max_degree.load(); }

void set_max_degree(int n) {
  if (n < 0) throw DomainError("maximum degree must be nonnegative");
  g_max_degree.store(n);
}

const Matrix& to_power_sums(BasisTag b, int n) {
  check_degree(n);
  // Cached entries are never evicted, so the reference stays valid.
  return *to_cache().get({static_cast<int>(b), n}, [b, n]() -> Matrix {
    switch (b) {
      case BasisTag::P: return Matrix::identity(partition_list(n).items.size());
      case BasisTag::H:
      case BasisTag::E: return multiplicative_to_power_sums(b, n);
      case BasisTag::S: return schur_to_power_sums(n);
      case BasisTag::M: return monomial_to_power_sums(n);
    }
    throw InvariantViolation("unknown basis tag");
  });
}

const Matrix& from_power_sums(BasisTag b, int n) {
  check_degree(n);
  return *from_cache().get({static_cast<int>(b), n}, [b, n]() -> Matrix {
    if (b == BasisTag::P) return Matrix::identity(partition_list(n).items.size());
    return inverse(to_power_sums(b, n));
  });
}

// -- Ring operations --------------------------------------------------------------

namespace {

SparseVector power_sum_vector(const SymElement& f) {
  if (f.basis() == BasisTag::P) return f.terms();
  SparseVector out;
  for (const auto& [lambda, c] : f.terms()) {
    const int n = lambda.size();
    const Matrix& m = to_power_sums(f.basis(), n);
    const auto& list = partition_list(n);
    const auto row = m.row(list.index_of(lambda));
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(row[j]) != 0) add_to(out, list.items[j], c * row[j]);
    }
  }
  return out;
}

SymElement from_power_sum_vector(const SparseVector& v, BasisTag target) {
  if (target == BasisTag::P) return SymElement(BasisTag::P, v);
  SymElement out(target);
  for (const auto& [rho, c] : v) {
    const int n = rho.size();
    const Matrix& m = from_power_sums(target, n);
    const auto& list = partition_list(n);
    const auto row = m.row(list.index_of(rho));
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(row[j]) != 0) out.add_term(list.items[j], c * row[j]);
    }
  }
  return out;
}

}  // namespace

bool operator==(const SymElement& a, const SymElement& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return power_sum_vector(a) == power_sum_vector(b);
}

SymElement basis_element(BasisTag b, const Partition& lambda) {
  return SymElement(b, {{lambda, Rational(1)}});
}

SymElement convert(const SymElement& f, BasisTag target) {
  if (f.basis() == target) return f;
  return from_power_sum_vector(power_sum_vector(f), target);
}

SymElement multiply(const SymElement& f, const SymElement& g) {
  return SymElement(BasisTag::P, multiply_power_sums(power_sum_vector(f), power_sum_vector(g)));
}

Rational hall_inner(const SymElement& f, const SymElement& g) {
  const SparseVector a = power_sum_vector(f);
  const SparseVector b = power_sum_vector(g);
  Rational total = 0;
  for (const auto& [rho, c] : a) {
    auto it = b.find(rho);
    if (it != b.end()) total += c * it->second * z_value(rho);
  }
  return total;
}

SymElement omega(const SymElement& f) {
  SparseVector v = power_sum_vector(f);
  for (auto& [rho, c] : v) {
    if ((rho.size() - rho.length()) % 2 != 0) c = -c;
  }
  return from_power_sum_vector(v, f.basis());
}

SymElement skew_schur(const Partition& lambda, const Partition& mu) {
  SymElement out(BasisTag::S);
  if (!contains(lambda, mu)) return out;
  const SparseVector s_lambda = power_sum_vector(basis_element(BasisTag::S, lambda));
  const SparseVector s_mu = power_sum_vector(basis_element(BasisTag::S, mu));
  for (const auto& nu : partition_list(lambda.size() - mu.size()).items) {
    const SparseVector product =
        multiply_power_sums(s_mu, power_sum_vector(basis_element(BasisTag::S, nu)));
    Rational c = 0;
    for (const auto& [rho, a] : product) {
      auto it = s_lambda.find(rho);
      if (it != s_lambda.end()) c += a * it->second * z_value(rho);
    }
    out.add_term(nu, Rational(require_integer(c, "Littlewood-Richardson coefficient")));
  }
  return out;
}

namespace {

/// ρ ⊆ σ as multisets of parts; fills the complement.
bool sub_multiset(const Partition& rho, const Partition& sigma, std::vector<int>& rest) {
  rest.assign(sigma.vec().begin(), sigma.vec().end());
  for (int part : rho.parts()) {
    auto it = std::find(rest.begin(), rest.end(), part);
    if (it == rest.end()) return false;
    rest.erase(it);
  }
  return true;
}

}  // namespace

SymElement perp(const Partition& mu, const SymElement& f) {
  // Adjoint of p_ρ: p_ρ^⊥ p_σ = (z_σ / z_{σ∖ρ}) p_{σ∖ρ} when ρ ⊆ σ.
  const SparseVector s_mu = power_sum_vector(basis_element(BasisTag::S, mu));
  const SparseVector v = power_sum_vector(f);
  SparseVector out;
  std::vector<int> rest;
  for (const auto& [rho, a] : s_mu) {
    for (const auto& [sigma, b] : v) {
      if (!sub_multiset(rho, sigma, rest)) continue;
      const Partition remainder(rest);
      add_to(out, remainder, a * b * ratio(z_value(sigma), z_value(remainder)));
    }
  }
  return from_power_sum_vector(out, f.basis());
}

Polynomial evaluate(const SymElement& f, int variables) {
  if (variables < 0) throw DomainError("number of variables must be nonnegative");
  const auto m = static_cast<std::size_t>(variables);
  std::map<int, Polynomial> power_sums;
  auto power_sum = [&](int k) -> const Polynomial& {
    auto it = power_sums.find(k);
    if (it != power_sums.end()) return it->second;
    Polynomial p(m);
    for (std::size_t i = 0; i < m; ++i) {
      Exponents e(m, 0);
      e[i] = k;
      p.add_term(e, 1);
    }
    return power_sums.emplace(k, std::move(p)).first->second;
  };
  Polynomial out(m);
  for (const auto& [rho, c] : power_sum_vector(f)) {
    Polynomial term = Polynomial::constant(m, c);
    for (int part : rho.parts()) term = term * power_sum(part);
    out += term;
  }
  return out;
}

}  // namespace symf
