#include "symf/reps.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

#include "symf/detail/once_cache.hpp"
#include "symf/error.hpp"
#include "symf/symfunc.hpp"

namespace symf {

namespace {

std::atomic<int> g_cap_regular{6};
std::atomic<int> g_cap_young{6};
std::atomic<int> g_cap_specht{5};

// Products of generator matrices are memoized only up to this dimension;
// a 720-dimensional regular representation would otherwise hold dozens of
// dense 720x720 rational matrices.
constexpr std::size_t kMemoDimLimit = 256;

void check_cap(int n, int cap, std::string_view what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + " of degree " + std::to_string(n) +
                      " exceeds the configured cap " + std::to_string(cap));
  }
}

Matrix permutation_matrix(std::size_t dim, const std::vector<std::size_t>& image) {
  Matrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m(image[j], j) = 1;
  return m;
}

}  // namespace

RepCaps rep_caps() {
  return {g_cap_regular.load(), g_cap_young.load(), g_cap_specht.load()};
}

void set_rep_caps(const RepCaps& caps) {
  g_cap_regular.store(caps.regular);
  g_cap_young.store(caps.young_module);
  g_cap_specht.store(caps.specht_module);
}

// -- SubgroupSpec ---------------------------------------------------------------

SubgroupSpec SubgroupSpec::from_elements(int n, std::vector<Permutation> elements) {
  SubgroupSpec h;
  h.n_ = n;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& p : elements) {
    if (p.degree() != n) throw DomainError("subgroup element has the wrong degree");
  }
  h.elements_ = std::move(elements);
  if (!h.contains(Permutation::identity(n))) {
    throw DomainError("subgroup does not contain the identity");
  }
  for (const auto& a : h.elements_) {
    for (const auto& b : h.elements_) {
      if (!h.contains(a * b)) {
        throw DomainError("subgroup is not closed: " + to_string(a) + " * " + to_string(b) +
                          " is missing");
      }
    }
  }
  return h;
}

SubgroupSpec SubgroupSpec::young(const std::vector<int>& composition) {
  int n = 0;
  for (int c : composition) {
    if (c < 0) throw DomainError("Young subgroup blocks must be nonnegative");
    n += c;
  }
  // Products of all block permutations, built block by block.
  std::vector<std::vector<int>> words{{}};
  int offset = 0;
  for (int c : composition) {
    std::vector<std::vector<int>> next;
    for (const auto& block : all_permutations(c)) {
      for (const auto& w : words) {
        auto grown = w;
        for (int v : block.word()) grown.push_back(v + offset);
        next.push_back(std::move(grown));
      }
    }
    words = std::move(next);
    offset += c;
  }
  SubgroupSpec h;
  h.n_ = n;
  for (auto& w : words) h.elements_.emplace_back(std::move(w));
  std::sort(h.elements_.begin(), h.elements_.end());
  return h;
}

SubgroupSpec SubgroupSpec::symmetric(int n) { return young({n}); }

bool SubgroupSpec::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

// -- MatrixRep --------------------------------------------------------------------

struct MatrixRep::Memo {
  detail::OnceCache<Permutation, Matrix> cache;
};

MatrixRep::MatrixRep(int n, std::size_t dim, std::vector<Matrix> generators)
    : n_(n), dim_(dim), generators_(std::move(generators)), memo_(std::make_shared<Memo>()) {
  if (n < 1) throw DomainError("representation degree must be at least 1");
  if (generators_.size() != static_cast<std::size_t>(n - 1)) {
    throw DomainError("need one generator matrix per adjacent transposition");
  }
  for (const auto& g : generators_) {
    if (g.rows() != dim || g.cols() != dim) {
      throw DomainError("generator matrix has the wrong size");
    }
  }
}

const Matrix& MatrixRep::matrix(const Permutation& pi) const {
  if (pi.degree() != n_) {
    throw DomainError("permutation degree " + std::to_string(pi.degree()) +
                      " does not match the representation degree " + std::to_string(n_));
  }
  auto compute = [this, &pi]() {
    Matrix m = Matrix::identity(dim_);
    for (int i : adjacent_word(pi)) m = m * generators_[static_cast<std::size_t>(i - 1)];
    return m;
  };
  if (dim_ > kMemoDimLimit) {
    // Per-thread scratch keeps the returned reference valid until the next
    // call from the same thread.
    thread_local Matrix scratch;
    scratch = compute();
    return scratch;
  }
  return *memo_->cache.get(pi, compute);
}

// -- SubgroupRep --------------------------------------------------------------------

SubgroupRep::SubgroupRep(SubgroupSpec group, std::size_t dim,
                         std::map<Permutation, Matrix> matrices)
    : group_(std::move(group)), dim_(dim), matrices_(std::move(matrices)) {
  if (matrices_.size() != group_.order()) {
    throw DomainError("subgroup representation needs one matrix per element");
  }
  for (const auto& [h, m] : matrices_) {
    if (!group_.contains(h)) throw DomainError(to_string(h) + " is not in the subgroup");
    if (m.rows() != dim_ || m.cols() != dim_) throw DomainError("matrix has the wrong size");
  }
}

SubgroupRep SubgroupRep::trivial(const SubgroupSpec& group) {
  std::map<Permutation, Matrix> matrices;
  for (const auto& h : group.elements()) matrices.emplace(h, Matrix::identity(1));
  return SubgroupRep(group, 1, std::move(matrices));
}

SubgroupRep SubgroupRep::sign(const SubgroupSpec& group) {
  std::map<Permutation, Matrix> matrices;
  for (const auto& h : group.elements()) {
    matrices.emplace(h, Matrix::identity(1) * Rational(h.sign()));
  }
  return SubgroupRep(group, 1, std::move(matrices));
}

const Matrix& SubgroupRep::matrix(const Permutation& h) const {
  auto it = matrices_.find(h);
  if (it == matrices_.end()) throw DomainError(to_string(h) + " is not in the subgroup");
  return it->second;
}

std::map<Permutation, Rational> SubgroupRep::character() const {
  std::map<Permutation, Rational> chi;
  for (const auto& [h, m] : matrices_) chi.emplace(h, m.trace());
  return chi;
}

Rational subgroup_inner(const SubgroupSpec& group, const std::map<Permutation, Rational>& phi,
                        const std::map<Permutation, Rational>& chi) {
  Rational total = 0;
  for (const auto& h : group.elements()) total += phi.at(h) * chi.at(h.inverse());
  return total / static_cast<long>(group.order());
}

// -- Classical representations -------------------------------------------------------

ClassicalKind parse_classical_kind(std::string_view text) {
  if (text == "trivial") return ClassicalKind::Trivial;
  if (text == "sign") return ClassicalKind::Sign;
  if (text == "defining") return ClassicalKind::Defining;
  if (text == "regular") return ClassicalKind::Regular;
  if (text == "standard") return ClassicalKind::Standard;
  throw SyntaxError("unknown representation '" + std::string(text) +
                    "': expected trivial, sign, defining, regular or standard");
}

MatrixRep classical_rep(ClassicalKind kind, int n) {
  if (n < 1) throw DomainError("classical_rep: n must be at least 1");
  std::vector<Matrix> gens;
  std::size_t dim = 0;
  const auto un = static_cast<std::size_t>(n);
  switch (kind) {
    case ClassicalKind::Trivial:
    case ClassicalKind::Sign:
      dim = 1;
      for (int i = 1; i < n; ++i) {
        gens.push_back(Matrix::identity(1) * Rational(kind == ClassicalKind::Sign ? -1 : 1));
      }
      break;
    case ClassicalKind::Defining:
      dim = un;
      for (int i = 1; i < n; ++i) {
        const Permutation s = Permutation::adjacent(n, i);
        std::vector<std::size_t> image(un);
        for (std::size_t j = 0; j < un; ++j) {
          image[j] = static_cast<std::size_t>(s(static_cast<int>(j) + 1) - 1);
        }
        gens.push_back(permutation_matrix(dim, image));
      }
      break;
    case ClassicalKind::Regular: {
      check_cap(n, g_cap_regular.load(), "regular representation");
      const auto elements = all_permutations(n);
      dim = elements.size();
      std::map<Permutation, std::size_t> index;
      for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);
      for (int i = 1; i < n; ++i) {
        const Permutation s = Permutation::adjacent(n, i);
        std::vector<std::size_t> image(dim);
        for (std::size_t k = 0; k < dim; ++k) image[k] = index.at(s * elements[k]);
        gens.push_back(permutation_matrix(dim, image));
      }
      break;
    }
    case ClassicalKind::Standard:
      // Column j holds e_{π(j+1)} - e_{π(1)} in the basis v_k = e_{k+1} - e_1,
      // whose coordinates are the entries 2..n of the vector.
      dim = un - 1;
      for (int i = 1; i < n; ++i) {
        const Permutation s = Permutation::adjacent(n, i);
        Matrix m(dim, dim);
        for (int j = 1; j < n; ++j) {
          const int plus = s(j + 1);
          const int minus = s(1);
          if (plus >= 2) m(static_cast<std::size_t>(plus - 2), static_cast<std::size_t>(j - 1)) += 1;
          if (minus >= 2) m(static_cast<std::size_t>(minus - 2), static_cast<std::size_t>(j - 1)) -= 1;
        }
        gens.push_back(std::move(m));
      }
      break;
  }
  return MatrixRep(n, dim, std::move(gens));
}

// -- Characters and decomposition -------------------------------------------------------

ClassFunction character_of(const MatrixRep& rep) {
  ClassFunction chi(rep.degree());
  for (const auto& mu : partition_list(rep.degree()).items) {
    chi.set(mu, rep.dim() == 0 ? Rational(0) : rep.matrix(class_representative(mu)).trace());
  }
  return chi;
}

PartitionMap<Integer> decompose(const ClassFunction& chi) {
  PartitionMap<Integer> out;
  for (const auto& lambda : partition_list(chi.degree()).items) {
    const Integer m = require_integer(char_inner(chi, irreducible_character(lambda)),
                                      "multiplicity of S^" + to_string(lambda));
    if (m < 0) throw InvariantViolation("negative multiplicity of S^" + to_string(lambda));
    if (m != 0) out.emplace(lambda, m);
  }
  return out;
}

PartitionMap<Integer> decompose(const MatrixRep& rep) { return decompose(character_of(rep)); }

bool satisfies_coxeter_relations(const MatrixRep& rep) {
  const auto& s = rep.generators();
  const Matrix id = Matrix::identity(rep.dim());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] * s[i] != id) return false;
    if (i + 1 < s.size()) {
      const Matrix braid = s[i] * s[i + 1];
      if (braid * braid * braid != id) return false;
    }
    for (std::size_t j = i + 2; j < s.size(); ++j) {
      if (s[i] * s[j] != s[j] * s[i]) return false;
    }
  }
  return true;
}

// -- Young permutation modules ---------------------------------------------------------

namespace {

using Rows = std::vector<std::vector<int>>;

void tabloids_rec(const Partition& lambda, std::size_t row, std::vector<int>& remaining,
                  Rows& current, std::vector<Rows>& out) {
  if (row == static_cast<std::size_t>(lambda.length())) {
    out.push_back(current);
    return;
  }
  const auto k = static_cast<std::size_t>(lambda[row]);
  // Combinations of `remaining` of size k, in lexicographic order.
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t n = remaining.size();
  while (true) {
    std::vector<int> chosen;
    std::vector<int> rest;
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p < k && pick[p] == i) {
        chosen.push_back(remaining[i]);
        ++p;
      } else {
        rest.push_back(remaining[i]);
      }
    }
    current.push_back(chosen);
    tabloids_rec(lambda, row + 1, rest, current, out);
    current.pop_back();
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

Rows act_on_rows(const Permutation& sigma, const Rows& rows, bool sort_rows) {
  Rows out = rows;
  for (auto& row : out) {
    for (int& v : row) v = sigma(v);
    if (sort_rows) std::sort(row.begin(), row.end());
  }
  return out;
}

}  // namespace

std::vector<Tableau> young_module_basis(const Partition& lambda) {
  std::vector<int> remaining(static_cast<std::size_t>(lambda.size()));
  std::iota(remaining.begin(), remaining.end(), 1);
  Rows current;
  std::vector<Rows> all;
  tabloids_rec(lambda, 0, remaining, current, all);
  std::vector<Tableau> out;
  out.reserve(all.size());
  for (auto& rows : all) out.emplace_back(SkewShape(lambda), std::move(rows));
  return out;
}

Polynomial injective_weight(const Tableau& t, int variables) {
  Exponents e(static_cast<std::size_t>(variables), 0);
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (int v : t.rows()[r]) {
      if (v < 1 || v > variables) throw DomainError("tableau entry exceeds the variable count");
      e[static_cast<std::size_t>(v - 1)] += static_cast<int>(r);
    }
  }
  return Polynomial::monomial(std::move(e));
}

MatrixRep young_module(const Partition& lambda) {
  const int n = lambda.size();
  if (n < 1) throw DomainError("young_module: λ must be a partition of n ≥ 1");
  check_cap(n, g_cap_young.load(), "Young module");
  const auto basis = young_module_basis(lambda);
  std::map<Rows, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k].rows(), k);
  std::vector<Matrix> gens;
  for (int i = 1; i < n; ++i) {
    const Permutation s = Permutation::adjacent(n, i);
    std::vector<std::size_t> image(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      image[k] = index.at(act_on_rows(s, basis[k].rows(), true));
    }
    gens.push_back(permutation_matrix(basis.size(), image));
  }
  return MatrixRep(n, basis.size(), std::move(gens));
}

// -- Specht modules ----------------------------------------------------------------------

Polynomial specht_polynomial(const Tableau& t, int variables) {
  if (!t.shape().is_straight()) throw DomainError("specht_polynomial needs a straight shape");
  const auto m = static_cast<std::size_t>(variables);
  std::set<int> seen;
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (v < 1 || v > variables || !seen.insert(v).second) {
        throw DomainError("specht_polynomial needs an injective tableau with entries 1.." +
                          std::to_string(variables));
      }
    }
  }
  Polynomial result = Polynomial::constant(m, 1);
  const int width = t.shape().outer[0];
  for (int c = 0; c < width; ++c) {
    std::vector<int> column;  // top to bottom; row r carries exponent r
    for (const auto& row : t.rows()) {
      if (static_cast<int>(row.size()) > c) column.push_back(row[static_cast<std::size_t>(c)]);
    }
    // Σ_τ sgn(τ) ∏_r x_{column[τ(r)]}^r, a Vandermonde determinant.
    Polynomial factor(m);
    std::vector<std::size_t> tau(column.size());
    std::iota(tau.begin(), tau.end(), 0);
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < tau.size(); ++a) {
        for (std::size_t b = a + 1; b < tau.size(); ++b) inversions += tau[a] > tau[b];
      }
      Exponents e(m, 0);
      for (std::size_t r = 0; r < tau.size(); ++r) {
        e[static_cast<std::size_t>(column[tau[r]] - 1)] += static_cast<int>(r);
      }
      factor.add_term(e, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(tau.begin(), tau.end()));
    result = result * factor;
  }
  return result;
}

std::vector<std::pair<Tableau, Polynomial>> specht_basis(const Partition& lambda) {
  std::vector<std::pair<Tableau, Polynomial>> out;
  for (auto& t : standard_tableaux(lambda)) {
    Polynomial a = specht_polynomial(t, lambda.size());
    out.emplace_back(std::move(t), std::move(a));
  }
  return out;
}

MatrixRep specht_module(const Partition& lambda) {
  const int n = lambda.size();
  if (n < 1) throw DomainError("specht_module: λ must be a partition of n ≥ 1");
  check_cap(n, g_cap_specht.load(), "Specht module");
  const auto basis = specht_basis(lambda);
  const std::size_t dim = basis.size();

  // Monomial coordinates of the basis polynomials.
  std::map<Exponents, std::size_t> monomials;
  for (const auto& [t, a] : basis) {
    for (const auto& [e, c] : a.terms()) monomials.try_emplace(e, monomials.size());
  }
  Matrix coords(monomials.size(), dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (const auto& [e, c] : basis[j].second.terms()) coords(monomials.at(e), j) = c;
  }
  if (rank(coords) != dim) {
    throw InvariantViolation("Specht polynomials of standard tableaux are dependent for " +
                             to_string(lambda));
  }

  std::vector<Matrix> gens;
  for (int i = 1; i < n; ++i) {
    const Permutation s = Permutation::adjacent(n, i);
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const Tableau moved(SkewShape(lambda), act_on_rows(s, basis[j].first.rows(), false));
      const Polynomial image = specht_polynomial(moved, n);
      std::vector<Rational> rhs(monomials.size());
      for (const auto& [e, c] : image.terms()) {
        auto it = monomials.find(e);
        if (it == monomials.end()) {
          throw InvariantViolation("σ·a_t left the span of the standard basis for " +
                                   to_string(lambda));
        }
        rhs[it->second] = c;
      }
      const auto x = solve(coords, rhs);
      if (!x) {
        throw InvariantViolation("singular solve while building S^" + to_string(lambda));
      }
      for (std::size_t k = 0; k < dim; ++k) m(k, j) = (*x)[k];
    }
    gens.push_back(std::move(m));
  }
  return MatrixRep(n, dim, std::move(gens));
}

// -- Induction and restriction -----------------------------------------------------------

std::vector<Permutation> default_transversal(const SubgroupSpec& group) {
  std::set<Permutation> covered;
  std::vector<Permutation> out;
  for (const auto& g : all_permutations(group.degree())) {
    if (covered.count(g)) continue;
    out.push_back(g);
    for (const auto& h : group.elements()) covered.insert(g * h);
  }
  return out;
}

Matrix induced_matrix(const SubgroupRep& rep, const std::vector<Permutation>& transversal,
                      const Permutation& g) {
  const std::size_t k = transversal.size();
  const std::size_t d = rep.dim();
  Matrix out(k * d, k * d);
  for (std::size_t i = 0; i < k; ++i) {
    const Permutation left = transversal[i].inverse() * g;
    for (std::size_t j = 0; j < k; ++j) {
      const Permutation h = left * transversal[j];
      if (!rep.group().contains(h)) continue;
      const Matrix& block = rep.matrix(h);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) out(i * d + a, j * d + b) = block(a, b);
      }
    }
  }
  return out;
}

MatrixRep induce(const SubgroupRep& rep, std::optional<std::vector<Permutation>> transversal) {
  const SubgroupSpec& group = rep.group();
  const int n = group.degree();
  std::vector<Permutation> t = transversal ? std::move(*transversal) : default_transversal(group);
  const Integer index = factorial(static_cast<unsigned>(n)) / static_cast<unsigned long>(group.order());
  if (Integer(static_cast<unsigned long>(t.size())) != index) {
    throw DomainError("transversal must have [S_n : H] = " + to_string(index) + " elements");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].degree() != n) throw DomainError("transversal element has the wrong degree");
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (group.contains(t[i].inverse() * t[j])) {
        throw DomainError("transversal elements " + to_string(t[i]) + " and " +
                          to_string(t[j]) + " lie in the same coset");
      }
    }
  }
  std::vector<Matrix> gens;
  for (int i = 1; i < n; ++i) gens.push_back(induced_matrix(rep, t, Permutation::adjacent(n, i)));
  return MatrixRep(n, t.size() * rep.dim(), std::move(gens));
}

SubgroupRep restrict(const MatrixRep& rep, const SubgroupSpec& group) {
  if (group.degree() != rep.degree()) {
    throw DomainError("subgroup degree does not match the representation degree");
  }
  std::map<Permutation, Matrix> matrices;
  for (const auto& h : group.elements()) matrices.emplace(h, rep.matrix(h));
  return SubgroupRep(group, rep.dim(), std::move(matrices));
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
  if (a.degree() != b.degree()) throw DomainError("direct_sum: representations of different degree");
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    gens.push_back(direct_sum(a.generators()[i], b.generators()[i]));
  }
  return MatrixRep(a.degree(), a.dim() + b.dim(), std::move(gens));
}

MatrixRep tensor_product(const MatrixRep& a, const MatrixRep& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("tensor_product: representations of different degree");
  }
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    gens.push_back(kron(a.generators()[i], b.generators()[i]));
  }
  return MatrixRep(a.degree(), a.dim() * b.dim(), std::move(gens));
}

// -- Exterior square and GL characters ----------------------------------------------------

Partition square_class(const Partition& mu) {
  std::vector<int> parts;
  for (int len : mu.parts()) {
    if (len % 2 == 1) {
      parts.push_back(len);
    } else {
      parts.push_back(len / 2);
      parts.push_back(len / 2);
    }
  }
  return Partition::from_unsorted(std::move(parts));
}

ClassFunction exterior_square_character(const ClassFunction& chi) {
  ClassFunction out(chi.degree());
  for (const auto& [mu, v] : chi.values()) out.set(mu, (v * v - chi(square_class(mu))) / 2);
  return out;
}

Polynomial gl_character(const Partition& lambda, int m) {
  return evaluate(basis_element(BasisTag::S, lambda), m);
}

Integer gl_dimension(const Partition& lambda, int m) {
  if (m < 0) throw DomainError("gl_dimension: m must be nonnegative");
  return count_ssyt(SkewShape(lambda), m);
}

bool schur_weyl_check(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("schur_weyl_check: n and m must be nonnegative");
  if (n > 6 || m > 6) throw CapExceeded("schur_weyl_check supports n, m ≤ 6");
  Integer total = 0;
  for (const auto& lambda : partition_list(n).items) {
    if (lambda.length() > m) continue;
    total += f_lambda(lambda) * gl_dimension(lambda, m);
  }
  return total == power(Integer(m), static_cast<unsigned>(n));
}

}  // namespace symf
