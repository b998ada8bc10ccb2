#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "symf/error.hpp"
#include "symf/reps.hpp"

using namespace symf;

namespace {

Matrix rows(std::vector<std::vector<Rational>> r) { return Matrix::from_rows(r); }

// Zero-based index into the variables.
Polynomial x(std::size_t vars, std::size_t i) { return Polynomial::variable(vars, i + 1); }

/// Homomorphism check over all pairs of S_n.
bool is_homomorphism(const MatrixRep& rep) {
  const auto all = all_permutations(rep.degree());
  if (rep.matrix(Permutation::identity(rep.degree())) != Matrix::identity(rep.dim())) return false;
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (rep.matrix(a * b) != rep.matrix(a) * rep.matrix(b)) return false;
    }
  }
  return true;
}

/// ∧²V computed from explicit matrices on the basis e_i ∧ e_j (i < j).
Rational exterior_trace(const Matrix& m) {
  Rational tr = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.rows(); ++j) tr += m(i, i) * m(j, j) - m(i, j) * m(j, i);
  }
  return tr;
}

}  // namespace

TEST_CASE("defining and standard representations of S_3") {
  const MatrixRep def = classical_rep(ClassicalKind::Defining, 3);
  CHECK(def.matrix(Permutation({2, 1, 3})) == rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK(def.matrix(Permutation({2, 3, 1})) == rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  const MatrixRep std3 = classical_rep(ClassicalKind::Standard, 3);
  CHECK(std3.matrix(Permutation({2, 1, 3})) == rows({{-1, -1}, {0, 1}}));
  CHECK(std3.dim() == 2);
  CHECK(decompose(std3) == PartitionMap<Integer>{{Partition{2, 1}, 1}});
  CHECK(decompose(def) == PartitionMap<Integer>{{Partition{3}, 1}, {Partition{2, 1}, 1}});
}

TEST_CASE("classical representations are homomorphisms with the expected characters") {
  for (int n = 1; n <= 4; ++n) {
    for (ClassicalKind k : {ClassicalKind::Trivial, ClassicalKind::Sign, ClassicalKind::Defining,
                            ClassicalKind::Regular, ClassicalKind::Standard}) {
      const MatrixRep rep = classical_rep(k, n);
      CHECK(satisfies_coxeter_relations(rep));
      CHECK(is_homomorphism(rep));
    }
    const ClassFunction def = character_of(classical_rep(ClassicalKind::Defining, n));
    const ClassFunction reg = character_of(classical_rep(ClassicalKind::Regular, n));
    for (const auto& mu : partitions_of(n)) {
      CHECK(def(mu) == mu.multiplicity(1));
      CHECK(reg(mu) == (mu == Partition::column(n) ? Rational(oracle::fact(n)) : Rational(0)));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    PartitionMap<Integer> expected;
    for (const auto& l : partitions_of(n)) expected.emplace(l, oracle::hook_length(l.vec()));
    CHECK(decompose(classical_rep(ClassicalKind::Regular, n)) == expected);
  }
  CHECK(parse_classical_kind("regular") == ClassicalKind::Regular);
  CHECK_THROWS_AS(parse_classical_kind("adjoint"), SyntaxError);
  CHECK_THROWS_AS(classical_rep(ClassicalKind::Regular, 7), CapExceeded);
  CHECK_THROWS_AS(classical_rep(ClassicalKind::Trivial, 0), DomainError);
}

TEST_CASE("Coxeter relations reject a non-representation") {
  // s_1 -> [[0,1],[1,0]], s_2 -> diag(1,-1) breaks the braid relation.
  const MatrixRep bad(3, 2, {rows({{0, 1}, {1, 0}}), rows({{1, 0}, {0, -1}})});
  CHECK_FALSE(satisfies_coxeter_relations(bad));
  CHECK_THROWS_AS(MatrixRep(3, 2, {rows({{0, 1}, {1, 0}})}), DomainError);
  CHECK_THROWS_AS(MatrixRep(2, 2, {rows({{1}})}), DomainError);
}

TEST_CASE("injective tableau weights and Young module bases") {
  const Tableau t(SkewShape(Partition{2, 1}), {{1, 3}, {2}});
  CHECK(injective_weight(t, 3) == Polynomial::monomial({0, 1, 0}));
  const Tableau u(SkewShape(Partition{2, 2}), {{1, 2}, {3, 4}});
  CHECK(injective_weight(u, 4) == Polynomial::monomial({0, 0, 1, 1}));
  const auto basis = young_module_basis(Partition{2, 1});
  std::vector<oracle::Grid> got;
  for (const auto& b : basis) got.push_back(b.rows());
  CHECK(got == std::vector<oracle::Grid>{{{1, 2}, {3}}, {{1, 3}, {2}}, {{2, 3}, {1}}});
  // Size of the basis is the multinomial coefficient n!/∏λ_i!.
  const Partition lambda{3, 2, 1};
  CHECK(young_module_basis(lambda).size() == 60);
}

TEST_CASE("Young permutation modules follow Young's rule") {
  const PartitionMap<Integer> expected = {{Partition{3, 2, 1}, 1}, {Partition{3, 3}, 1},
                                          {Partition{4, 2}, 2},    {Partition{4, 1, 1}, 1},
                                          {Partition{5, 1}, 2},    {Partition{6}, 1}};
  const MatrixRep h321 = young_module(Partition{3, 2, 1});
  CHECK(h321.dim() == 60);
  CHECK(decompose(h321) == expected);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const MatrixRep rep = young_module(mu);
      CHECK(satisfies_coxeter_relations(rep));
      const auto dec = decompose(rep);
      for (const auto& lambda : partitions_of(n)) {
        auto it = dec.find(lambda);
        CHECK((it == dec.end() ? Integer(0) : it->second) == oracle::brute_kostka(lambda.vec(), mu.vec()));
      }
    }
  }
  CHECK_THROWS_AS(young_module(Partition::row(7)), CapExceeded);
}

TEST_CASE("Specht polynomials") {
  const std::size_t v = 4;
  const Tableau t(SkewShape(Partition{2, 2}), {{1, 2}, {3, 4}});
  CHECK(specht_polynomial(t, 4) == (x(v, 2) - x(v, 0)) * (x(v, 3) - x(v, 1)));
  const auto basis = specht_basis(Partition{2, 1});
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].second == x(3, 2) - x(3, 0));
  CHECK(basis[1].second == x(3, 1) - x(3, 0));
  // A single column gives the Vandermonde product ∏_{i<j} (x_j - x_i).
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<int>> col;
    for (int i = 1; i <= n; ++i) col.push_back({i});
    const auto un = static_cast<std::size_t>(n);
    Polynomial vdm = Polynomial::constant(un, 1);
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = i + 1; j < un; ++j) vdm = vdm * (x(un, j) - x(un, i));
    }
    CHECK(specht_polynomial(Tableau(SkewShape(Partition::column(n)), col), n) == vdm);
    // σ·Δ = sgn(σ) Δ
    for (const auto& sigma : all_permutations(n)) CHECK(vdm.permute(sigma) == vdm * Rational(sigma.sign()));
  }
  CHECK_THROWS_AS(specht_polynomial(Tableau(SkewShape(Partition{2}), {{1, 1}}), 2), DomainError);
}

TEST_CASE("Specht modules realize the irreducible characters") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const MatrixRep rep = specht_module(lambda);
      CHECK(rep.dim() == static_cast<std::size_t>(oracle::hook_length(lambda.vec()).get_ui()));
      CHECK(satisfies_coxeter_relations(rep));
      const ClassFunction chi = character_of(rep);
      for (const auto& mu : partitions_of(n)) {
        CHECK(chi(mu) == Rational(oracle::murnaghan_nakayama(lambda.vec(), mu.vec())));
      }
      CHECK(char_inner(chi, chi) == 1);
    }
  }
  CHECK(is_homomorphism(specht_module(Partition{2, 1, 1})));
  CHECK_THROWS_AS(specht_module(Partition::row(6)), CapExceeded);
  // Caps are configurable.
  const RepCaps saved = rep_caps();
  set_rep_caps({saved.regular, saved.young_module, 3});
  CHECK_THROWS_AS(specht_module(Partition{3, 1}), CapExceeded);
  set_rep_caps(saved);
  CHECK_NOTHROW(specht_module(Partition{3, 1}));
}

TEST_CASE("subgroups") {
  const SubgroupSpec y = SubgroupSpec::young({2, 1});
  CHECK(y.order() == 2);
  CHECK(y.contains(Permutation({2, 1, 3})));
  CHECK(SubgroupSpec::young({2, 2}).order() == 4);
  CHECK(SubgroupSpec::symmetric(4).order() == 24);
  CHECK_THROWS_AS(SubgroupSpec::from_elements(3, {Permutation({2, 3, 1})}), DomainError);
  CHECK_THROWS_AS(SubgroupSpec::from_elements(3, {Permutation::identity(3), Permutation({2, 3, 1})}),
                  DomainError);
  const SubgroupSpec c3 = SubgroupSpec::from_elements(
      3, {Permutation::identity(3), Permutation({2, 3, 1}), Permutation({3, 1, 2})});
  CHECK(c3.order() == 3);
  CHECK(default_transversal(c3).size() == 2);
}

TEST_CASE("induction from {ε, (2 3)} with transversal {ε, (1 2), (1 3)}") {
  const SubgroupSpec h = SubgroupSpec::from_elements(3, {Permutation::identity(3), Permutation({1, 3, 2})});
  const std::vector<Permutation> t = {Permutation::identity(3), Permutation({2, 1, 3}), Permutation({3, 2, 1})};
  const MatrixRep ind = induce(SubgroupRep::trivial(h), t);
  CHECK(ind.matrix(Permutation({2, 1, 3})) == rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  const ClassFunction chi = character_of(ind);
  CHECK(chi(Partition{1, 1, 1}) == 3);
  CHECK(chi(Partition{2, 1}) == 1);
  CHECK(chi(Partition{3}) == 0);
  CHECK(is_homomorphism(ind));
  // Wrong size and repeated cosets are rejected.
  CHECK_THROWS_AS(induce(SubgroupRep::trivial(h), std::vector<Permutation>{t[0], t[1]}), DomainError);
  CHECK_THROWS_AS(induce(SubgroupRep::trivial(h), std::vector<Permutation>{t[0], t[1], Permutation({1, 3, 2})}),
                  DomainError);
}

TEST_CASE("Frobenius reciprocity for Young subgroups of S_4") {
  const std::vector<std::vector<int>> compositions = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}, {1, 3}, {1, 2, 1}};
  for (const auto& comp : compositions) {
    const SubgroupSpec h = SubgroupSpec::young(comp);
    for (const auto& y : {SubgroupRep::trivial(h), SubgroupRep::sign(h)}) {
      const MatrixRep ind = induce(y);
      CHECK(ind.dim() == static_cast<std::size_t>(24 / h.order()));
      CHECK(satisfies_coxeter_relations(ind));
      const ClassFunction ind_chi = character_of(ind);
      for (const auto& lambda : partitions_of(4)) {
        const MatrixRep irr = specht_module(lambda);
        const Rational up = char_inner(ind_chi, character_of(irr));
        const Rational down = subgroup_inner(h, y.character(), restrict(irr, h).character());
        CHECK(up == down);
      }
    }
  }
}

TEST_CASE("induction is multiplicative on characteristics") {
  // ch(Ind_{S_a × S_b}(S^μ ⊗ S^ν)) = s_μ s_ν, here for trivial ⊗ sign.
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; a + b <= 5; ++b) {
      const SubgroupSpec h = SubgroupSpec::young({a, b});
      std::map<Permutation, Matrix> m;
      for (const auto& g : h.elements()) {
        int sign_b = 1;
        // Sign of the part acting on the last b points.
        std::vector<int> tail(g.word().begin() + a, g.word().end());
        for (std::size_t i = 0; i < tail.size(); ++i) {
          for (std::size_t j = i + 1; j < tail.size(); ++j) sign_b *= tail[i] > tail[j] ? -1 : 1;
        }
        m.emplace(g, Matrix::identity(1) * Rational(sign_b));
      }
      const MatrixRep ind = induce(SubgroupRep(h, 1, m));
      const SymElement expected = multiply(basis_element(BasisTag::H, Partition{a}), basis_element(BasisTag::E, Partition{b}));
      CHECK(frobenius_ch(character_of(ind)) == expected);
    }
  }
}

TEST_CASE("restriction, sums and tensor products") {
  const MatrixRep def = classical_rep(ClassicalKind::Defining, 4);
  const MatrixRep sgn = classical_rep(ClassicalKind::Sign, 4);
  const SubgroupRep r = restrict(def, SubgroupSpec::young({2, 2}));
  CHECK(r.dim() == 4);
  CHECK(r.matrix(Permutation({2, 1, 3, 4})) == def.matrix(Permutation({2, 1, 3, 4})));
  CHECK_THROWS_AS(restrict(def, SubgroupSpec::young({2, 1})), DomainError);
  CHECK_THROWS_AS(r.matrix(Permutation({3, 2, 1, 4})), DomainError);

  const MatrixRep sum = direct_sum(def, sgn);
  const MatrixRep prod = tensor_product(def, sgn);
  CHECK(sum.dim() == 5);
  CHECK(prod.dim() == 4);
  CHECK(satisfies_coxeter_relations(sum));
  CHECK(satisfies_coxeter_relations(prod));
  for (const auto& mu : partitions_of(4)) {
    CHECK(character_of(sum)(mu) == character_of(def)(mu) + character_of(sgn)(mu));
    CHECK(character_of(prod)(mu) == character_of(def)(mu) * character_of(sgn)(mu));
  }
  CHECK_THROWS_AS(direct_sum(def, classical_rep(ClassicalKind::Sign, 3)), DomainError);
}

TEST_CASE("tensor products of Specht modules decompose by Kronecker coefficients") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& nu : partitions_of(n)) {
        const auto dec = decompose(tensor_product(specht_module(mu), specht_module(nu)));
        for (const auto& lambda : partitions_of(n)) {
          auto it = dec.find(lambda);
          CHECK((it == dec.end() ? Integer(0) : it->second) == kronecker(lambda, mu, nu));
        }
      }
    }
  }
}

TEST_CASE("exterior square") {
  CHECK(square_class(Partition{4, 3, 2}) == Partition{3, 2, 2, 1, 1});
  for (int n = 2; n <= 5; ++n) {
    for (ClassicalKind k : {ClassicalKind::Defining, ClassicalKind::Standard}) {
      const MatrixRep rep = classical_rep(k, n);
      const ClassFunction ext = exterior_square_character(character_of(rep));
      for (const auto& mu : partitions_of(n)) {
        CHECK(ext(mu) == exterior_trace(rep.matrix(class_representative(mu))));
      }
    }
    // ∧² of the standard representation is irreducible, indexed by (n-2, 1, 1).
    if (n >= 3) {
      const auto dec = decompose(exterior_square_character(character_of(classical_rep(ClassicalKind::Standard, n))));
      std::vector<int> hook{n - 2, 1, 1};
      CHECK(dec == PartitionMap<Integer>{{Partition(hook), 1}});
    }
  }
}

TEST_CASE("GL characters and Schur–Weyl dimension count") {
  CHECK(gl_character(Partition{2, 1}, 2) == Polynomial::monomial({2, 1}) + Polynomial::monomial({1, 2}));
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int m = 0; m <= 4; ++m) {
        CHECK(gl_dimension(lambda, m) == oracle::hook_content(lambda.vec(), m));
        CHECK(gl_character(lambda, m).at_ones() == Rational(gl_dimension(lambda, m)));
      }
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) CHECK(schur_weyl_check(n, m));
  }
  CHECK_THROWS_AS(schur_weyl_check(7, 2), CapExceeded);
  CHECK_THROWS_AS(gl_dimension(Partition{1}, -1), DomainError);
}

TEST_CASE("memoized matrices are shared safely between threads") {
  const MatrixRep rep = specht_module(Partition{3, 2});
  const auto all = all_permutations(5);
  std::vector<std::thread> threads;
  std::vector<int> failures(4, 0);
  for (std::size_t t = 0; t < failures.size(); ++t) {
    threads.emplace_back([&, t] {
      for (const auto& g : all) {
        Matrix direct = Matrix::identity(rep.dim());
        for (int i : adjacent_word(g)) direct = direct * rep.generators()[static_cast<std::size_t>(i - 1)];
        if (rep.matrix(g) != direct) ++failures[t];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int f : failures) CHECK(f == 0);
}
