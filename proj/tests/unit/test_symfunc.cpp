#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "symf/characters.hpp"
#include "symf/error.hpp"
#include "symf/symfunc.hpp"
#include "symf/tableau.hpp"

using namespace symf;

namespace {

SymElement el(BasisTag b, std::initializer_list<std::pair<Partition, Rational>> terms) {
  SymElement f(b);
  for (const auto& [p, c] : terms) f.add_term(p, c);
  return f;
}

SymElement one_of(BasisTag b, int k) { return basis_element(b, k == 0 ? Partition() : Partition::row(k)); }

}  // namespace

TEST_CASE("Schur to monomial fixture") {
  const SymElement m = convert(basis_element(BasisTag::S, Partition{2, 1}), BasisTag::M);
  CHECK(m.same_terms(el(BasisTag::M, {{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 2}})));
}

TEST_CASE("Schur functions expand in monomials by Kostka numbers") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const SymElement m = convert(basis_element(BasisTag::S, lambda), BasisTag::M);
      for (const auto& mu : partitions_of(n)) {
        CHECK(m.coefficient(mu) == Rational(oracle::brute_kostka(lambda.vec(), mu.vec())));
      }
    }
  }
}

TEST_CASE("h and e expand in monomials by integer and 0-1 matrix counts") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const SymElement h = convert(basis_element(BasisTag::H, mu), BasisTag::M);
      const SymElement e = convert(basis_element(BasisTag::E, mu), BasisTag::M);
      for (const auto& lambda : partitions_of(n)) {
        CHECK(h.coefficient(lambda) == Rational(oracle::count_matrices(mu.vec(), lambda.vec(), false)));
        CHECK(e.coefficient(lambda) == Rational(oracle::count_matrices(mu.vec(), lambda.vec(), true)));
      }
    }
  }
}

TEST_CASE("the monomial basis is the inverse Kostka transform of Schur") {
  // m_μ = Σ_λ (K^{-1})_{μλ} s_λ, with K taken from brute-force fillings.
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    std::vector<std::vector<Rational>> k(parts.size(), std::vector<Rational>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts.size(); ++j) k[i][j] = Rational(oracle::brute_kostka(parts[i].vec(), parts[j].vec()));
    }
    const Matrix kinv = inverse(Matrix::from_rows(k));
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const SymElement s = convert(basis_element(BasisTag::M, parts[j]), BasisTag::S);
      for (std::size_t i = 0; i < parts.size(); ++i) CHECK(s.coefficient(parts[i]) == kinv(j, i));
    }
  }
}

TEST_CASE("conversions round-trip between every pair of bases") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const SymElement f = oracle::random_element(rng, 6);
    for (BasisTag b : kAllBases) {
      const SymElement g = convert(f, b);
      CHECK(g.basis() == b);
      CHECK(convert(g, f.basis()).same_terms(f));
    }
  }
}

TEST_CASE("power-sum expansions of h_n and e_n") {
  for (int n = 0; n <= 10; ++n) {
    SymElement h(BasisTag::P);
    SymElement e(BasisTag::P);
    for (const auto& lambda : partitions_of(n)) {
      Rational inv_z(Integer(1), oracle::z_direct(lambda.vec()));
      inv_z.canonicalize();
      h.add_term(lambda, inv_z);
      e.add_term(lambda, (n - lambda.length()) % 2 == 0 ? inv_z : Rational(-inv_z));
    }
    CHECK(convert(one_of(BasisTag::H, n), BasisTag::P).same_terms(h));
    CHECK(convert(one_of(BasisTag::E, n), BasisTag::P).same_terms(e));
  }
}

TEST_CASE("multiplication: Pieri rule and commutativity") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& mu : partitions_of(n)) {
      const SymElement prod = convert(multiply(basis_element(BasisTag::S, mu), one_of(BasisTag::H, 1)), BasisTag::S);
      SymElement expected(BasisTag::S);
      for (const auto& lambda : partitions_of(n + 1)) {
        if (contains(lambda, mu)) expected.add_term(lambda, 1);
      }
      CHECK(prod.same_terms(expected));
    }
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const SymElement f = oracle::random_element(rng, 4);
    const SymElement g = oracle::random_element(rng, 4);
    const SymElement h = oracle::random_element(rng, 3);
    CHECK(multiply(f, g) == multiply(g, f));
    CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
    CHECK(multiply(f, g + h) == multiply(f, g) + multiply(f, h));
  }
  // h_k expands multiplicatively: h_μ = ∏ h_{μ_i}.
  const SymElement prod = multiply(multiply(one_of(BasisTag::H, 2), one_of(BasisTag::H, 2)), one_of(BasisTag::H, 1));
  CHECK(prod == basis_element(BasisTag::H, Partition{2, 2, 1}));
}

TEST_CASE("Hall inner product dualities") {
  for (int n = 0; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        const Rational delta = a == b ? 1 : 0;
        CHECK(hall_inner(basis_element(BasisTag::S, a), basis_element(BasisTag::S, b)) == delta);
        CHECK(hall_inner(basis_element(BasisTag::H, a), basis_element(BasisTag::M, b)) == delta);
        CHECK(hall_inner(basis_element(BasisTag::P, a), basis_element(BasisTag::P, b)) ==
              (a == b ? Rational(z_value(a)) : Rational(0)));
      }
    }
  }
  CHECK(hall_inner(one_of(BasisTag::H, 2), one_of(BasisTag::H, 3)) == 0);
}

TEST_CASE("omega") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      CHECK(omega(basis_element(BasisTag::S, lambda)).same_terms(basis_element(BasisTag::S, conjugate(lambda))));
    }
    CHECK(omega(one_of(BasisTag::E, n)) == one_of(BasisTag::H, n));
    const SymElement pn = omega(one_of(BasisTag::P, n));
    CHECK(pn.coefficient(n == 0 ? Partition() : Partition::row(n)) == (n == 0 || n % 2 == 1 ? 1 : -1));
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SymElement f = oracle::random_element(rng, 5);
    CHECK(omega(omega(f)).same_terms(f));
    CHECK(omega(f).basis() == f.basis());
  }
}

TEST_CASE("skew Schur functions") {
  const SymElement s21_1 = skew_schur(Partition{2, 1}, Partition{1});
  CHECK(convert(s21_1, BasisTag::H).same_terms(el(BasisTag::H, {{Partition{1, 1}, 1}})));
  CHECK(skew_schur(Partition{2, 1}, Partition{2, 2}).is_zero());
  CHECK(skew_schur(Partition{3, 1}, Partition()).same_terms(basis_element(BasisTag::S, Partition{3, 1})));
  // s_{λ/μ} evaluated equals the generating function of skew tableaux.
  const std::vector<std::pair<Partition, Partition>> shapes = {
      {Partition{3, 2, 1}, Partition{2, 1}}, {Partition{3, 3}, Partition{1}}, {Partition{2, 2}, Partition{1}}};
  for (const auto& [outer, inner] : shapes) {
    for (int m = 1; m <= 3; ++m) {
      Polynomial expected(static_cast<std::size_t>(m));
      for (const auto& rows : oracle::brute_ssyt(outer.vec(), inner.vec(), m)) {
        Exponents e(static_cast<std::size_t>(m), 0);
        for (const auto& row : rows) {
          for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
        }
        expected.add_term(e, 1);
      }
      CHECK(evaluate(skew_schur(outer, inner), m) == expected);
    }
  }
}

TEST_CASE("perp agrees with skewing, and is adjoint to multiplication") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& mu : partitions_of(k)) {
          CHECK(perp(mu, basis_element(BasisTag::S, lambda)) == skew_schur(lambda, mu));
        }
      }
    }
  }
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const SymElement f = oracle::random_element(rng, 6);
    const SymElement g = oracle::random_element(rng, 3);
    const Partition mu{2, 1};
    CHECK(hall_inner(perp(mu, f), g) == hall_inner(f, multiply(basis_element(BasisTag::S, mu), g)));
    CHECK(perp(mu, f).basis() == f.basis());
  }
}

TEST_CASE("evaluation in finitely many variables") {
  // s_λ(x_1..x_m) = Σ over SSYT of x^T.
  for (int n = 0; n <= 4; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int m = 0; m <= 3; ++m) {
        Polynomial expected(static_cast<std::size_t>(m));
        for (const auto& rows : oracle::brute_ssyt(lambda.vec(), {}, m)) {
          Exponents e(static_cast<std::size_t>(m), 0);
          for (const auto& row : rows) {
            for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
          }
          expected.add_term(e, 1);
        }
        CHECK(evaluate(basis_element(BasisTag::S, lambda), m) == expected);
      }
    }
  }
  CHECK(evaluate(basis_element(BasisTag::E, Partition{3}), 2).is_zero());
  CHECK(evaluate(basis_element(BasisTag::P, Partition{2}), 2) ==
        Polynomial::monomial({2, 0}) + Polynomial::monomial({0, 2}));
}

TEST_CASE("element arithmetic and equality") {
  SymElement f = basis_element(BasisTag::S, Partition{2});
  f += basis_element(BasisTag::E, Partition{2});
  CHECK(f.basis() == BasisTag::S);
  CHECK(f == basis_element(BasisTag::H, Partition{1, 1}));
  CHECK((f - f).is_zero());
  CHECK((f * Rational(0)).is_zero());
  SymElement mixed(BasisTag::P);
  mixed.add_term(Partition{2}, 1);
  mixed.add_term(Partition(), 3);
  CHECK_FALSE(mixed.homogeneous_degree().has_value());
  CHECK(mixed.max_degree() == 2);
  CHECK(mixed.degree_part(0).coefficient(Partition()) == 3);
  mixed.add_term(Partition{2}, -1);
  CHECK(mixed.homogeneous_degree() == 0);
  CHECK(parse_basis("S") == BasisTag::S);
  CHECK_THROWS_AS(parse_basis("q"), SyntaxError);
}

TEST_CASE("degree cap") {
  const int saved = max_degree();
  set_max_degree(5);
  CHECK_THROWS_AS(to_power_sums(BasisTag::S, 6), CapExceeded);
  CHECK_THROWS_AS(convert(basis_element(BasisTag::S, Partition{6}), BasisTag::P), CapExceeded);
  CHECK_NOTHROW(to_power_sums(BasisTag::S, 5));
  set_max_degree(saved);
  CHECK_THROWS_AS(set_max_degree(-1), DomainError);
}

TEST_CASE("transition matrices are computed once under concurrent access") {
  std::vector<const Matrix*> seen(8, nullptr);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    threads.emplace_back([&seen, t] { seen[t] = &to_power_sums(BasisTag::S, 9); });
  }
  for (auto& th : threads) th.join();
  for (const auto* p : seen) CHECK(p == seen.front());
  CHECK(to_power_sums(BasisTag::S, 9) * from_power_sums(BasisTag::S, 9) ==
        Matrix::identity(partitions_of(9).size()));
}
