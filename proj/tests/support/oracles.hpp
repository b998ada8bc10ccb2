#pragma once

// Independent reference implementations used as test oracles. None of these
// call into the library's algorithms; they only share the value types.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "symf/arith.hpp"
#include "symf/partition.hpp"
#include "symf/symfunc.hpp"

namespace oracle {

using symf::Integer;
using symf::Partition;
using symf::Rational;
using Grid = std::vector<std::vector<int>>;

inline Integer fact(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Number of partitions of n by the standard "largest part ≤ k" recurrence.
inline Integer partition_count(int n) {
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  }
  return ways[static_cast<std::size_t>(n)];
}

/// Partitions of n generated by a different route than the library: all
/// weakly decreasing sequences found by brute-force recursion, unordered.
inline std::set<std::vector<int>> partition_set(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max) {
    if (left == 0) {
      out.insert(cur);
      return;
    }
    for (int p = std::min(left, max); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline std::vector<int> conjugate_parts(const std::vector<int>& lambda) {
  std::vector<int> out;
  for (int c = 0; !lambda.empty() && c < lambda[0]; ++c) {
    int len = 0;
    for (int r : lambda) len += r > c;
    out.push_back(len);
  }
  return out;
}

/// f^λ by the hook length formula.
inline Integer hook_length(const std::vector<int>& lambda) {
  const auto conj = conjugate_parts(lambda);
  int n = 0;
  Integer prod = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      prod *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
      ++n;
    }
  }
  return fact(n) / prod;
}

/// dim V^λ for GL_m by the hook-content formula.
inline Integer hook_content(const std::vector<int>& lambda, int m) {
  const auto conj = conjugate_parts(lambda);
  Rational prod = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int hook = (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
      Rational q(m + j - static_cast<int>(i), hook);
      q.canonicalize();
      prod *= q;
    }
  }
  return prod.get_num();
}

/// Semistandard check on a skew filling given as rows of full length with
/// 0 marking inner cells.
inline bool semistandard(const Grid& g) {
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (g[r][c] == 0) continue;
      if (c > 0 && g[r][c - 1] != 0 && g[r][c - 1] > g[r][c]) return false;
      if (r > 0 && c < g[r - 1].size() && g[r - 1][c] != 0 && g[r - 1][c] >= g[r][c]) return false;
    }
  }
  return true;
}

/// All semistandard fillings of λ/μ with entries ≤ m, by trying all m^cells
/// fillings. Rows hold only the skew cells, matching the library layout.
inline std::vector<Grid> brute_ssyt(const std::vector<int>& outer, const std::vector<int>& inner, int m) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  Grid g(outer.size());
  for (std::size_t r = 0; r < outer.size(); ++r) {
    g[r].assign(static_cast<std::size_t>(outer[r]), 0);
    const int skip = r < inner.size() ? inner[r] : 0;
    for (int c = skip; c < outer[r]; ++c) cells.emplace_back(r, static_cast<std::size_t>(c));
  }
  std::vector<Grid> out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      if (!semistandard(g)) return;
      Grid rows(outer.size());
      for (std::size_t r = 0; r < outer.size(); ++r) {
        for (int v : g[r]) {
          if (v != 0) rows[r].push_back(v);
        }
      }
      out.push_back(rows);
      return;
    }
    for (int v = 1; v <= m; ++v) {
      g[cells[k].first][cells[k].second] = v;
      rec(k + 1);
    }
    g[cells[k].first][cells[k].second] = 0;
  };
  if (m > 0 || cells.empty()) rec(0);
  return out;
}

/// K_{λμ} by placing every distinct arrangement of the content multiset.
inline Integer brute_kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < mu.size(); ++i) letters.insert(letters.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i) + 1);
  int cells = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (static_cast<int>(letters.size()) != cells) return 0;
  Integer count = 0;
  do {
    Grid g;
    std::size_t k = 0;
    for (int len : lambda) {
      g.emplace_back(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.begin() + static_cast<std::ptrdiff_t>(k + static_cast<std::size_t>(len)));
      k += static_cast<std::size_t>(len);
    }
    if (semistandard(g)) ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

/// χ^λ(μ) by the Murnaghan–Nakayama rule on beta-sets.
inline Integer murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& mu) {
  const std::size_t len = lambda.size();
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = lambda[i] + static_cast<int>(len - 1 - i);
  std::function<Integer(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& b, std::size_t k) -> Integer {
    if (k == mu.size()) return 1;
    const int r = mu[k];
    Integer total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const int to = b[i] - r;
      if (to < 0 || std::find(b.begin(), b.end(), to) != b.end()) continue;
      int between = 0;
      for (int x : b) between += (x > to && x < b[i]);
      const int from = b[i];
      b[i] = to;
      const Integer sub = rec(b, k + 1);
      b[i] = from;
      total += between % 2 == 0 ? sub : Integer(-sub);
    }
    return total;
  };
  return rec(beta, 0);
}

/// Number of nonnegative integer matrices with the given row and column
/// sums; when `binary`, entries are restricted to {0, 1}. These are the
/// coefficients of h_rows (resp. e_rows) on m_cols.
inline Integer count_matrices(const std::vector<int>& rows, const std::vector<int>& cols, bool binary) {
  std::vector<int> remaining = cols;
  std::function<Integer(std::size_t)> by_row = [&](std::size_t r) -> Integer {
    if (r == rows.size()) {
      return std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; }) ? 1 : 0;
    }
    Integer total = 0;
    std::function<void(std::size_t, int)> fill = [&](std::size_t c, int left) {
      if (c == remaining.size()) {
        if (left == 0) total += by_row(r + 1);
        return;
      }
      const int cap = std::min(left, binary ? 1 : left);
      for (int v = 0; v <= std::min(cap, remaining[c]); ++v) {
        remaining[c] -= v;
        fill(c + 1, left - v);
        remaining[c] += v;
      }
    };
    fill(0, rows[r]);
    return total;
  };
  return by_row(0);
}

/// z_λ straight from its definition ∏ i^{m_i} m_i!.
inline Integer z_direct(const std::vector<int>& lambda) {
  std::map<int, int> mult;
  for (int p : lambda) ++mult[p];
  Integer z = 1;
  for (auto [i, m] : mult) {
    for (int k = 0; k < m; ++k) z *= i;
    z *= fact(m);
  }
  return z;
}

/// Random element of degree ≤ max_degree with small rational coefficients.
inline symf::SymElement random_element(std::mt19937& rng, int max_degree, int terms = 3) {
  const symf::BasisTag bases[] = {symf::BasisTag::M, symf::BasisTag::E, symf::BasisTag::H,
                                  symf::BasisTag::P, symf::BasisTag::S};
  std::uniform_int_distribution<int> basis_pick(0, 4);
  std::uniform_int_distribution<int> degree_pick(0, max_degree);
  std::uniform_int_distribution<int> coeff_pick(-4, 4);
  std::uniform_int_distribution<int> den_pick(1, 3);
  symf::SymElement f(bases[basis_pick(rng)]);
  for (int t = 0; t < terms; ++t) {
    const int n = degree_pick(rng);
    const auto parts = symf::partitions_of(n);
    std::uniform_int_distribution<std::size_t> which(0, parts.size() - 1);
    Rational c(coeff_pick(rng), den_pick(rng));
    c.canonicalize();  // the two-argument constructor does not reduce
    f.add_term(parts[which(rng)], c);
  }
  return f;
}

/// Random homogeneous element of degree n.
inline symf::SymElement random_homogeneous(std::mt19937& rng, int n, symf::BasisTag basis, int terms = 3) {
  std::uniform_int_distribution<int> coeff_pick(-4, 4);
  const auto parts = symf::partitions_of(n);
  std::uniform_int_distribution<std::size_t> which(0, parts.size() - 1);
  symf::SymElement f(basis);
  for (int t = 0; t < terms; ++t) f.add_term(parts[which(rng)], coeff_pick(rng));
  return f;
}

}  // namespace oracle
