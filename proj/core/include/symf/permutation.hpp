#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symf/partition.hpp"

namespace symf {

/// A bijection of {1..n}, stored in one-line notation.
///
/// Composition follows "apply the right factor first":
/// (p * q)(i) == p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  /// One-line word; throws DomainError unless it is a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The transposition exchanging a and b (1-based).
  static Permutation transposition(int n, int a, int b);
  /// s_i = (i i+1), 1 <= i < n.
  static Permutation adjacent(int n, int i);

  int degree() const { return static_cast<int>(images_.size()); }
  /// Image of i, 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic order of one-line words.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

Partition cycle_type(const Permutation& p);

/// A fixed permutation of the given cycle type: consecutive cycles
/// (1 .. λ_1)(λ_1+1 .. λ_1+λ_2)...
Permutation class_representative(const Partition& type);

/// All of S_n in lexicographic word order.
std::vector<Permutation> all_permutations(int n);

/// Indices i_1..i_k with p = s_{i_1} s_{i_2} ... s_{i_k}, k = inv(p).
std::vector<int> adjacent_word(const Permutation& p);

/// Parses a whitespace-separated one-line word "2 3 7 4 1 8 5 6".
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);

}  // namespace symf
