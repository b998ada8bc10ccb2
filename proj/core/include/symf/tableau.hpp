#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symf/arith.hpp"
#include "symf/partition.hpp"

namespace symf {

/// The skew diagram outer/inner; a straight shape has an empty inner.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  /// Throws DomainError unless inner ⊆ outer.
  SkewShape(Partition outer_shape, Partition inner_shape = {});

  int cell_count() const { return outer.size() - inner.size(); }
  bool is_straight() const { return inner.empty(); }
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// A filling of a (skew) Young diagram. Row i holds the entries of the
/// cells outer_i - inner_i of that row, left to right.
class Tableau {
 public:
  Tableau() = default;
  /// Throws DomainError when the row lengths do not match the shape.
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);
  /// Straight shape read off the row lengths.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int cell_count() const { return shape_.cell_count(); }
  int max_entry() const;

  /// Rows weakly increase, columns strictly increase.
  bool is_semistandard() const;
  /// Semistandard with entries exactly 1..n, each once.
  bool is_standard() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Lazy stream of semistandard fillings of a skew shape, in row-major
/// lexicographic order. Backtracking keeps only the current filling.
class SsytStream {
 public:
  /// Entries in 1..max_entry.
  SsytStream(SkewShape shape, int max_entry);
  /// Fillings whose content is exactly `content` (entry i appears
  /// content[i-1] times). Content need not be sorted.
  SsytStream(SkewShape shape, std::vector<int> content);

  std::optional<Tableau> next();
  /// Drains the stream and returns how many fillings remained.
  Integer count();

 private:
  bool advance();
  int lower_bound(std::size_t k) const;
  Tableau current() const;

  SkewShape shape_;
  int max_entry_ = 0;
  std::optional<std::vector<int>> content_;
  std::vector<int> used_;
  // Cells in row-major order, with indices of their left and upper
  // neighbours inside the skew shape (or -1).
  struct Cell {
    int row;
    int left;
    int above;
  };
  std::vector<Cell> cells_;
  std::vector<int> values_;
  std::vector<bool> assigned_;
  std::ptrdiff_t pos_ = 0;
  bool started_ = false;
  bool done_ = false;
};

SsytStream enumerate_ssyt(const SkewShape& shape, int max_entry);
/// Number of semistandard tableaux of a shape with entries ≤ max_entry.
Integer count_ssyt(const SkewShape& shape, int max_entry);

/// Kostka number K_{λμ}; 0 when the sizes differ.
Integer kostka(const Partition& lambda, const Partition& mu);
/// Number of standard tableaux of shape λ.
Integer f_lambda(const Partition& lambda);
/// All standard tableaux of shape λ in stream order.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// Exponent of x_i keyed by i; no zero exponents stored.
using Monomial = std::map<int, int>;
Monomial weight_monomial(const Tableau& t);

struct RskPair {
  Tableau insertion;  ///< P, semistandard
  Tableau recording;  ///< Q, standard
  friend bool operator==(const RskPair&, const RskPair&) = default;
};

/// Row-insertion RSK of a word of positive integers.
RskPair rsk(const std::vector<int>& word);
/// Inverse of rsk; throws DomainError on mismatched or invalid tableaux.
std::vector<int> rsk_inverse(const Tableau& insertion, const Tableau& recording);

}  // namespace symf
