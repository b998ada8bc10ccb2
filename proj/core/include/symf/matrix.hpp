#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symf/arith.hpp"

namespace symf {

/// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// From nested rows; throws DomainError when they are ragged.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  /// Skips zero entries on both sides, so permutation matrices multiply in
  /// time proportional to their size rather than its cube.
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row vector times matrix.
std::vector<Rational> operator*(std::span<const Rational> v, const Matrix& m);

/// Exact Gauss–Jordan inverse; throws DomainError when singular.
Matrix inverse(const Matrix& m);
Rational determinant(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Rational>> solve(const Matrix& a,
                                           std::span<const Rational> b);

/// Kronecker (tensor) product of matrices.
Matrix kron(const Matrix& a, const Matrix& b);
/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace symf
