#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "quiverforge/rational.hpp"

namespace quiverforge {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Rational> column(std::size_t c) const;

  bool is_zero() const;
  Matrix transpose() const;

  /// Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block);
  Matrix block(std::size_t r, std::size_t c, std::size_t nrows, std::size_t ncols) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  std::vector<Rational> apply(std::span<const Rational> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product; (i,j) block of the result is a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Result of an in-place reduction to reduced row echelon form.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in ascending order of
/// the free column; each basis vector has a 1 in its free column and 0 in the
/// other free columns.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

/// Unique X with a X = b; `a` must have full column rank and the system must
/// be consistent. Throws std::invalid_argument otherwise.
Matrix solve(const Matrix& a, const Matrix& b);

/// Inverse of a square invertible matrix; throws std::invalid_argument if singular.
Matrix inverse(const Matrix& a);

/// Horizontal concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Matrix with the given vectors as rows (all of length `width`).
Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t width);

/// Multiplies by the lcm of denominators and divides by the gcd of the
/// numerators. The zero vector is returned unchanged.
std::vector<Integer> primitive_integer(std::span<const Rational> v);

}  // namespace quiverforge
