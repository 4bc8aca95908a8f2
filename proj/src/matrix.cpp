#include "quiverforge/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace quiverforge {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block) {
  assert(r + block.rows_ <= rows_ && c + block.cols_ <= cols_);
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t nrows, std::size_t ncols) const {
  assert(r + nrows <= rows_ && c + ncols <= cols_);
  Matrix out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(r + i, c + j);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
  Matrix out(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) == 0) continue;
        t = aik * b(k, j);
        out(i, j) += t;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  out += b;
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  out -= b;
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference: shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t lead_row = 0;
  Rational factor;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(lead_row, j)) != 0) m(r, j) -= factor * m(lead_row, j);
    }
    e.pivots.push_back(c);
    ++lead_row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row counts differ");
  Matrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  const Echelon e = rref(hconcat(a, b));
  if (e.rank() != a.cols()) throw std::invalid_argument("solve: no unique solution");
  for (std::size_t r = 0; r < e.rank(); ++r)
    if (e.pivots[r] != r) throw std::invalid_argument("solve: no unique solution");
  for (std::size_t r = e.rank(); r < e.reduced.rows(); ++r)
    for (std::size_t c = a.cols(); c < e.reduced.cols(); ++c)
      if (sgn(e.reduced(r, c)) != 0) throw std::invalid_argument("solve: inconsistent system");
  return e.reduced.block(0, a.cols(), a.cols(), b.cols());
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  return solve(a, Matrix::identity(a.rows()));
}

Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t width) {
  Matrix out(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t j = 0; j < width; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

std::vector<Integer> primitive_integer(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (g > 1)
    for (auto& n : out) n /= g;
  return out;
}

}  // namespace quiverforge
