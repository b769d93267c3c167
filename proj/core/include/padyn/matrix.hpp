#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "padyn/polynomial.hpp"
#include "padyn/rational.hpp"

namespace padyn {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& entries);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Matrix transpose() const;

  /// Fraction-free (Bareiss) determinant.
  Rational determinant() const;
  /// Gauss-Jordan inverse; throws SingularInput.
  Matrix inverse() const;
  /// Non-negative or negative integer power (negative requires invertibility).
  Matrix power(long k) const;
  std::size_t rank() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// f(A) by Horner's rule.
Matrix evaluate(const Polynomial& f, const Matrix& a);

}  // namespace padyn
