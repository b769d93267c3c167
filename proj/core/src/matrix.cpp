#include "padyn/matrix.hpp"

#include "padyn/errors.hpp"

namespace padyn {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) return Matrix();
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows_) throw InvalidInput("ragged matrix columns");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational Matrix::determinant() const {
  if (!is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Clear denominators row by row, then run integer Bareiss elimination.
  std::vector<Integer> a(n * n);
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*this)(i, j).get_den_mpz_t());
    scale *= Rational(l);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = (*this)(i, j);
      a[i * n + j] = x.get_num() * (l / x.get_den());
    }
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = t;
      }
    }
    prev = a[k * n + k];
  }
  Rational det(a[n * n - 1] * sign);
  det /= scale;
  return det;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw SingularInput("matrix is not invertible");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    const Rational d = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= d;
      inv(c, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::power(long k) const {
  if (!is_square()) throw InvalidInput("power of a non-square matrix");
  Matrix base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Matrix result = identity(rows_);
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::size_t Matrix::rank() const {
  Matrix a = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && a(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < cols_; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch in product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw InvalidInput("matrix-vector shape mismatch");
  Vector r(a.rows_, Rational(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix shape mismatch in sum");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(format_rational((*this)(i, j)));
  return out;
}

Matrix evaluate(const Polynomial& f, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix acc(n, n);
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it * Matrix::identity(n);
  return acc;
}

}  // namespace padyn
