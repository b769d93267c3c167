#include "padyn/lattice.hpp"

#include <algorithm>
#include <optional>

#include "padyn/errors.hpp"

namespace padyn {

Lattice::Lattice(Matrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square() || basis_.rows() == 0) throw InvalidInput("lattice basis must be square and non-empty");
  if (basis_.determinant() == 0) throw SingularInput("lattice basis is singular");
}

Lattice Lattice::standard(std::size_t n) { return Lattice(Matrix::identity(n)); }

bool Lattice::contains(const Vector& v, const PrimeContext& ctx) const {
  for (const auto& c : basis_.inverse() * v) {
    if (!is_integral(c, ctx)) return false;
  }
  return true;
}

bool Lattice::contains(const Lattice& other, const PrimeContext& ctx) const {
  const Matrix coords = basis_.inverse() * other.basis_;
  for (std::size_t i = 0; i < coords.rows(); ++i)
    for (std::size_t j = 0; j < coords.cols(); ++j) {
      if (!is_integral(coords(i, j), ctx)) return false;
    }
  return true;
}

Lattice Lattice::normal_form(const PrimeContext& ctx) const { return Lattice(hermite_form(basis_, ctx)); }

Lattice Lattice::dual() const { return Lattice(basis_.inverse().transpose()); }

Matrix hermite_form(const Matrix& generators, const PrimeContext& ctx) {
  const std::size_t n = generators.rows();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < generators.cols(); ++j) cols.push_back(generators.column(j));
  std::vector<long> diag_val(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> best;
    Valuation best_v;
    for (std::size_t j = i; j < cols.size(); ++j) {
      if (cols[j][i] == 0) continue;
      const Valuation v = valuation(cols[j][i], ctx);
      if (!best || v < best_v) {
        best = j;
        best_v = v;
      }
    }
    if (!best) throw SingularInput("generators do not span a full-rank lattice");
    std::swap(cols[i], cols[*best]);
    const long k = best_v.value();
    diag_val[i] = k;
    const Rational unit = ctx.power(k) / cols[i][i];
    for (auto& x : cols[i]) x *= unit;
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      if (cols[j][i] == 0) continue;
      const Rational f = cols[j][i] / cols[i][i];
      for (std::size_t r = i; r < n; ++r) cols[j][r] -= f * cols[i][r];
    }
  }
  cols.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      const Rational reduced = reduce_modulo(cols[j][i], diag_val[i], ctx);
      const Rational f = (cols[j][i] - reduced) / cols[i][i];
      if (f == 0) continue;
      for (std::size_t r = i; r < n; ++r) cols[j][r] -= f * cols[i][r];
    }
  }
  return Matrix::from_columns(cols);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b, const PrimeContext& ctx) {
  const std::size_t n = a.dimension();
  if (b.dimension() != n) throw InvalidInput("lattice dimension mismatch");
  Matrix gens(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gens(i, j) = a.basis()(i, j);
      gens(i, n + j) = b.basis()(i, j);
    }
  return Lattice(hermite_form(gens, ctx));
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b, const PrimeContext& ctx) {
  return lattice_sum(a.dual(), b.dual(), ctx).dual().normal_form(ctx);
}

Lattice lattice_image(const Lattice& l, const Matrix& beta) {
  if (!beta.is_square() || beta.rows() != l.dimension()) throw InvalidInput("matrix and lattice shapes differ");
  return Lattice(beta * l.basis());
}

Lattice lattice_window(const Lattice& l, const Matrix& beta, long m, const PrimeContext& ctx) {
  if (m < 0) throw InvalidInput("window size must be non-negative");
  if (beta.determinant() == 0) throw SingularInput("matrix is not invertible");
  const Matrix inv = beta.inverse();
  Lattice acc = l.normal_form(ctx);
  Matrix fwd = Matrix::identity(l.dimension()), bwd = fwd;
  for (long k = 1; k <= m; ++k) {
    fwd = beta * fwd;
    bwd = inv * bwd;
    acc = lattice_intersect(acc, Lattice(fwd * l.basis()), ctx);
    acc = lattice_intersect(acc, Lattice(bwd * l.basis()), ctx);
  }
  return acc;
}

Lattice lattice_forward_window(const Lattice& l, const Matrix& beta, long m, const PrimeContext& ctx) {
  if (m < 0) throw InvalidInput("window size must be non-negative");
  if (beta.determinant() == 0) throw SingularInput("matrix is not invertible");
  Lattice acc = l.normal_form(ctx);
  Matrix fwd = Matrix::identity(l.dimension());
  for (long k = 1; k <= m; ++k) {
    fwd = beta * fwd;
    acc = lattice_intersect(acc, Lattice(fwd * l.basis()), ctx);
  }
  return acc;
}

std::vector<long> elementary_divisor_valuations(const Lattice& sub, const Lattice& l, const PrimeContext& ctx) {
  Matrix a = l.basis().inverse() * sub.basis();
  const std::size_t n = a.rows();
  std::vector<bool> row_used(n, false), col_used(n, false);
  std::vector<long> out;
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Valuation best_v;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (col_used[j] || a(i, j) == 0) continue;
        const Valuation v = valuation(a(i, j), ctx);
        if (!best || v < best_v) {
          best = {i, j};
          best_v = v;
        }
      }
    }
    if (!best) throw SingularInput("sublattice is not of full rank");
    const auto [pi, pj] = *best;
    row_used[pi] = col_used[pj] = true;
    out.push_back(best_v.value());
    for (std::size_t i = 0; i < n; ++i) {
      if (row_used[i] || a(i, pj) == 0) continue;
      const Rational f = a(i, pj) / a(pi, pj);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(pi, j);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (col_used[j] || a(pi, j) == 0) continue;
      const Rational f = a(pi, j) / a(pi, pj);
      for (std::size_t i = 0; i < n; ++i) a(i, j) -= f * a(i, pj);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> v0_shrinkage(const Lattice& l, const Matrix& beta, const PrimeContext& ctx, long m_max) {
  if (m_max < 0) throw InvalidInput("m_max must be non-negative");
  if (!is_expansive_linear(beta, ctx).expansive) throw NotExpansive("matrix has a unit root");
  const Matrix inv = beta.inverse();
  std::vector<long> out;
  Lattice acc = l.normal_form(ctx);
  Matrix fwd = Matrix::identity(l.dimension()), bwd = fwd;
  for (long m = 0; m <= m_max; ++m) {
    if (m > 0) {
      fwd = beta * fwd;
      bwd = inv * bwd;
      acc = lattice_intersect(acc, Lattice(fwd * l.basis()), ctx);
      acc = lattice_intersect(acc, Lattice(bwd * l.basis()), ctx);
    }
    out.push_back(elementary_divisor_valuations(acc, l, ctx).front());
  }
  return out;
}

bool is_split(const Lattice& v, const SlopeDecomposition& decomposition, const PrimeContext& ctx) {
  if (decomposition.levi_dim != 0) throw NotExpansive("splitting needs an expansive matrix");
  const Matrix proj = decomposition.contracting_projection();
  const Matrix coords = v.basis().inverse() * proj * v.basis();
  for (std::size_t i = 0; i < coords.rows(); ++i)
    for (std::size_t j = 0; j < coords.cols(); ++j) {
      if (!is_integral(coords(i, j), ctx)) return false;
    }
  return true;
}

TidyResult tidy_lattice(const Lattice& l, const Matrix& beta, const PrimeContext& ctx, long m_cap) {
  const ExpansivenessResult e = is_expansive_linear(beta, ctx, true);
  if (!e.expansive) throw NotExpansive("matrix has a unit root");
  const SlopeDecomposition& dec = *e.decomposition;
  Lattice acc = l.normal_form(ctx);
  Matrix fwd = Matrix::identity(l.dimension());
  for (long m = 0; m <= m_cap; ++m) {
    if (m > 0) {
      fwd = beta * fwd;
      acc = lattice_intersect(acc, Lattice(fwd * l.basis()), ctx);
    }
    if (is_split(acc, dec, ctx)) return {acc, m};
  }
  throw CapExceeded("no window up to m = " + std::to_string(m_cap) + " splits");
}

}  // namespace padyn
