#pragma once

#include <vector>

#include "padyn/matrix.hpp"
#include "padyn/rational.hpp"
#include "padyn/slope.hpp"

namespace padyn {

/// Full-rank Z_p-lattice in Q_p^n, given by the columns of an invertible
/// rational matrix. Two lattices are equal when each basis expresses in the
/// other with p-integral coordinates.
class Lattice {
 public:
  explicit Lattice(Matrix basis);
  static Lattice standard(std::size_t n);

  const Matrix& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.rows(); }

  bool contains(const Vector& v, const PrimeContext& ctx) const;
  /// other is a sublattice of *this.
  bool contains(const Lattice& other, const PrimeContext& ctx) const;
  bool equals(const Lattice& other, const PrimeContext& ctx) const {
    return contains(other, ctx) && other.contains(*this, ctx);
  }

  /// Lower-triangular Hermite form over Z_p: diagonal entries are powers of
  /// p, entries below a diagonal p^k are reduced modulo p^k.
  Lattice normal_form(const PrimeContext& ctx) const;
  /// {x : <x, y> in Z_p for all y in L}.
  Lattice dual() const;

 private:
  Matrix basis_;
};

/// Hermite form of the Z_p-span of the given generator columns (rank n).
Matrix hermite_form(const Matrix& generators, const PrimeContext& ctx);

Lattice lattice_sum(const Lattice& a, const Lattice& b, const PrimeContext& ctx);
Lattice lattice_intersect(const Lattice& a, const Lattice& b, const PrimeContext& ctx);
Lattice lattice_image(const Lattice& l, const Matrix& beta);
/// Intersection of beta^k(L) over |k| <= m.
Lattice lattice_window(const Lattice& l, const Matrix& beta, long m, const PrimeContext& ctx);
/// Intersection of beta^k(L) over 0 <= k <= m.
Lattice lattice_forward_window(const Lattice& l, const Matrix& beta, long m, const PrimeContext& ctx);

/// Valuations of the elementary divisors of `sub` relative to `l`
/// (Smith form of l.basis^-1 * sub.basis over Z_p), ascending.
std::vector<long> elementary_divisor_valuations(const Lattice& sub, const Lattice& l, const PrimeContext& ctx);

/// For m = 0..m_max, the least elementary-divisor valuation of the window
/// relative to L. Growth to infinity witnesses that the two-sided window
/// shrinks to {0}.
std::vector<long> v0_shrinkage(const Lattice& l, const Matrix& beta, const PrimeContext& ctx, long m_max);

/// V = (V n E_contracting) (+) (V n E_expanding) for the slope subspaces of
/// the decomposition (the linear form of the tidiness condition T1).
bool is_split(const Lattice& v, const SlopeDecomposition& decomposition, const PrimeContext& ctx);

struct TidyResult {
  Lattice lattice;
  long m;
};

/// Least m <= m_cap such that the forward window of L up to beta^m splits.
/// Throws NotExpansive or CapExceeded.
TidyResult tidy_lattice(const Lattice& l, const Matrix& beta, const PrimeContext& ctx, long m_cap = 32);

}  // namespace padyn
