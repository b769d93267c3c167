#include "padyn/slope.hpp"

#include <algorithm>
#include <numeric>

#include "padyn/errors.hpp"
#include "padyn/padic.hpp"

namespace padyn {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Coefficients of det(xI - A), high to low, by Berkowitz's recurrence.
std::vector<Integer> berkowitz(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {Integer(1)};
  IntMatrix a = m;
  std::vector<IntMatrix> transforms(n - 1);
  for (std::size_t size = n; size >= 2; --size) {
    const std::size_t k = size - 1;
    std::vector<Integer> row(k), col(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = -a[k][j];
    for (std::size_t i = 0; i < k; ++i) col[i] = a[i][k];
    const Integer diag = -a[k][k];
    IntMatrix sub(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[i][j];

    std::vector<Integer> seq{Integer(1), diag};
    std::vector<Integer> power = col;
    for (std::size_t step = 0; step + 1 < size; ++step) {
      Integer dot = 0;
      for (std::size_t j = 0; j < k; ++j) dot += row[j] * power[j];
      seq.push_back(dot);
      std::vector<Integer> next(k, Integer(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] += sub[i][j] * power[j];
      power = std::move(next);
    }
    IntMatrix t(size + 1, std::vector<Integer>(size, Integer(0)));
    for (std::size_t c = 0; c < size; ++c)
      for (std::size_t r = c; r <= size; ++r) t[r][c] = seq[r - c];
    transforms[k - 1] = std::move(t);
    a = std::move(sub);
  }
  std::vector<Integer> poly{Integer(1), -a[0][0]};
  for (const auto& t : transforms) {
    std::vector<Integer> next(t.size(), Integer(0));
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < poly.size(); ++c) next[r] += t[r][c] * poly[c];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square()) throw InvalidInput("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Integer d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a(i, j).get_den_mpz_t());
  IntMatrix m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).get_num() * (d / a(i, j).get_den());
  // det(xI - dA) = d^n * chi_A(x/d), so chi_A's x^i coefficient is c'_i / d^(n-i).
  const std::vector<Integer> high_to_low = berkowitz(m);
  std::vector<Rational> coeffs(n + 1);
  Rational dpow = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    // coefficient of x^(n-i) sits at high_to_low[i]
    coeffs[n - i] = Rational(high_to_low[i]) / dpow;
    dpow *= Rational(d);
  }
  return Polynomial(std::move(coeffs));
}

long NewtonPolygon::multiplicity_of(const Rational& slope) const {
  for (const auto& s : segments_) {
    if (s.slope == slope) return s.multiplicity;
  }
  return 0;
}

long NewtonPolygon::total_multiplicity() const {
  long t = 0;
  for (const auto& s : segments_) t += s.multiplicity;
  return t;
}

long NewtonPolygon::contracting_dim() const {
  long t = 0;
  for (const auto& s : segments_) {
    if (s.slope > 0) t += s.multiplicity;
  }
  return t;
}

long NewtonPolygon::expanding_dim() const {
  long t = 0;
  for (const auto& s : segments_) {
    if (s.slope < 0) t += s.multiplicity;
  }
  return t;
}

std::vector<Rational> NewtonPolygon::slope_multiset() const {
  std::vector<Rational> out;
  for (const auto& s : segments_) out.insert(out.end(), static_cast<std::size_t>(s.multiplicity), s.slope);
  return out;
}

NewtonPolygon newton_polygon(const Polynomial& f, const PrimeContext& ctx) {
  if (f.is_zero()) throw InvalidInput("Newton polygon of the zero polynomial");
  struct Point {
    long x;
    long y;
  };
  std::vector<Point> pts;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) pts.push_back({static_cast<long>(i), finite_valuation(c[i], ctx)});
  }
  // Lower hull by monotone chain; points are already sorted by x.
  std::vector<Point> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const Point& o = hull[hull.size() - 2];
      const Point& a = hull.back();
      // Drop a when it lies on or above the segment o -> pt.
      const Integer cross = Integer(a.x - o.x) * Integer(pt.y - o.y) - Integer(a.y - o.y) * Integer(pt.x - o.x);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  std::vector<SlopeSegment> segs;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const long len = hull[i + 1].x - hull[i].x;
    Rational s(Integer(hull[i].y - hull[i + 1].y), Integer(len));
    s.canonicalize();
    segs.push_back({s, len});
  }
  std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) { return a.slope < b.slope; });
  return NewtonPolygon(std::move(segs));
}

Matrix SlopeDecomposition::change_of_basis() const {
  std::vector<Vector> cols;
  for (const auto& b : blocks) cols.insert(cols.end(), b.basis.begin(), b.basis.end());
  return Matrix::from_columns(cols);
}

Matrix SlopeDecomposition::contracting_projection() const {
  const Matrix b = change_of_basis();
  const std::size_t n = b.rows();
  Matrix d(n, n);
  std::size_t col = 0;
  for (const auto& blk : blocks) {
    for (std::size_t i = 0; i < blk.basis.size(); ++i, ++col) {
      if (blk.slope > 0) d(col, col) = 1;
    }
  }
  return b * d * b.inverse();
}

namespace {

Valuation min_entry_valuation(const Matrix& m, const PrimeContext& ctx) {
  Valuation v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v = min(v, valuation(m(i, j), ctx));
  return v;
}

struct KernelResult {
  std::vector<Vector> basis;
  bool exact;
};

// Kernel of an approximately known matrix whose true kernel has dimension
// `dim`. Full pivoting on least valuation keeps every multiplier integral,
// so absolute errors never shrink below the input error; entries at or above
// `zero_threshold` are treated as zero.
KernelResult approximate_kernel(Matrix a, std::size_t dim, long zero_threshold, const PrimeContext& ctx) {
  const std::size_t n = a.cols();
  const std::size_t rank = n - dim;
  std::vector<bool> row_used(a.rows(), false), col_used(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t step = 0; step < rank; ++step) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Valuation best_v;
    for (std::size_t i = 0; i < a.rows(); ++i) {
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
    if (!best || best_v >= Valuation(zero_threshold)) {
      throw PrecisionExhausted("slope factor has a larger kernel than its multiplicity within the guard band");
    }
    const auto [pi, pj] = *best;
    row_used[pi] = col_used[pj] = true;
    pivots.push_back(*best);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (row_used[i] || a(i, pj) == 0) continue;
      const Rational f = a(i, pj) / a(pi, pj);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(pi, j);
    }
  }
  bool exact = true;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (row_used[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (col_used[j] || a(i, j) == 0) continue;
      if (valuation(a(i, j), ctx) < Valuation(zero_threshold)) {
        throw PrecisionExhausted("slope factor kernel is smaller than its multiplicity");
      }
      exact = false;
    }
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (col_used[f]) continue;
    Vector x(n, Rational(0));
    x[f] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto [pi, pj] = *it;
      Rational acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != pj) acc += a(pi, j) * x[j];
      }
      x[pj] = -acc / a(pi, pj);
    }
    basis.push_back(std::move(x));
  }
  return {std::move(basis), exact};
}

Vector primitive(Vector v, const PrimeContext& ctx, std::optional<long> truncate_at) {
  Valuation m;
  for (const auto& x : v) m = min(m, valuation(x, ctx));
  const Rational s = ctx.power(-m.value());
  for (auto& x : v) {
    x *= s;
    if (truncate_at) x = reduce_modulo(x, *truncate_at, ctx);
  }
  return v;
}

}  // namespace

SlopeDecomposition slope_decompose(const Matrix& beta, const PrimeContext& ctx, const CancellationToken& cancel) {
  if (!beta.is_square() || beta.rows() == 0) throw InvalidInput("slope decomposition needs a non-empty square matrix");
  if (beta.determinant() == 0) throw SingularInput("matrix is not invertible");
  const std::size_t n = beta.rows();
  const Polynomial f = char_poly(beta);
  NewtonPolygon poly = newton_polygon(f, ctx);

  Integer b = 1;
  for (const auto& s : poly.segments()) mpz_lcm(b.get_mpz_t(), b.get_mpz_t(), s.slope.get_den_mpz_t());
  const long bl = b.get_si();
  const Matrix power = beta.power(bl);
  const Polynomial f_power = char_poly(power);

  SlopeDecomposition out{beta, ctx, poly, {}, poly.contracting_dim(), poly.levi_dim(), poly.expanding_dim(),
                         Valuation::infinity(), 0, true};

  const long K = ctx.precision();
  long min_effective = K;
  std::vector<SlopeSegment> order(poly.segments().rbegin(), poly.segments().rend());
  for (const auto& seg : order) {
    cancel.poll();
    const long d = seg.multiplicity;
    SlopeBlock block{seg.slope, d, {}};
    if (static_cast<std::size_t>(d) == n) {
      for (std::size_t i = 0; i < n; ++i) {
        Vector e(n, Rational(0));
        e[i] = 1;
        block.basis.push_back(std::move(e));
      }
      out.blocks.push_back(std::move(block));
      continue;
    }
    const Rational tq = seg.slope * Rational(b);
    const long t = tq.get_num().get_si();
    // G(y) = f_power(p^t y) / p^c: the slope-t roots become the unit roots.
    Polynomial g_full = f_power.scale_argument(ctx.power(t));
    Valuation cmin;
    for (const auto& c : g_full.coefficients()) cmin = min(cmin, valuation(c, ctx));
    g_full = g_full.scaled(ctx.power(-cmin.value()));
    const auto& gc = g_full.coefficients();
    long i0 = -1, i1 = -1;
    for (std::size_t i = 0; i < gc.size(); ++i) {
      if (gc[i] != 0 && valuation(gc[i], ctx) == Valuation(0)) {
        if (i0 < 0) i0 = static_cast<long>(i);
        i1 = static_cast<long>(i);
      }
    }
    if (i1 - i0 != d) throw InvariantFailure("reduced slope factor degree disagrees with the Newton polygon");
    std::vector<Rational> unit_part_coeffs(gc.begin() + i0, gc.begin() + i1 + 1);
    const Polynomial g0(std::move(unit_part_coeffs));
    const Polynomial h0 = Polynomial::monomial(1, static_cast<std::size_t>(i0));
    const HenselFactors lifted = hensel_lift(g_full, g0, h0, ctx, cancel);

    const Matrix scaled = ctx.power(-t) * power;
    const Valuation vmin = min_entry_valuation(scaled, ctx);
    const long w = std::min(0L, vmin.is_finite() ? vmin.value() : 0L);
    const long effective = K + d * w;
    min_effective = std::min(min_effective, effective);
    const long threshold = effective - ctx.guard();
    if (threshold <= 0) throw PrecisionExhausted("working precision too small for this slope separation");
    const Matrix factor_at_beta = evaluate(lifted.g, scaled);
    KernelResult ker = approximate_kernel(factor_at_beta, static_cast<std::size_t>(d), threshold, ctx);
    if (!ker.exact) out.exact = false;
    for (auto& v : ker.basis) {
      block.basis.push_back(primitive(std::move(v), ctx, ker.exact ? std::nullopt : std::optional<long>(effective)));
    }
    out.blocks.push_back(std::move(block));
  }

  const Matrix basis = out.change_of_basis();
  const Rational det = basis.determinant();
  if (det == 0) throw PrecisionExhausted("slope blocks are not independent at working precision");
  const Matrix conj = basis.inverse() * beta * basis;
  Valuation residual;
  std::size_t r0 = 0;
  for (const auto& blk : out.blocks) {
    const std::size_t r1 = r0 + blk.basis.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= r0 && i < r1) continue;
      for (std::size_t j = r0; j < r1; ++j) residual = min(residual, valuation(conj(i, j), ctx));
    }
    r0 = r1;
  }
  const Valuation beta_min = min_entry_valuation(beta, ctx);
  out.invariance_residual = residual;
  out.residual_threshold = min_effective - ctx.guard() - finite_valuation(det, ctx) +
                           std::min(0L, beta_min.value());
  if (residual < Valuation(out.residual_threshold)) {
    throw PrecisionExhausted("slope blocks are not invariant within the guard band (residual " +
                             residual.to_string() + ", threshold " + std::to_string(out.residual_threshold) + ")");
  }
  return out;
}

ExpansivenessResult is_expansive_linear(const Matrix& beta, const PrimeContext& ctx, bool with_decomposition,
                                        const CancellationToken& cancel) {
  if (!beta.is_square() || beta.rows() == 0) throw InvalidInput("expansiveness needs a non-empty square matrix");
  if (beta.determinant() == 0) throw SingularInput("matrix is not invertible");
  NewtonPolygon poly = newton_polygon(char_poly(beta), ctx);
  ExpansivenessResult r{poly.levi_dim() == 0, poly, std::nullopt};
  if (with_decomposition) r.decomposition = slope_decompose(beta, ctx, cancel);
  return r;
}

ModuleReport module_report(const Matrix& beta, const PrimeContext& ctx) {
  const ExpansivenessResult e = is_expansive_linear(beta, ctx);
  if (!e.expansive) throw NotExpansive("a root of the characteristic polynomial is a p-adic unit");
  Rational contracting = 0, expanding = 0;
  for (const auto& s : e.polygon.segments()) {
    if (s.slope > 0) contracting += s.slope * s.multiplicity;
    if (s.slope < 0) expanding -= s.slope * s.multiplicity;
  }
  if (contracting.get_den() != 1 || expanding.get_den() != 1) {
    throw InvariantFailure("slope sums are not integers");
  }
  ModuleReport r;
  r.ell_alpha = contracting.get_num().get_si();
  r.ell_alpha_inverse = expanding.get_num().get_si();
  r.series_bound = r.ell_alpha + r.ell_alpha_inverse;
  r.scale_of_alpha = ctx.power(r.ell_alpha_inverse);
  r.scale_of_alpha_inverse = ctx.power(r.ell_alpha);
  // The module of beta^-1 on a nontrivial contraction side is an integer >= 2.
  if (e.polygon.contracting_dim() > 0 && !(r.scale_of_alpha_inverse >= 2)) {
    throw InvariantFailure("module on the contraction side is not an integer >= 2");
  }
  if (e.polygon.expanding_dim() > 0 && !(r.scale_of_alpha >= 2)) {
    throw InvariantFailure("module on the expansion side is not an integer >= 2");
  }
  return r;
}

}  // namespace padyn
