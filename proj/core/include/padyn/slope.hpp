#pragma once

#include <optional>
#include <vector>

#include "padyn/cancel.hpp"
#include "padyn/matrix.hpp"
#include "padyn/polynomial.hpp"
#include "padyn/rational.hpp"

namespace padyn {

/// det(x*I - A), computed with the division-free Berkowitz recurrence on the
/// denominator-cleared integer matrix.
Polynomial char_poly(const Matrix& a);

struct SlopeSegment {
  /// Root valuation: roots on this segment have |lambda|_p = p^(-slope).
  Rational slope;
  long multiplicity;
  friend bool operator==(const SlopeSegment&, const SlopeSegment&) = default;
};

/// Lower convex hull of {(i, v_p(c_i))}, one segment per distinct slope,
/// sorted by ascending slope.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  explicit NewtonPolygon(std::vector<SlopeSegment> segments) : segments_(std::move(segments)) {}

  const std::vector<SlopeSegment>& segments() const { return segments_; }
  long multiplicity_of(const Rational& slope) const;
  long total_multiplicity() const;
  /// Sum of multiplicities over slopes s with s > 0, s == 0, s < 0.
  long contracting_dim() const;
  long levi_dim() const { return multiplicity_of(0); }
  long expanding_dim() const;
  /// The slope multiset, one entry per root, ascending.
  std::vector<Rational> slope_multiset() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<SlopeSegment> segments_;
};

NewtonPolygon newton_polygon(const Polynomial& f, const PrimeContext& ctx);

struct SlopeBlock {
  Rational slope;
  long multiplicity;
  std::vector<Vector> basis;
};

/// Q_p^n = (+)_s E_s, E_s the sum of generalized eigenspaces with root
/// valuation s. Blocks are ordered contracting first (descending slope), so
/// the columns of change_of_basis() read U_beta, M_beta, U_{beta^-1}.
struct SlopeDecomposition {
  Matrix matrix;
  PrimeContext prime;
  NewtonPolygon polygon;
  std::vector<SlopeBlock> blocks;
  long contracting_dim = 0;
  long levi_dim = 0;
  long expanding_dim = 0;
  /// Least valuation among off-block entries of B^-1 * beta * B (infinite
  /// when the blocks are exactly invariant).
  Valuation invariance_residual;
  /// Residuals at or above this valuation count as zero.
  long residual_threshold = 0;
  /// True when every block basis is exact (no finite-precision step used).
  bool exact = true;

  Matrix change_of_basis() const;
  /// Projection onto the contracting sum along the other blocks.
  Matrix contracting_projection() const;
};

SlopeDecomposition slope_decompose(const Matrix& beta, const PrimeContext& ctx,
                                   const CancellationToken& cancel = {});

struct ExpansivenessResult {
  bool expansive;
  NewtonPolygon polygon;
  std::optional<SlopeDecomposition> decomposition;
};

/// Decided from the Newton polygon alone: expansive iff no root is a p-adic
/// unit. The decomposition is only computed on request.
ExpansivenessResult is_expansive_linear(const Matrix& beta, const PrimeContext& ctx,
                                        bool with_decomposition = false,
                                        const CancellationToken& cancel = {});

struct ModuleReport {
  Rational scale_of_alpha;
  Rational scale_of_alpha_inverse;
  long ell_alpha = 0;
  long ell_alpha_inverse = 0;
  long series_bound = 0;
};

ModuleReport module_report(const Matrix& beta, const PrimeContext& ctx);

}  // namespace padyn
