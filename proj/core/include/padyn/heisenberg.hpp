#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "padyn/cancel.hpp"
#include "padyn/matrix.hpp"
#include "padyn/rational.hpp"

namespace padyn {

/// Point of the p-adic Heisenberg group H with law
/// (x1, y1, z1)(x2, y2, z2) = (x1 + x2, y1 + y2, z1 + z2 + x1 y2).
struct HeisPoint {
  Rational x, y, z;
  friend bool operator==(const HeisPoint&, const HeisPoint&) = default;
};

HeisPoint heis_mul(const HeisPoint& a, const HeisPoint& b);
HeisPoint heis_inv(const HeisPoint& a);
std::string to_string(const HeisPoint& a);

/// Point of H / N with N = {(0, 0, z) : z in Z_p}. The class of z is stored
/// as its fractional part, so equality is syntactic.
class HeisQuotPoint {
 public:
  HeisQuotPoint(Rational x, Rational y, const Rational& z, const PrimeContext& ctx);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z_class() const { return z_; }
  std::uint64_t prime() const { return p_; }

  friend bool operator==(const HeisQuotPoint&, const HeisQuotPoint&) = default;

 private:
  Rational x_, y_, z_;
  std::uint64_t p_;
};

HeisQuotPoint quot_mul(const HeisQuotPoint& a, const HeisQuotPoint& b, const PrimeContext& ctx);
HeisQuotPoint quot_inv(const HeisQuotPoint& a, const PrimeContext& ctx);
HeisQuotPoint project(const HeisPoint& a, const PrimeContext& ctx);
std::string to_string(const HeisQuotPoint& a);

enum class Carrier { H, HmodN, HxH };
std::string to_string(Carrier c);
Carrier parse_carrier(const std::string& name);
std::size_t coordinate_count(Carrier c);

/// Diagonal automorphism scaling each coordinate by p^e. On H the exponents
/// must satisfy e_x + e_y = e_z; on H/N additionally e_z = 0; on H x H the
/// six exponents are two such triples.
struct DiagAuto {
  Carrier carrier;
  std::vector<long> exponents;

  /// Throws InvalidInput when the map is not an automorphism of the carrier.
  void validate() const;
  DiagAuto inverse() const;
};

/// Element of a carrier as a flat coordinate vector (x, y, z) or
/// (x1, y1, z1, x2, y2, z2); z-coordinates on H/N are fractional parts.
struct HeisElement {
  Carrier carrier;
  std::vector<Rational> coords;
  friend bool operator==(const HeisElement&, const HeisElement&) = default;
};

HeisElement identity_element(Carrier c);
/// Builds an element, normalizing quotient classes.
HeisElement make_element(Carrier c, std::vector<Rational> coords, const PrimeContext& ctx);
HeisElement mul(const HeisElement& a, const HeisElement& b, const PrimeContext& ctx);
HeisElement inv(const HeisElement& a, const PrimeContext& ctx);
HeisElement apply(const DiagAuto& alpha, const HeisElement& g, long n, const PrimeContext& ctx);
std::string to_string(const HeisElement& a);

enum class Direction { Forward, Backward };

/// alpha^n(g) -> 1 as n -> infinity (forward) or -infinity (backward).
bool contraction_membership(const HeisElement& g, const DiagAuto& alpha, Direction direction, const PrimeContext& ctx);
/// The alpha-orbit of g is bounded in both directions.
bool levi_membership(const HeisElement& g, const DiagAuto& alpha, const PrimeContext& ctx);
/// g lies in U_alpha U_{alpha^-1}.
bool product_set_membership(const HeisElement& g, const DiagAuto& alpha, const PrimeContext& ctx);

/// Deterministic search grid: 0, then +-p^-k for k = 0..depth.
std::vector<Rational> search_grid(const PrimeContext& ctx, int depth);

struct TraceStep {
  std::string op;  // "mul", "inv" or "apply"
  std::vector<HeisElement> operands;
  HeisElement result;
};

struct ClosureWitness {
  HeisElement s1, s2, product;
  std::vector<TraceStep> trace;
};

struct ClosureResult {
  /// No violating pair was found in the searched range.
  bool closed = true;
  std::optional<ClosureWitness> first;
  /// Every violating pair found, in search order, up to the collection cap.
  std::vector<ClosureWitness> witnesses;
  std::size_t pairs_examined = 0;
  bool budget_exhausted = false;
};

struct SearchLimits {
  int depth = 4;
  std::size_t pair_budget = 40000;
  std::size_t conjugation_budget = 1000000;
  std::size_t witness_cap = 4096;
};

/// Searches products s1 s2 of elements of S = U_alpha U_{alpha^-1} (each
/// built from grid coordinates) for one that leaves S.
ClosureResult product_set_closure_witness(const DiagAuto& alpha, const PrimeContext& ctx,
                                          const SearchLimits& limits = {}, const CancellationToken& cancel = {});
/// Re-derives s1, s2 membership and the product, and checks the trace.
bool verify(const ClosureWitness& w, const DiagAuto& alpha, const PrimeContext& ctx);

struct NormalizationWitness {
  /// conj = outer * inner * outer^-1 leaves the group that contains inner.
  HeisElement outer, inner, conj;
  std::vector<TraceStep> trace;
};

struct NormalizationResult {
  /// u in U_alpha, v in U_{alpha^-1}, u v u^-1 not in U_{alpha^-1}.
  NormalizationWitness u_moves_v;
  /// v in U_{alpha^-1}, u in U_alpha, v u v^-1 not in U_alpha.
  NormalizationWitness v_moves_u;
};

/// Throws NoWitness when either direction has none within the limits.
NormalizationResult normalization_witness(const DiagAuto& alpha, const PrimeContext& ctx,
                                          const SearchLimits& limits = {}, const CancellationToken& cancel = {});
bool verify(const NormalizationWitness& w, const DiagAuto& alpha, Direction inner_direction, const PrimeContext& ctx);

/// The ascending central series {1} < Z < G has layers on which alpha acts
/// by the centre exponents and by the remaining exponents; true iff no layer
/// exponent is zero. A true result is cross-checked against the product-set
/// search, which must report "closed" (InvariantFailure otherwise).
bool central_series_check(const DiagAuto& alpha, const PrimeContext& ctx, const SearchLimits& limits = {});

/// exp of a nilpotent matrix as the finite exponential series.
Matrix exp_nilpotent(const Matrix& x);
/// theta_g(t) = exp(t log g).
HeisPoint one_param(const HeisPoint& g, const Rational& t);
/// Matrix of Ad(g) in the basis X = E01, Y = E12, Z = E02 of the Lie algebra.
Matrix adjoint(const HeisPoint& g);
Matrix heis_matrix(const HeisPoint& g);

}  // namespace padyn
