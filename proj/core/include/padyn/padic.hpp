#pragma once

#include <cstdint>
#include <vector>

#include "padyn/cancel.hpp"
#include "padyn/polynomial.hpp"
#include "padyn/rational.hpp"

namespace padyn {

/// Capped relative-precision p-adic number: p^valuation * (d_0 + d_1 p + ...),
/// d_0 != 0, with `digits().size()` significant digits. Only the Hensel
/// machinery needs finite precision; everything else is exact.
class PadicApprox {
 public:
  /// The zero marker.
  explicit PadicApprox(std::uint64_t p) : p_(p) {}

  /// First ctx.precision() digits of x.
  static PadicApprox from_rational(const Rational& x, const PrimeContext& ctx);
  static PadicApprox from_rational(const Rational& x, const PrimeContext& ctx, int digits);

  bool is_zero() const { return digits_.empty(); }
  std::uint64_t prime() const { return p_; }
  long valuation() const { return valuation_; }
  /// Relative precision (number of retained digits); 0 for the zero marker.
  int precision() const { return static_cast<int>(digits_.size()); }
  /// valuation + precision: the value is known modulo p^absolute_precision.
  long absolute_precision() const { return valuation_ + precision(); }
  const std::vector<std::uint64_t>& digits() const { return digits_; }

  /// The exact rational p^v * sum d_i p^i represented by the digits.
  Rational to_rational() const;

  // Arithmetic keeps the weaker of the operand precisions; a result whose
  // relative precision would fall under PrimeContext::kMinPrecision raises
  // PrecisionExhausted instead of returning fewer digits.
  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
  PadicApprox operator-() const;

  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;

 private:
  static PadicApprox with_absolute_precision(const Rational& x, std::uint64_t p, long abs_prec);

  std::uint64_t p_;
  long valuation_ = 0;
  std::vector<std::uint64_t> digits_;
};

struct HenselFactors {
  Polynomial g;  ///< monic, g = g0 mod p
  Polynomial h;  ///< h = h0 mod p
  int precision; ///< g*h = f mod p^precision
};

/// Lifts a coprime factorisation f = g0*h0 (mod p) to f = g*h (mod p^K),
/// K = ctx.precision(), by quadratic Hensel iteration.
///
/// f must have integral coefficients and be primitive enough that
/// f = g0*h0 mod p; g0 must have a unit leading coefficient (it is made
/// monic first). Leading coefficients of f and h0 may be non-units, which
/// is what separating one Newton slope from the others requires.
/// Coefficients are returned as symmetric residues modulo p^K, so an exact
/// integer factorisation with small coefficients comes back unchanged.
///
/// Throws NotCoprime when g0 and h0 share a factor mod p (their resultant
/// has positive valuation), InvalidInput when the congruence f = g0*h0 fails,
/// and PrecisionExhausted if the lifted product does not verify mod p^K.
HenselFactors hensel_lift(const Polynomial& f, const Polynomial& g0, const Polynomial& h0,
                          const PrimeContext& ctx, const CancellationToken& cancel = {});

}  // namespace padyn
