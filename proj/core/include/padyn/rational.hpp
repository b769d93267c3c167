#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace padyn {

using Integer = mpz_class;
/// Exact rational in lowest terms with positive denominator. This is the
/// scalar of every exact computation in the library.
using Rational = mpq_class;

/// p-adic valuation: an integer or +infinity (the valuation of zero).
class Valuation {
 public:
  constexpr Valuation() = default;  // +infinity
  constexpr explicit Valuation(long v) : value_(v) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  /// Finite value; must not be called on infinity.
  long value() const;

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  /// "inf" or the decimal integer.
  std::string to_string() const;

 private:
  std::optional<long> value_;
};

Valuation operator+(const Valuation& a, const Valuation& b);
Valuation min(const Valuation& a, const Valuation& b);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// A prime together with the working precision (p-adic digits) used by the
/// finite-precision parts of the library, plus the guard band consulted
/// whenever an approximate quantity must be classified as zero or nonzero.
class PrimeContext {
 public:
  static constexpr int kMinPrecision = 4;
  static constexpr int kDefaultPrecision = 64;
  static constexpr int kDefaultGuard = 8;

  explicit PrimeContext(std::uint64_t p, int precision = kDefaultPrecision,
                        int guard = kDefaultGuard);

  std::uint64_t prime() const { return p_; }
  const Integer& prime_z() const { return pz_; }
  int precision() const { return precision_; }
  int guard() const { return guard_; }

  PrimeContext with_precision(int precision) const {
    return PrimeContext(p_, precision, guard_);
  }

  /// p^k for any integer k (negative gives 1/p^|k|).
  Rational power(long k) const;
  Integer power_z(unsigned long k) const;

 private:
  std::uint64_t p_;
  Integer pz_;
  int precision_;
  int guard_;
};

Valuation valuation(const Integer& n, const Integer& p);
Valuation valuation(const Rational& x, const PrimeContext& ctx);
/// Valuation of a value known to be nonzero; throws InvalidInput on zero.
long finite_valuation(const Rational& x, const PrimeContext& ctx);

inline bool is_integral(const Rational& x, const PrimeContext& ctx) {
  return valuation(x, ctx) >= Valuation(0);
}

/// x = p^v(x) * unit; returns the unit (zero stays zero).
Rational unit_part(const Rational& x, const PrimeContext& ctx);

/// Residue of an integral rational (unit denominator) modulo m = p^k,
/// in [0, m).
Integer residue(const Rational& x, const Integer& modulus);
/// Symmetric representative in (-m/2, m/2].
Integer symmetric_residue(const Integer& a, const Integer& modulus);

/// Canonical representative of x + p^k Z_p: the unique rational with only
/// p-power denominator whose expansion has no digits at positions >= k.
Rational reduce_modulo(const Rational& x, long k, const PrimeContext& ctx);

/// Fractional part: canonical representative of x + Z_p (zero, or a value
/// of negative valuation with digits strictly below p^0 only).
inline Rational fractional_part(const Rational& x, const PrimeContext& ctx) {
  return reduce_modulo(x, 0, ctx);
}

/// "num/den" with the denominator omitted when it is 1.
std::string format_rational(const Rational& x);
/// Accepts "n", "n/d" (with optional sign); throws InvalidInput.
Rational parse_rational(std::string_view text);

}  // namespace padyn
