#pragma once

#include <string>
#include <utility>
#include <vector>

#include "padyn/rational.hpp"

namespace padyn {

/// Univariate polynomial with exact rational coefficients, stored
/// low-to-high. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// Product of (x - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Rational evaluate(const Rational& x) const;
  /// f(c * x).
  Polynomial scale_argument(const Rational& c) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial monic() const;

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace padyn
