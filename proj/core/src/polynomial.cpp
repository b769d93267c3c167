#include "padyn/polynomial.hpp"

#include "padyn/errors.hpp"

namespace padyn {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial f = constant(1);
  for (const auto& r : roots) f = f * Polynomial({-r, Rational(1)});
  return f;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  Rational pw = 1;
  for (auto& a : v) {
    a *= pw;
    pw *= c;
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  for (auto& a : v) a *= c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw InvalidInput("zero polynomial has no monic form");
  return scaled(1 / leading());
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem(coeffs_);
  const long dd = divisor.degree();
  const long n = degree();
  if (n < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(n - dd + 1), Rational(0));
  for (long i = n; i >= dd; --i) {
    Rational c = rem[i] / divisor.leading();
    quot[i - dd] = c;
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += format_rational(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace padyn
