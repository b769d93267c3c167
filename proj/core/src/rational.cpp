#include "padyn/rational.hpp"

#include <array>
#include <cctype>

#include "padyn/errors.hpp"

namespace padyn {

long Valuation::value() const {
  if (!value_) throw InvalidInput("valuation of zero is infinite");
  return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  return a.value() <=> b.value();
}

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(a.value() + b.value());
}

Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<u64, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : bases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : bases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeContext::PrimeContext(std::uint64_t p, int precision, int guard)
    : p_(p), precision_(precision), guard_(guard) {
  if (!is_prime_u64(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (precision < kMinPrecision) {
    throw InvalidInput("precision must be at least " + std::to_string(kMinPrecision));
  }
  if (guard < 0 || guard >= precision) throw InvalidInput("guard band out of range");
  mpz_import(pz_.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
}

Integer PrimeContext::power_z(unsigned long k) const {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), pz_.get_mpz_t(), k);
  return r;
}

Rational PrimeContext::power(long k) const {
  if (k >= 0) return Rational(power_z(static_cast<unsigned long>(k)));
  Rational r(Integer(1), power_z(static_cast<unsigned long>(-k)));
  r.canonicalize();
  return r;
}

Valuation valuation(const Integer& n, const Integer& p) {
  if (n == 0) return Valuation::infinity();
  Integer rest;
  mp_bitcnt_t v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Valuation(static_cast<long>(v));
}

Valuation valuation(const Rational& x, const PrimeContext& ctx) {
  if (x == 0) return Valuation::infinity();
  const long vn = valuation(x.get_num(), ctx.prime_z()).value();
  const long vd = valuation(x.get_den(), ctx.prime_z()).value();
  return Valuation(vn - vd);
}

long finite_valuation(const Rational& x, const PrimeContext& ctx) {
  return valuation(x, ctx).value();
}

Rational unit_part(const Rational& x, const PrimeContext& ctx) {
  if (x == 0) return x;
  Rational r = x * ctx.power(-finite_valuation(x, ctx));
  r.canonicalize();
  return r;
}

Integer residue(const Rational& x, const Integer& modulus) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0) {
    if (modulus == 1) return Integer(0);
    throw InvalidInput("denominator not invertible modulo p^k");
  }
  Integer r = x.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Integer symmetric_residue(const Integer& a, const Integer& modulus) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
  if (2 * r > modulus) r -= modulus;
  return r;
}

Rational reduce_modulo(const Rational& x, long k, const PrimeContext& ctx) {
  if (x == 0) return x;
  const long v = finite_valuation(x, ctx);
  if (v >= k) return Rational(0);
  const long e = v < 0 ? -v : 0;
  // x * p^e is integral; keep its digits below position k + e.
  Rational scaled = x * ctx.power(e);
  const Integer modulus = ctx.power_z(static_cast<unsigned long>(k + e));
  Rational r(residue(scaled, modulus), ctx.power_z(static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' ) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  if (den.front() == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace padyn
