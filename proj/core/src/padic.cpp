#include "padyn/padic.hpp"

#include <algorithm>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

Integer to_integer(std::uint64_t p) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return z;
}

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

PadicApprox PadicApprox::from_rational(const Rational& x, const PrimeContext& ctx) {
  return from_rational(x, ctx, ctx.precision());
}

PadicApprox PadicApprox::from_rational(const Rational& x, const PrimeContext& ctx, int digits) {
  if (x == 0) return PadicApprox(ctx.prime());
  const long v = finite_valuation(x, ctx);
  return with_absolute_precision(x, ctx.prime(), v + digits);
}

PadicApprox PadicApprox::with_absolute_precision(const Rational& x, std::uint64_t p, long abs_prec) {
  PadicApprox out(p);
  if (x == 0) return out;
  const Integer pz = to_integer(p);
  Integer rest;
  const long vn = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()));
  const long vd = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t()));
  const long v = vn - vd;
  const long rel = abs_prec - v;
  if (rel <= 0) return out;
  Rational unit = x;
  if (v > 0) unit /= Rational(ipow(pz, static_cast<unsigned long>(v)));
  if (v < 0) unit *= Rational(ipow(pz, static_cast<unsigned long>(-v)));
  Integer r = residue(unit, ipow(pz, static_cast<unsigned long>(rel)));
  out.valuation_ = v;
  out.digits_.reserve(static_cast<std::size_t>(rel));
  for (long i = 0; i < rel; ++i) {
    Integer d;
    mpz_fdiv_qr(r.get_mpz_t(), d.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
    out.digits_.push_back(d.get_ui());
  }
  return out;
}

Rational PadicApprox::to_rational() const {
  if (is_zero()) return 0;
  const Integer pz = to_integer(p_);
  Integer acc = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) acc = acc * pz + Integer(static_cast<unsigned long>(*it));
  Rational r(acc);
  if (valuation_ >= 0) {
    r *= Rational(ipow(pz, static_cast<unsigned long>(valuation_)));
  } else {
    r /= Rational(ipow(pz, static_cast<unsigned long>(-valuation_)));
  }
  r.canonicalize();
  return r;
}

namespace {

PadicApprox checked(PadicApprox r) {
  if (r.precision() < PrimeContext::kMinPrecision) {
    throw PrecisionExhausted("p-adic result retains " + std::to_string(r.precision()) +
                             " digits, below the floor of " +
                             std::to_string(PrimeContext::kMinPrecision));
  }
  return r;
}

}  // namespace

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
  if (a.p_ != b.p_) throw InvalidInput("p-adic operands over different primes");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long abs = std::min(a.absolute_precision(), b.absolute_precision());
  return checked(PadicApprox::with_absolute_precision(a.to_rational() + b.to_rational(), a.p_, abs));
}

PadicApprox PadicApprox::operator-() const {
  if (is_zero()) return *this;
  return with_absolute_precision(-to_rational(), p_, absolute_precision());
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
  if (a.p_ != b.p_) throw InvalidInput("p-adic operands over different primes");
  if (a.is_zero() || b.is_zero()) return PadicApprox(a.p_);
  const int rel = std::min(a.precision(), b.precision());
  const long v = a.valuation_ + b.valuation_;
  return checked(PadicApprox::with_absolute_precision(a.to_rational() * b.to_rational(), a.p_, v + rel));
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z/p^k, on integer coefficient vectors (low to high).

namespace {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(std::move(r), m);
}

ZPoly sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(std::move(r), m);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(std::move(r), m);
}

ZPoly scale(const ZPoly& a, const Integer& c, const Integer& m) {
  ZPoly r(a);
  for (auto& x : r) x *= c;
  return reduce(std::move(r), m);
}

// Division by a polynomial whose leading coefficient is invertible mod m.
std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  Integer inv;
  if (b.empty() || mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InvalidInput("polynomial division by a non-invertible leading coefficient");
  }
  ZPoly rem = reduce(a, m);
  if (rem.size() < b.size()) return {{}, rem};
  ZPoly quot(rem.size() - b.size() + 1, Integer(0));
  const std::size_t db = b.size() - 1;
  for (std::size_t k = rem.size() - db; k-- > 0;) {
    Integer c = rem[k + db] * inv;
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
  }
  return {reduce(std::move(quot), m), reduce(std::move(rem), m)};
}

struct ExtGcd {
  ZPoly gcd, s, t;
};

// s*a + t*b = gcd over F_p, gcd monic.
ExtGcd ext_gcd(const ZPoly& a, const ZPoly& b, const Integer& p) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ZPoly s2 = sub(s0, mul(q, s1, p), p);
    ZPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, s0, t0};
  Integer inv;
  mpz_invert(inv.get_mpz_t(), r0.back().get_mpz_t(), p.get_mpz_t());
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

ZPoly integral_residues(const Polynomial& f, const PrimeContext& ctx, const Integer& m,
                        const char* name) {
  ZPoly out;
  for (const auto& c : f.coefficients()) {
    if (!is_integral(c, ctx)) {
      throw InvalidInput(std::string(name) + " must have p-integral coefficients");
    }
    out.push_back(residue(c, m));
  }
  trim(out);
  return out;
}

Polynomial to_polynomial(const ZPoly& a, const Integer& m) {
  std::vector<Rational> c;
  for (const auto& x : a) c.emplace_back(symmetric_residue(x, m));
  return Polynomial(std::move(c));
}

}  // namespace

HenselFactors hensel_lift(const Polynomial& f, const Polynomial& g0, const Polynomial& h0,
                          const PrimeContext& ctx, const CancellationToken& cancel) {
  const Integer& p = ctx.prime_z();
  const int K = ctx.precision();
  if (f.is_zero() || g0.is_zero() || h0.is_zero()) throw InvalidInput("hensel_lift on a zero polynomial");

  ZPoly fz = integral_residues(f, ctx, ctx.power_z(static_cast<unsigned long>(K)), "f");
  ZPoly gbar = integral_residues(g0, ctx, p, "g0");
  ZPoly hbar = integral_residues(h0, ctx, p, "h0");
  if (gbar.empty() || static_cast<long>(gbar.size()) - 1 != g0.degree()) {
    throw InvalidInput("g0 must have a unit leading coefficient");
  }
  // Make g0 monic, moving the unit into h0.
  Integer lc = gbar.back(), lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), p.get_mpz_t());
  gbar = scale(gbar, lc_inv, p);
  hbar = scale(hbar, lc, p);

  if (reduce(fz, p) != mul(gbar, hbar, p)) {
    throw InvalidInput("f is not congruent to g0*h0 modulo p");
  }
  ExtGcd eg = ext_gcd(gbar, hbar, p);
  if (eg.gcd.size() != 1) {
    throw NotCoprime("g0 and h0 share a common factor modulo p (resultant has positive valuation)");
  }

  ZPoly g = gbar, h = hbar, s = eg.s, t = eg.t;
  int m = 1;
  while (m < K) {
    cancel.poll();
    const int m2 = std::min(2 * m, K);
    const Integer M = ctx.power_z(static_cast<unsigned long>(m2));
    ZPoly e = sub(reduce(fz, M), mul(g, h, M), M);
    auto [q, r] = divmod(mul(t, e, M), g, M);
    ZPoly g_next = add(g, r, M);
    ZPoly h_next = add(h, add(mul(s, e, M), mul(q, h, M), M), M);
    g = std::move(g_next);
    h = std::move(h_next);
    if (m2 < K) {
      ZPoly b = sub(add(mul(s, g, M), mul(t, h, M), M), ZPoly{Integer(1)}, M);
      ZPoly s2 = sub(s, mul(s, b, M), M);
      ZPoly t2 = sub(t, mul(t, b, M), M);
      auto [q2, r2] = divmod(t2, g, M);
      t = std::move(r2);
      s = add(s2, mul(q2, h, M), M);
    }
    m = m2;
  }

  const Integer MK = ctx.power_z(static_cast<unsigned long>(K));
  if (!sub(reduce(fz, MK), mul(g, h, MK), MK).empty() || reduce(g, p) != gbar ||
      reduce(h, p) != hbar || g.size() != gbar.size()) {
    throw PrecisionExhausted("Hensel lifting did not verify modulo p^" + std::to_string(K));
  }
  return {to_polynomial(g, MK), to_polynomial(h, MK), K};
}

}  // namespace padyn
