#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "padyn/errors.hpp"
#include "padyn/padic.hpp"

namespace padyn {
namespace {

// f == g mod p^k coefficientwise.
bool congruent(const Polynomial& f, const Polynomial& g, long k, const PrimeContext& ctx) {
  const Polynomial d = f - g;
  for (const auto& c : d.coefficients()) {
    if (valuation(c, ctx) < Valuation(k)) return false;
  }
  return true;
}

Polynomial random_poly(std::mt19937& rng, long degree, bool monic) {
  std::vector<Rational> c;
  for (long i = 0; i < degree; ++i) c.emplace_back(testing::uniform(rng, -9, 9));
  c.emplace_back(monic ? 1 : testing::uniform(rng, 1, 9));
  return Polynomial(c);
}

TEST(PadicApprox, DigitsReproduceTheValueModuloPrecision) {
  std::mt19937 rng(17);
  for (std::uint64_t p : {2, 3, 7}) {
    const PrimeContext ctx(p, 20);
    for (int i = 0; i < 200; ++i) {
      const Rational x = testing::random_rational(rng, 5000, 300);
      const PadicApprox a = PadicApprox::from_rational(x, ctx);
      if (x == 0) {
        EXPECT_TRUE(a.is_zero());
        continue;
      }
      EXPECT_EQ(Valuation(a.valuation()), valuation(x, ctx));
      EXPECT_EQ(a.precision(), 20);
      EXPECT_GE(valuation(x - a.to_rational(), ctx), Valuation(a.absolute_precision()));
      for (auto d : a.digits()) EXPECT_LT(d, p);
      EXPECT_NE(a.digits().front(), 0U);
    }
  }
}

TEST(PadicApprox, ArithmeticMatchesExactArithmetic) {
  std::mt19937 rng(23);
  const PrimeContext ctx(5, 24);
  for (int i = 0; i < 200; ++i) {
    const Rational x = testing::random_rational(rng, 900, 40), y = testing::random_rational(rng, 900, 40);
    if (x == 0 || y == 0) continue;
    const PadicApprox a = PadicApprox::from_rational(x, ctx), b = PadicApprox::from_rational(y, ctx);
    const PadicApprox prod = a * b;
    EXPECT_GE(valuation(prod.to_rational() - x * y, ctx), Valuation(prod.absolute_precision()));
    try {
      const PadicApprox sum = a + b;
      EXPECT_GE(valuation(sum.to_rational() - (x + y), ctx), Valuation(sum.absolute_precision()));
    } catch (const PrecisionExhausted&) {
      // Heavy cancellation; the sum is not representable at this precision.
      EXPECT_GE(valuation(x + y, ctx), Valuation(std::min(a.absolute_precision(), b.absolute_precision()) - 4));
    }
  }
}

TEST(PadicApprox, CancellationBelowMinimumPrecisionThrows) {
  const PrimeContext ctx(3, 12, 2);
  const PadicApprox a = PadicApprox::from_rational(Rational(1), ctx);
  const PadicApprox b = PadicApprox::from_rational(Rational(1 + 19683), ctx);
  EXPECT_THROW(a - b, PrecisionExhausted);
}

TEST(Hensel, ExactFactorisationComesBackUnchanged) {
  const PrimeContext ctx(5, 16);
  const Polynomial g{-2, 1};     // x - 2
  const Polynomial h{-3, 0, 1};  // x^2 - 3
  const HenselFactors r = hensel_lift(g * h, g, h, ctx);
  EXPECT_EQ(r.g, g);
  EXPECT_EQ(r.h, h);
  EXPECT_EQ(r.precision, 16);
}

TEST(Hensel, LiftsRandomCoprimeFactorisations) {
  std::mt19937 rng(29);
  for (std::uint64_t p : {3, 5, 7}) {
    const PrimeContext ctx(p, 30);
    int lifted = 0;
    for (int i = 0; i < 60; ++i) {
      const Polynomial g = random_poly(rng, testing::uniform(rng, 1, 3), true);
      const Polynomial h = random_poly(rng, testing::uniform(rng, 1, 3), true);
      // Perturb f by p so that f = g h only modulo p.
      Polynomial f = g * h + Polynomial::constant(Rational(static_cast<long>(p) * testing::uniform(rng, -3, 3)));
      try {
        const HenselFactors r = hensel_lift(f, g, h, ctx);
        EXPECT_TRUE(r.g.is_monic());
        EXPECT_TRUE(congruent(r.g, g, 1, ctx));
        EXPECT_TRUE(congruent(r.h, h, 1, ctx));
        EXPECT_TRUE(congruent(r.g * r.h, f, 30, ctx));
        ++lifted;
      } catch (const NotCoprime&) {
        // g and h share a root mod p; the perturbation cannot be lifted.
      }
    }
    EXPECT_GT(lifted, 20);
  }
}

TEST(Hensel, NonUnitLeadingCoefficientSeparatesSlopes) {
  // f = (x - 1)(3x - 1): roots 1 and 1/3. Modulo 3, f = (x - 1)(-1).
  const PrimeContext ctx(3, 20);
  const Polynomial f = Polynomial{-1, 1} * Polynomial{-1, 3};
  const HenselFactors r = hensel_lift(f, Polynomial{-1, 1}, Polynomial{-1}, ctx);
  EXPECT_TRUE(congruent(r.g * r.h, f, 20, ctx));
  EXPECT_EQ(r.g, (Polynomial{-1, 1}));
}

TEST(Hensel, Errors) {
  const PrimeContext ctx(3, 12);
  const Polynomial x1{-1, 1};
  EXPECT_THROW(hensel_lift(x1 * x1, x1, x1, ctx), NotCoprime);
  EXPECT_THROW(hensel_lift(x1 * Polynomial{-2, 1}, x1, Polynomial{0, 1}, ctx), InvalidInput);
}

}  // namespace
}  // namespace padyn
